#include "hankelflow/spectral_vorticity.hpp"

#include <cmath>
#include <string>

#include "hankelflow/errors.hpp"
#include "hankelflow/quadrature.hpp"

namespace hankelflow::spectral {
namespace {

void check_time(double t, const char* fn) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError(std::string(fn) + ": t must be finite and >= 0");
  }
}

// sum_n Phi_n mu_n^{3/2} Jscaled(mu_n xi) / [J'_n]^2, i.e. xi^{-3/2} times
// the inverse-series sum without the 2 / xi0^2 prefactor.
double scaled_series(const hankel::SpectralCoeffs& c, double xi) {
  double sum = 0.0;
  for (std::size_t n = 0; n < c.values.size(); ++n) {
    const double mu = c.roots.mu(n);
    const double d = c.roots.deriv(n);
    sum += c.values[n] * mu * std::sqrt(mu) * bessel::j_three_half_scaled(mu * xi) / (d * d);
  }
  return sum;
}

}  // namespace

std::vector<double> initial_mode_coeffs(const hankel::RadialProfile& omega0,
                                        const bessel::RootTable& roots, double quad_tol) {
  const auto phi_initial = hankel::RadialProfile::analytic(
      [&omega0](double xi) { return xi * std::sqrt(xi) * omega0(xi); }, omega0.xi0());
  return hankel::forward(phi_initial, roots, quad_tol).values;
}

std::vector<double> upsilon(const heat_series::HeatSolution& heat, const bessel::RootTable& roots,
                            double rayleigh, double quad_tol) {
  std::vector<double> out(roots.size(), 0.0);
  if (rayleigh == 0.0) return out;
  const auto slope = hankel::RadialProfile::analytic(
      [&heat](double xi) { return std::sqrt(xi) * heat_series::t_hat_derivative(heat, xi); },
      roots.xi0());
  // xi * (xi^{1/2} dT^/dxi) gives the xi^{3/2} weight.
  const auto coeffs = hankel::forward(slope, roots, quad_tol);
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = rayleigh * coeffs.values[n];
  return out;
}

std::vector<Polynomial> upsilon_in_time(const heat_series::RadialPolynomial& xi_t0,
                                        const bessel::RootTable& roots, double rayleigh,
                                        double quad_tol) {
  const auto terms = heat_series::series_terms(xi_t0);
  std::vector<std::vector<double>> by_mode(roots.size(), std::vector<double>(terms.size(), 0.0));
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const heat_series::HeatSolution piece{heat_series::RadialPolynomial(terms[k], xi_t0.xi0()), 0.0};
    const auto values = upsilon(piece, roots, rayleigh, quad_tol);
    for (std::size_t n = 0; n < roots.size(); ++n) by_mode[n][k] = values[n];
  }
  std::vector<Polynomial> out;
  out.reserve(roots.size());
  for (auto& c : by_mode) out.emplace_back(std::move(c));
  return out;
}

double decay_convolution(std::size_t k, double rate, double t) {
  if (t == 0.0) return 0.0;
  const double kk = static_cast<double>(k);
  const double x = rate * t;
  if (x < kk + 20.0) {
    // e^{-x} t^{k+1} sum_j x^j / (j! (k + j + 1)), all terms positive.
    double power = 1.0;
    double sum = 1.0 / (kk + 1.0);
    for (int j = 1; j < 1000; ++j) {
      power *= x / j;
      const double term = power / (kk + j + 1.0);
      sum += term;
      if (term <= 1e-17 * sum) break;
    }
    return std::exp(-x) * std::pow(t, kk + 1.0) * sum;
  }
  // Integration by parts, I_k = (t^k - k I_{k-1}) / rate; stable once x > k.
  double value = -std::expm1(-x) / rate;
  double power = 1.0;
  for (std::size_t j = 1; j <= k; ++j) {
    power *= t;
    value = (power - static_cast<double>(j) * value) / rate;
  }
  return value;
}

double phi_bar(const ModeState& mode, const std::function<double(double)>& upsilon_fn, double t,
               double ode_tol) {
  check_time(t, "phi_bar");
  if (!(mode.prandtl > 0.0)) throw DomainError("phi_bar: Prandtl number must be positive");
  const double rate = mode.prandtl * mode.mu * mode.mu;
  const double decay = mode.phi0 * std::exp(-rate * t);
  if (t == 0.0) return mode.phi0;
  const auto integrand = [&](double tau) { return std::exp(-rate * (t - tau)) * upsilon_fn(tau); };
  try {
    const auto conv = quadrature::integrate(integrand, 0.0, t, {.abs_tol = ode_tol});
    return decay - mode.prandtl * conv.value;
  } catch (const QuadratureError& e) {
    throw QuadratureError("phi_bar: convolution did not converge for mode " +
                              std::to_string(mode.root_index) + ": " + e.what(),
                          e.error_estimate());
  }
}

double phi_bar(const ModeState& mode, const Polynomial& upsilon_poly, double t) {
  check_time(t, "phi_bar");
  if (!(mode.prandtl > 0.0)) throw DomainError("phi_bar: Prandtl number must be positive");
  const double rate = mode.prandtl * mode.mu * mode.mu;
  double conv = 0.0;
  const auto c = upsilon_poly.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) conv += c[k] * decay_convolution(k, rate, t);
  return mode.phi0 * std::exp(-rate * t) - mode.prandtl * conv;
}

double omega_reduced(const VorticityField& field, double xi) {
  const double xi0 = field.coeffs.roots.xi0();
  if (!std::isfinite(xi) || xi < 0.0 || xi > xi0 * (1.0 + 1e-14)) {
    throw DomainError("omega_reduced: xi = " + std::to_string(xi) + " outside [0, xi0]");
  }
  return 2.0 / (xi0 * xi0) * scaled_series(field.coeffs, xi);
}

double omega_field(const VorticityField& field, double r, double z) {
  if (!std::isfinite(r) || !std::isfinite(z) || r < 0.0) {
    throw DomainError("omega_field: r must be >= 0 and coordinates finite");
  }
  const double xi = std::hypot(r, z);
  const double xi0 = field.coeffs.roots.xi0();
  if (xi > xi0 * (1.0 + 1e-14)) {
    throw DomainError("omega_field: point (" + std::to_string(r) + ", " + std::to_string(z) +
                      ") lies outside xi <= xi0");
  }
  if (r == 0.0) return 0.0;
  return r * omega_reduced(field, std::min(xi, xi0));
}

SpectralModel::SpectralModel(bessel::RootTable roots, heat_series::RadialPolynomial xi_t0,
                             std::vector<double> phi0, double prandtl, double rayleigh,
                             double quad_tol)
    : roots_(std::move(roots)),
      xi_t0_(std::move(xi_t0)),
      phi0_(std::move(phi0)),
      prandtl_(prandtl),
      rayleigh_(rayleigh) {
  if (!(prandtl_ > 0.0) || !std::isfinite(prandtl_)) {
    throw DomainError("SpectralModel: Prandtl number must be positive");
  }
  if (!std::isfinite(rayleigh_)) throw DomainError("SpectralModel: Rayleigh number not finite");
  if (phi0_.size() != roots_.size()) {
    throw std::invalid_argument("SpectralModel: initial coefficients do not match mode count");
  }
  if (std::abs(xi_t0_.xi0() - roots_.xi0()) > 1e-12 * roots_.xi0()) {
    throw DomainError("SpectralModel: heat data xi0 differs from root table xi0");
  }
  forcing_ = upsilon_in_time(xi_t0_, roots_, rayleigh_, quad_tol);
}

SpectralModel SpectralModel::from_profiles(bessel::RootTable roots,
                                           heat_series::RadialPolynomial xi_t0,
                                           const hankel::RadialProfile& omega0, double prandtl,
                                           double rayleigh, double quad_tol) {
  auto phi0 = initial_mode_coeffs(omega0, roots, quad_tol);
  return SpectralModel(std::move(roots), std::move(xi_t0), std::move(phi0), prandtl, rayleigh,
                       quad_tol);
}

ModeState SpectralModel::mode(std::size_t n) const {
  return {n + 1, roots_.mu(n), phi0_.at(n), prandtl_, rayleigh_};
}

VorticityField SpectralModel::vorticity(double t) const {
  check_time(t, "SpectralModel::vorticity");
  std::vector<double> values(roots_.size());
  for (std::size_t n = 0; n < values.size(); ++n) {
    values[n] = phi_bar(mode(n), forcing_[n], t);
  }
  return {hankel::SpectralCoeffs{roots_, std::move(values)}, t};
}

}  // namespace hankelflow::spectral
