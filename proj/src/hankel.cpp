#include "hankelflow/hankel.hpp"

#include <cmath>
#include <string>

#include "hankelflow/errors.hpp"
#include "hankelflow/quadrature.hpp"

namespace hankelflow::hankel {

RadialProfile RadialProfile::analytic(std::function<double(double)> f, double xi0) {
  if (!(xi0 > 0.0) || !std::isfinite(xi0)) {
    throw std::invalid_argument("RadialProfile: xi0 must be positive");
  }
  if (!f) throw std::invalid_argument("RadialProfile: empty callable");
  return RadialProfile(std::move(f), nullptr, xi0);
}

RadialProfile RadialProfile::sampled(std::vector<double> xi, std::vector<double> values) {
  if (xi.size() < 2) {
    throw std::invalid_argument("RadialProfile: need at least two samples");
  }
  if (xi.front() != 0.0) {
    throw DomainError("RadialProfile: samples must start at xi = 0");
  }
  const double xi0 = xi.back();
  auto spline = std::make_shared<const CubicSpline>(std::move(xi), std::move(values));
  for (double v : spline->values()) {
    if (!std::isfinite(v)) throw DomainError("RadialProfile: non-finite sample value");
  }
  return RadialProfile(nullptr, std::move(spline), xi0);
}

double RadialProfile::operator()(double xi) const {
  return spline_ ? (*spline_)(xi) : f_(xi);
}

std::span<const double> RadialProfile::sample_nodes() const {
  return spline_ ? spline_->nodes() : std::span<const double>{};
}

std::span<const double> RadialProfile::sample_values() const {
  return spline_ ? spline_->values() : std::span<const double>{};
}

std::vector<double> mode_breakpoints(const bessel::RootTable& roots, std::size_t n) {
  const double xi0 = roots.xi0();
  const double mu = roots.mu(n);
  std::vector<double> points;
  points.reserve(n + 2);
  points.push_back(0.0);
  for (std::size_t k = 0; k < n; ++k) {
    points.push_back(roots.mu(k) * xi0 / mu);
  }
  points.push_back(xi0);
  return points;
}

SpectralCoeffs forward(const RadialProfile& f, const bessel::RootTable& roots, double quad_tol) {
  if (std::abs(f.xi0() - roots.xi0()) > 1e-12 * roots.xi0()) {
    throw DomainError("hankel::forward: profile xi0 " + std::to_string(f.xi0()) +
                      " does not match root table xi0 " + std::to_string(roots.xi0()));
  }
  SpectralCoeffs out{roots, std::vector<double>(roots.size())};
  const quadrature::Options opts{.abs_tol = quad_tol};
  for (std::size_t n = 0; n < roots.size(); ++n) {
    const double mu = roots.mu(n);
    const auto integrand = [&](double xi) { return xi * f(xi) * bessel::j_three_half(mu * xi); };
    const auto breaks = mode_breakpoints(roots, n);
    try {
      out.values[n] = quadrature::integrate(integrand, breaks, opts).value;
    } catch (const QuadratureError& e) {
      throw QuadratureError("hankel::forward: mode " + std::to_string(n + 1) + ": " + e.what(),
                            e.error_estimate());
    }
  }
  return out;
}

InverseValue inverse(const SpectralCoeffs& c, double xi) {
  const double xi0 = c.roots.xi0();
  if (c.values.empty() || c.values.size() != c.roots.size()) {
    throw std::invalid_argument("hankel::inverse: coefficient/root count mismatch or empty");
  }
  if (!std::isfinite(xi) || xi < 0.0 || xi > xi0) {
    throw DomainError("hankel::inverse: xi = " + std::to_string(xi) + " outside [0, " +
                      std::to_string(xi0) + "]");
  }
  if (xi == 0.0) return {0.0, 0.0};
  const double scale = 2.0 / (xi0 * xi0);
  double sum = 0.0;
  double term = 0.0;
  for (std::size_t n = 0; n < c.values.size(); ++n) {
    const double d = c.roots.deriv(n);
    term = scale * bessel::j_three_half(c.roots.mu(n) * xi) / (d * d) * c.values[n];
    sum += term;
  }
  return {sum, std::abs(term)};
}

}  // namespace hankelflow::hankel
