#include "hankelflow/heat_series.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "hankelflow/errors.hpp"

namespace hankelflow::heat_series {

RadialPolynomial::RadialPolynomial(Polynomial p, double xi0) : poly_(std::move(p)), xi0_(xi0) {
  if (!(xi0_ > 0.0) || !std::isfinite(xi0_)) {
    throw std::invalid_argument("RadialPolynomial: xi0 must be positive");
  }
  for (double c : poly_.coeffs()) {
    if (!std::isfinite(c)) throw std::invalid_argument("RadialPolynomial: non-finite coefficient");
  }
}

RadialPolynomial RadialPolynomial::from_temperature(const std::vector<double>& t0_coeffs,
                                                    double xi0) {
  std::vector<double> shifted(t0_coeffs.size() + 1, 0.0);
  std::copy(t0_coeffs.begin(), t0_coeffs.end(), shifted.begin() + 1);
  return RadialPolynomial(std::move(shifted), xi0);
}

std::vector<Polynomial> series_terms(const RadialPolynomial& p0) {
  std::vector<Polynomial> terms;
  Polynomial current = p0.poly();
  double factorial = 1.0;
  for (std::size_t n = 0; !current.is_zero(); ++n) {
    if (n > 0) factorial *= static_cast<double>(n);
    terms.push_back(current * (1.0 / factorial));
    current = current.derivative().derivative();
  }
  return terms;
}

HeatSolution evolve(const RadialPolynomial& p0, double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("heat_series::evolve: t must be finite and >= 0");
  }
  Polynomial sum;
  double power = 1.0;
  for (const Polynomial& term : series_terms(p0)) {
    sum += term * power;
    power *= t;
  }
  return {RadialPolynomial(std::move(sum), p0.xi0()), t};
}

double temperature(const HeatSolution& sol, double xi) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) {
    throw DomainError("heat_series::temperature: xi must be finite and >= 0");
  }
  const Polynomial& p = sol.evolved.poly();
  if (xi == 0.0) {
    if (p.coeff(0) != 0.0) {
      throw DomainError("heat_series::temperature: xi T^ has a constant term, T is singular at 0");
    }
    return sol.t + p.coeff(1);
  }
  return sol.t + p(xi) / xi;
}

double t_hat_derivative(const HeatSolution& sol, double xi) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) {
    throw DomainError("heat_series::t_hat_derivative: xi must be finite and >= 0");
  }
  const auto c = sol.evolved.poly().coeffs();
  const double c0 = c.empty() ? 0.0 : c[0];
  if (xi == 0.0) {
    if (c0 != 0.0) {
      throw DomainError("heat_series::t_hat_derivative: singular at xi = 0");
    }
    return sol.evolved.poly().coeff(2);
  }
  // evolved / xi = c0 / xi + c1 + c2 xi + c3 xi^2 + ...
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 2;) {
    acc = acc * xi + static_cast<double>(k - 1) * c[k];
  }
  return acc - c0 / (xi * xi);
}

PolynomialFit project_to_polynomial(const hankel::RadialProfile& samples, int degree) {
  if (degree < 0) throw std::invalid_argument("project_to_polynomial: negative degree");
  const double xi0 = samples.xi0();

  std::vector<double> xs;
  std::vector<double> ys;
  if (samples.is_sampled()) {
    xs.assign(samples.sample_nodes().begin(), samples.sample_nodes().end());
    ys.assign(samples.sample_values().begin(), samples.sample_values().end());
  } else {
    constexpr int kPoints = 201;
    for (int i = 0; i < kPoints; ++i) {
      const double x = xi0 * i / (kPoints - 1);
      xs.push_back(x);
      ys.push_back(samples(x));
    }
  }
  const auto cols = static_cast<Eigen::Index>(degree) + 1;
  const auto rows = static_cast<Eigen::Index>(xs.size());
  if (rows < cols) {
    throw RankDeficiencyError("project_to_polynomial: " + std::to_string(xs.size()) +
                              " samples cannot determine degree " + std::to_string(degree));
  }

  // Vandermonde in xi / xi0 keeps the columns comparably scaled.
  Eigen::MatrixXd vander(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double s = xs[static_cast<std::size_t>(i)] / xi0;
    double power = 1.0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      vander(i, j) = power;
      power *= s;
    }
    rhs(i) = ys[static_cast<std::size_t>(i)];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(vander);
  qr.setThreshold(1e-13);
  if (qr.rank() < cols) {
    throw RankDeficiencyError("project_to_polynomial: sample grid has rank " +
                              std::to_string(qr.rank()) + " < " + std::to_string(cols));
  }
  const Eigen::VectorXd scaled = qr.solve(rhs);

  std::vector<double> coeffs(static_cast<std::size_t>(cols));
  double inv_scale = 1.0;
  for (Eigen::Index j = 0; j < cols; ++j) {
    coeffs[static_cast<std::size_t>(j)] = scaled(j) * inv_scale;
    inv_scale /= xi0;
  }
  RadialPolynomial poly(std::move(coeffs), xi0);

  double max_residual = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    max_residual = std::max(max_residual, std::abs(poly(xs[i]) - ys[i]));
  }
  return {std::move(poly), max_residual};
}

}  // namespace hankelflow::heat_series
