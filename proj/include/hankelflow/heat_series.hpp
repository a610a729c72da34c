#pragma once

#include <vector>

#include "hankelflow/hankel.hpp"
#include "hankelflow/polynomial.hpp"

/// Operator-exponential solution of the reduced heat equation
///   d(xi T^)/dt = d^2(xi T^)/dxi^2,   T = t + T^,
/// realised exactly on polynomial initial data:
///   xi T^(xi, t) = sum_n t^n / n! D^{2n} [xi T0],   D = d/dxi.
/// The sum terminates after floor(deg / 2) + 1 terms.
namespace hankelflow::heat_series {

/// Polynomial in xi representing xi * T0(xi) on [0, xi0].
class RadialPolynomial {
 public:
  RadialPolynomial(Polynomial p, double xi0);
  RadialPolynomial(std::vector<double> coeffs, double xi0)
      : RadialPolynomial(Polynomial(std::move(coeffs)), xi0) {}

  /// xi * T0 for T0 given by `t0_coeffs` in powers of xi.
  static RadialPolynomial from_temperature(const std::vector<double>& t0_coeffs, double xi0);

  const Polynomial& poly() const noexcept { return poly_; }
  double xi0() const noexcept { return xi0_; }
  int degree() const noexcept { return poly_.degree(); }
  double operator()(double xi) const { return poly_(xi); }

 private:
  Polynomial poly_;
  double xi0_;
};

struct HeatSolution {
  RadialPolynomial evolved;  // xi T^(xi, t)
  double t;
};

/// Terms D^{2n} p0 / n! for n = 0 .. floor(deg/2); evolve() weights term n by t^n.
std::vector<Polynomial> series_terms(const RadialPolynomial& p0);

HeatSolution evolve(const RadialPolynomial& p0, double t);

/// T(xi, t) = t + evolved(xi) / xi. At xi = 0 returns the continuous limit
/// t + evolved'(0), which requires a zero constant coefficient.
double temperature(const HeatSolution& sol, double xi);

/// dT^/dxi = d/dxi [evolved(xi) / xi], exact.
double t_hat_derivative(const HeatSolution& sol, double xi);

struct PolynomialFit {
  RadialPolynomial poly;
  double max_residual;
};

/// Least-squares fit of the profile values by a polynomial of `degree`.
/// Sampled profiles are fitted at their nodes; analytic profiles at 201
/// uniform points on [0, xi0]. Throws RankDeficiencyError when the nodes
/// cannot determine `degree + 1` coefficients.
PolynomialFit project_to_polynomial(const hankel::RadialProfile& samples, int degree);

}  // namespace hankelflow::heat_series
