#pragma once

#include <cstddef>
#include <span>
#include <vector>

/// Bessel functions of order 1/2 and 3/2 in closed form, and the positive
/// zeros of J_{3/2}(mu * xi0) that index the finite Hankel basis.
namespace hankelflow::bessel {

/// Below this argument J_{3/2} is evaluated from its power series.
inline constexpr double kSeriesThreshold = 1e-2;

/// J_{1/2}(x) = sqrt(2 / (pi x)) sin x, for x > 0.
double j_half(double x);

/// J_{3/2}(x) for x >= 0. Throws DomainError for negative or non-finite x.
double j_three_half(double x);

/// J_{3/2}(x) / x^{3/2}. Finite at x = 0 where it equals sqrt(2/pi) / 3.
double j_three_half_scaled(double x);

/// dJ_{3/2}/dx for x > 0.
double j_three_half_prime(double x);

/// k-th positive solution (k >= 1) of tan x = x, i.e. the k-th positive zero
/// of J_{3/2}. Lies in (k pi, k pi + pi/2).
double tan_root(std::size_t k);

/// Ordered positive roots mu_n of J_{3/2}(mu xi0) = 0 together with
/// J'_{3/2}(mu_n xi0). Immutable once built.
class RootTable {
 public:
  RootTable(double xi0, std::vector<double> roots, std::vector<double> deriv_at_root);

  double xi0() const noexcept { return xi0_; }
  std::size_t size() const noexcept { return roots_.size(); }
  std::span<const double> roots() const noexcept { return roots_; }
  std::span<const double> deriv_at_root() const noexcept { return deriv_; }

  double mu(std::size_t n) const { return roots_.at(n); }
  double deriv(std::size_t n) const { return deriv_.at(n); }

  /// (xi0^2 / 2) [J'_{3/2}(mu_n xi0)]^2, the squared norm of mode n.
  double norm(std::size_t n) const;

  /// First `count` roots of this table.
  RootTable truncated(std::size_t count) const;

 private:
  double xi0_;
  std::vector<double> roots_;
  std::vector<double> deriv_;
};

/// First `count` roots of J_{3/2}(mu xi0) = 0. Each root is bracketed in
/// (n pi / xi0, (n pi + pi/2) / xi0), bisected to width 1e-8 and polished by
/// at most five Newton steps.
RootTable find_roots(double xi0, std::size_t count);

}  // namespace hankelflow::bessel
