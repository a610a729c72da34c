#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "hankelflow/bessel.hpp"
#include "hankelflow/spline.hpp"

/// Finite Hankel transform of order 3/2 on [0, xi0]:
///
///   forward:  c_n  = int_0^xi0 xi f(xi) J_{3/2}(mu_n xi) dxi
///   inverse:  f(xi) = (2 / xi0^2) sum_n J_{3/2}(mu_n xi) / [J'_{3/2}(mu_n xi0)]^2 c_n
namespace hankelflow::hankel {

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr std::size_t kDefaultModes = 50;

/// A function on [0, xi0], either analytic or a natural cubic spline through
/// samples spanning exactly [0, xi0].
class RadialProfile {
 public:
  static RadialProfile analytic(std::function<double(double)> f, double xi0);
  static RadialProfile sampled(std::vector<double> xi, std::vector<double> values);

  double operator()(double xi) const;
  double xi0() const noexcept { return xi0_; }

  bool is_sampled() const noexcept { return spline_ != nullptr; }
  /// Sample nodes and values; empty for analytic profiles.
  std::span<const double> sample_nodes() const;
  std::span<const double> sample_values() const;

 private:
  RadialProfile(std::function<double(double)> f, std::shared_ptr<const CubicSpline> spline,
                double xi0)
      : f_(std::move(f)), spline_(std::move(spline)), xi0_(xi0) {}

  std::function<double(double)> f_;
  std::shared_ptr<const CubicSpline> spline_;
  double xi0_;
};

struct SpectralCoeffs {
  bessel::RootTable roots;
  std::vector<double> values;
};

/// Quadrature breakpoints for mode n: 0, the interior zeros of
/// J_{3/2}(mu_n xi), and xi0.
std::vector<double> mode_breakpoints(const bessel::RootTable& roots, std::size_t n);

/// int_0^xi0 xi f(xi) J_{3/2}(mu_n xi) dxi for every mode in `roots`.
/// Throws DomainError when f.xi0() != roots.xi0(), QuadratureError when a mode
/// fails to converge.
SpectralCoeffs forward(const RadialProfile& f, const bessel::RootTable& roots,
                       double quad_tol = kDefaultQuadTol);

/// Weighted-Bessel-series partial sum over every stored mode.
struct InverseValue {
  double value;
  double last_term;  // magnitude of the final series term
};

/// Inverse transform at xi in [0, xi0]. Returns 0 at xi = 0 by continuity.
InverseValue inverse(const SpectralCoeffs& c, double xi);

}  // namespace hankelflow::hankel
