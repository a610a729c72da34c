#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hankelflow/spectral_vorticity.hpp"
#include "hankelflow/spline.hpp"

/// Velocity reconstruction from the vorticity mode series.
///
/// All velocity quantities share the mode integral
///   I(xi, t) = int_0^xi eta^{-3/2} sum_n Phi_n(t) J_{3/2}(mu_n eta) / [J'_n]^2 deta
/// with
///   u = 2 r z / (xi xi0^2) I,   v = -2 r^2 / (xi xi0^2) I,   dpsi/dxi = -2 r^2 / xi0^2 I.
namespace hankelflow::flow {

double mode_integral(const spectral::VorticityField& field, double xi,
                     double quad_tol = hankel::kDefaultQuadTol);

struct Velocity {
  double u;
  double v;
};

/// Pointwise velocity by direct quadrature. (0, 0) at the origin.
Velocity velocity(const spectral::VorticityField& field, double r, double z,
                  double quad_tol = hankel::kDefaultQuadTol);

/// dpsi/dxi with r held as a parameter.
double stream_derivative(const spectral::VorticityField& field, double r, double xi,
                         double quad_tol = hankel::kDefaultQuadTol);

/// I(xi) tabulated on Chebyshev-spaced nodes over [0, xi0] and interpolated
/// by a natural cubic spline.
class ModeIntegralTable {
 public:
  static constexpr std::size_t kDefaultNodes = 512;

  ModeIntegralTable(const spectral::VorticityField& field, std::size_t nodes = kDefaultNodes,
                    double quad_tol = hankel::kDefaultQuadTol);

  double operator()(double xi) const { return spline_(xi); }
  double xi0() const noexcept { return xi0_; }

 private:
  double xi0_;
  CubicSpline spline_;
};

/// Rectangular (r, z) lattice. A single-point axis sits at its max value.
struct Grid {
  std::size_t n_r = 1;
  std::size_t n_z = 1;
  double r_max = 0.0;
  double z_max = 0.0;
  double r_min = 0.0;
  double z_min = 0.0;

  double r(std::size_t i) const;
  double z(std::size_t j) const;
  std::size_t size() const noexcept { return n_r * n_z; }
  /// Flat index, r-major.
  std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * n_z + j; }
};

struct FlowFieldSnapshot {
  double t = 0.0;
  double xi0 = 0.0;
  Grid grid;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> omega;
  std::vector<double> temperature;
  std::vector<std::uint8_t> valid;  // 0 where sqrt(r^2 + z^2) > xi0
};

/// Evaluates T, omega, u and v on every lattice point inside the quarter disk.
/// Points outside are masked and left at zero.
FlowFieldSnapshot snapshot(const spectral::SpectralModel& model, const Grid& grid, double t,
                           double quad_tol = hankel::kDefaultQuadTol);

}  // namespace hankelflow::flow
