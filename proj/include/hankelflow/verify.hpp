#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hankelflow/flow_fields.hpp"
#include "hankelflow/heat_series.hpp"
#include "hankelflow/spectral_vorticity.hpp"

/// Independent oracles and residual diagnostics for the analytical pipeline.
namespace hankelflow::verify {

struct ResidualReport {
  std::string name;
  double max_abs = 0.0;
  double l2 = 0.0;
  std::string grid_meta;
  double threshold = 0.0;
  bool asserted = true;  // diagnostics never fail a run
  bool pass = true;
};

struct SampledProfile {
  std::vector<double> xi;
  std::vector<double> values;
};

/// Crank-Nicolson solve of dg/dt = d^2g/dxi^2 for g = xi T^ on a uniform grid,
/// with Dirichlet values taken from the analytical series at each step.
SampledProfile fd_heat_oracle(const heat_series::RadialPolynomial& p0, double t_end, double h,
                              double dt);

/// Classical RK4 for dPhi/dt = Pr (-mu^2 Phi - Upsilon(t)). The last step is
/// shortened so the run ends exactly at t_end.
double ode_oracle(const spectral::ModeState& mode, const std::function<double(double)>& upsilon_fn,
                  double t_end, double dt);

/// Least-squares slope of log Phi(t) for an unforced mode, sampled on
/// `samples` points of [0, t_end].
double decay_slope(const spectral::ModeState& mode, double t_end, std::size_t samples = 21);

/// Uniform lattice xi_min, xi_min + h, ..., xi_max with h = (xi_max - xi_min) / intervals.
struct XiLattice {
  double xi_min;
  double xi_max;
  std::size_t intervals;

  /// Every interior node of the uniform n-interval partition of [0, xi0].
  static XiLattice interior(double xi0, std::size_t n);
  double step() const { return (xi_max - xi_min) / static_cast<double>(intervals); }
};

/// Residual of
///   Pr^{-1} dOmega/dt - Omega'' - (4/xi) Omega' + (R/xi) dT^/dxi
/// on `lattice` at time t_center. Space and time derivatives use 4th-order
/// central differences with steps lattice.step() and dt; nodes whose 5-point
/// stencil leaves [0, xi0] fall back to 3 points. l2 is the discrete
/// sqrt(h sum r^2).
ResidualReport vorticity_residual(const spectral::SpectralModel& model, const XiLattice& lattice,
                             double t_center, double dt);

struct RefinementLevel {
  std::size_t intervals;  // partition of [0, xi0]; the lattice is its interior
  std::size_t modes;
  double dt;
};

struct RefinementStudy {
  std::vector<RefinementLevel> levels;
  std::vector<ResidualReport> reports;
  std::vector<double> floors;  // round-off level of the stencils, per level
  bool non_increasing = true;
};

/// Runs vorticity_residual on each level with a model rebuilt for that mode count.
/// Passes when each L2 norm is no larger than its predecessor or already at
/// that level's round-off floor.
RefinementStudy vorticity_residual_study(
    const std::function<spectral::SpectralModel(std::size_t modes)>& build_model,
    const std::vector<RefinementLevel>& levels, double t_center);

/// (1/r) d(r u)/dr + dv/dz by central differences at interior lattice points
/// whose four neighbours are valid. Reported only.
ResidualReport divergence_diagnostic(const flow::FlowFieldSnapshot& snap);

/// |T - t_tilde| at (r, z) = (0, 0) and |T - 0| at (0, 1). Reported only.
ResidualReport boundary_diagnostic(const heat_series::HeatSolution& heat, double t_tilde);

/// Max |J_{3/2}(mu_n xi0)| and bracket membership for the first `count` roots.
ResidualReport check_roots(double xi0, std::size_t count, double tol = 1e-10);

/// Gram matrix of int xi J(mu_n xi) J(mu_m xi) dxi against its diagonal
/// closed form for the first `count` modes. max_abs is the largest
/// off-diagonal entry; l2 holds the largest relative diagonal error.
ResidualReport check_orthogonality(double xi0, std::size_t count, double tol = 1e-8);

/// Relative L2 error on [0.05 xi0, 0.95 xi0] of inverse(forward(f)) for
/// f(xi) = xi^{3/2} (xi0 - xi), at `modes` modes.
double roundtrip_error(double xi0, std::size_t modes);

}  // namespace hankelflow::verify
