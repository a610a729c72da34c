#include "hankelflow/flow_fields.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hankelflow/errors.hpp"
#include "hankelflow/quadrature.hpp"

namespace hankelflow::flow {
namespace {

// Integrand of I: eta^{-3/2} sum_n ... , with the eta -> 0 limit handled by
// the scaled Bessel function.
double integrand(const spectral::VorticityField& field, double eta) {
  const double xi0 = field.coeffs.roots.xi0();
  return 0.5 * xi0 * xi0 * spectral::omega_reduced(field, eta);
}

double integrate_between(const spectral::VorticityField& field, double a, double b,
                         double quad_tol) {
  if (b <= a) return 0.0;
  const double xi0 = field.coeffs.roots.xi0();
  const std::size_t modes = field.coeffs.values.size();
  const auto panels =
      static_cast<std::size_t>(std::max(1.0, std::ceil(static_cast<double>(modes) * (b - a) / xi0)));
  std::vector<double> breaks(panels + 1);
  for (std::size_t k = 0; k <= panels; ++k) {
    breaks[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(panels);
  }
  breaks.back() = b;
  return quadrature::integrate([&](double eta) { return integrand(field, eta); }, breaks,
                               {.abs_tol = quad_tol})
      .value;
}

void check_xi(double xi, double xi0, const char* fn) {
  if (!std::isfinite(xi) || xi < 0.0 || xi > xi0 * (1.0 + 1e-14)) {
    throw DomainError(std::string(fn) + ": xi = " + std::to_string(xi) + " outside [0, " +
                      std::to_string(xi0) + "]");
  }
}

}  // namespace

double mode_integral(const spectral::VorticityField& field, double xi, double quad_tol) {
  const double xi0 = field.coeffs.roots.xi0();
  check_xi(xi, xi0, "mode_integral");
  return integrate_between(field, 0.0, std::min(xi, xi0), quad_tol);
}

Velocity velocity(const spectral::VorticityField& field, double r, double z, double quad_tol) {
  if (!std::isfinite(r) || !std::isfinite(z) || r < 0.0) {
    throw DomainError("velocity: r must be >= 0 and coordinates finite");
  }
  const double xi = std::hypot(r, z);
  const double xi0 = field.coeffs.roots.xi0();
  check_xi(xi, xi0, "velocity");
  if (xi == 0.0 || r == 0.0) return {0.0, 0.0};
  const double integral = mode_integral(field, xi, quad_tol);
  const double scale = 2.0 / (xi * xi0 * xi0);
  return {scale * r * z * integral, -scale * r * r * integral};
}

double stream_derivative(const spectral::VorticityField& field, double r, double xi,
                         double quad_tol) {
  const double xi0 = field.coeffs.roots.xi0();
  check_xi(xi, xi0, "stream_derivative");
  if (r == 0.0 || xi == 0.0) return 0.0;
  return -2.0 * r * r / (xi0 * xi0) * mode_integral(field, xi, quad_tol);
}

namespace {

CubicSpline build_table(const spectral::VorticityField& field, std::size_t nodes,
                        double quad_tol) {
  if (nodes < 2) throw std::invalid_argument("ModeIntegralTable: need at least two nodes");
  const double xi0 = field.coeffs.roots.xi0();
  std::vector<double> xs(nodes);
  std::vector<double> ys(nodes, 0.0);
  const double last = static_cast<double>(nodes - 1);
  for (std::size_t k = 0; k < nodes; ++k) {
    xs[k] = 0.5 * xi0 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(k) / last));
  }
  xs.front() = 0.0;
  xs.back() = xi0;
  for (std::size_t k = 1; k < nodes; ++k) {
    ys[k] = ys[k - 1] + integrate_between(field, xs[k - 1], xs[k], quad_tol / last);
  }
  return CubicSpline(std::move(xs), std::move(ys));
}

}  // namespace

ModeIntegralTable::ModeIntegralTable(const spectral::VorticityField& field, std::size_t nodes,
                                     double quad_tol)
    : xi0_(field.coeffs.roots.xi0()), spline_(build_table(field, nodes, quad_tol)) {}

double Grid::r(std::size_t i) const {
  if (n_r == 1) return r_max;
  return r_min + (r_max - r_min) * static_cast<double>(i) / static_cast<double>(n_r - 1);
}

double Grid::z(std::size_t j) const {
  if (n_z == 1) return z_max;
  return z_min + (z_max - z_min) * static_cast<double>(j) / static_cast<double>(n_z - 1);
}

FlowFieldSnapshot snapshot(const spectral::SpectralModel& model, const Grid& grid, double t,
                           double quad_tol) {
  if (grid.n_r == 0 || grid.n_z == 0) throw std::invalid_argument("snapshot: empty grid");
  if (grid.r_min < 0.0 || grid.r_max < grid.r_min || grid.z_max < grid.z_min) {
    throw std::invalid_argument("snapshot: malformed grid extents");
  }
  const double xi0 = model.roots().xi0();
  const auto field = model.vorticity(t);
  const auto heat = model.heat(t);
  const ModeIntegralTable table(field, ModeIntegralTable::kDefaultNodes, quad_tol);

  FlowFieldSnapshot snap;
  snap.t = t;
  snap.xi0 = xi0;
  snap.grid = grid;
  const std::size_t n = grid.size();
  snap.u.assign(n, 0.0);
  snap.v.assign(n, 0.0);
  snap.omega.assign(n, 0.0);
  snap.temperature.assign(n, 0.0);
  snap.valid.assign(n, 0);

  for (std::size_t i = 0; i < grid.n_r; ++i) {
    const double r = grid.r(i);
    for (std::size_t j = 0; j < grid.n_z; ++j) {
      const double z = grid.z(j);
      const double xi = std::hypot(r, z);
      const std::size_t idx = grid.index(i, j);
      if (xi > xi0) continue;
      snap.valid[idx] = 1;
      try {
        snap.temperature[idx] = heat_series::temperature(heat, xi);
        snap.omega[idx] = spectral::omega_field(field, r, z);
        if (r > 0.0 && xi > 0.0) {
          const double integral = table(xi);
          const double scale = 2.0 / (xi * xi0 * xi0);
          snap.u[idx] = scale * r * z * integral;
          snap.v[idx] = -scale * r * r * integral;
        }
      } catch (const DomainError& e) {
        throw DomainError("snapshot: at (r, z) = (" + std::to_string(r) + ", " +
                          std::to_string(z) + "): " + e.what());
      }
    }
  }
  return snap;
}

}  // namespace hankelflow::flow
