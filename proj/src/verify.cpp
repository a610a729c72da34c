#include "hankelflow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "hankelflow/bessel.hpp"
#include "hankelflow/errors.hpp"
#include "hankelflow/hankel.hpp"
#include "hankelflow/quadrature.hpp"
#include "hankelflow/spline.hpp"

namespace hankelflow::verify {
namespace {

std::string describe(std::initializer_list<std::pair<const char*, double>> items) {
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto& [key, value] : items) {
    if (!first) os << ", ";
    os << key << '=' << value;
    first = false;
  }
  return os.str();
}

}  // namespace

SampledProfile fd_heat_oracle(const heat_series::RadialPolynomial& p0, double t_end, double h,
                              double dt) {
  if (!(h > 0.0) || !(dt > 0.0) || !(t_end >= 0.0)) {
    throw std::invalid_argument("fd_heat_oracle: h, dt must be positive and t_end >= 0");
  }
  const double xi0 = p0.xi0();
  const auto intervals = static_cast<std::size_t>(std::max(2.0, std::round(xi0 / h)));
  const double hx = xi0 / static_cast<double>(intervals);
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
  const double step = steps == 0 ? 0.0 : t_end / static_cast<double>(steps);

  const auto terms = heat_series::series_terms(p0);
  const auto exact = [&](double xi, double t) {
    double acc = 0.0;
    double power = 1.0;
    for (const auto& term : terms) {
      acc += power * term(xi);
      power *= t;
    }
    return acc;
  };

  SampledProfile out;
  out.xi.resize(intervals + 1);
  out.values.resize(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    out.xi[i] = hx * static_cast<double>(i);
    out.values[i] = p0(out.xi[i]);
  }
  out.xi.back() = xi0;
  if (steps == 0) return out;

  const std::size_t m = intervals - 1;
  const double lambda = step / (hx * hx);
  const std::vector<double> lower(m, -0.5 * lambda);
  const std::vector<double> diag(m, 1.0 + lambda);
  const std::vector<double> upper(m, -0.5 * lambda);
  std::vector<double> rhs(m);

  std::vector<double>& g = out.values;
  for (std::size_t s = 0; s < steps; ++s) {
    const double t_next = step * static_cast<double>(s + 1);
    const double left_next = exact(0.0, t_next);
    const double right_next = exact(xi0, t_next);
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t i = k + 1;
      rhs[k] = 0.5 * lambda * g[i - 1] + (1.0 - lambda) * g[i] + 0.5 * lambda * g[i + 1];
    }
    rhs.front() += 0.5 * lambda * left_next;
    rhs.back() += 0.5 * lambda * right_next;
    const auto interior = solve_tridiagonal(lower, diag, upper, rhs);
    g.front() = left_next;
    g.back() = right_next;
    std::copy(interior.begin(), interior.end(), g.begin() + 1);
  }
  return out;
}

double ode_oracle(const spectral::ModeState& mode, const std::function<double(double)>& upsilon_fn,
                  double t_end, double dt) {
  if (!(dt > 0.0) || !std::isfinite(t_end) || t_end < 0.0) {
    throw std::invalid_argument("ode_oracle: dt must be positive and t_end finite, >= 0");
  }
  const double pr = mode.prandtl;
  const double mu2 = mode.mu * mode.mu;
  const auto rhs = [&](double t, double phi) { return pr * (-mu2 * phi - upsilon_fn(t)); };

  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
  double phi = mode.phi0;
  for (std::size_t s = 0; s < steps; ++s) {
    const double t = dt * static_cast<double>(s);
    const double h = std::min(dt, t_end - t);
    const double k1 = rhs(t, phi);
    const double k2 = rhs(t + 0.5 * h, phi + 0.5 * h * k1);
    const double k3 = rhs(t + 0.5 * h, phi + 0.5 * h * k2);
    const double k4 = rhs(t + h, phi + h * k3);
    phi += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return phi;
}

double decay_slope(const spectral::ModeState& mode, double t_end, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("decay_slope: need at least two samples");
  spectral::ModeState unit = mode;
  if (unit.phi0 == 0.0) unit.phi0 = 1.0;
  const double rate = unit.prandtl * unit.mu * unit.mu;
  const double window = std::min(t_end, 200.0 / rate);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = window * static_cast<double>(k) / static_cast<double>(samples - 1);
    const double y = std::log(std::abs(spectral::phi_bar(unit, Polynomial{}, t)));
    sx += t;
    sy += y;
    sxx += t * t;
    sxy += t * y;
  }
  const double n = static_cast<double>(samples);
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

XiLattice XiLattice::interior(double xi0, std::size_t n) {
  if (n < 3) throw std::invalid_argument("XiLattice::interior: need at least 3 intervals");
  const double h = xi0 / static_cast<double>(n);
  return {h, xi0 - h, n - 2};
}

namespace {

struct ResidualEvaluation {
  ResidualReport report;
  double omega_scale = 0.0;  // max |Omega| over the lattice
};

ResidualEvaluation evaluate_residual(const spectral::SpectralModel& model, const XiLattice& lattice,
                             double t_center, double dt) {
  const double xi0 = model.roots().xi0();
  if (lattice.intervals < 1 || !(lattice.xi_min > 0.0) || !(lattice.xi_max < xi0) ||
      !(lattice.xi_max > lattice.xi_min)) {
    throw std::invalid_argument("vorticity_residual: lattice must be interior to (0, xi0)");
  }
  if (!(dt > 0.0) || t_center - 2.0 * dt < 0.0) {
    throw std::invalid_argument(
        "vorticity_residual: time window needs t_center - 2 dt >= 0 for the 5-point stencil");
  }
  const double h = lattice.step();
  if (lattice.xi_min - h < -1e-14 * xi0 || lattice.xi_max + h > xi0 * (1.0 + 1e-14)) {
    throw std::invalid_argument("vorticity_residual: lattice step reaches outside [0, xi0]");
  }
  const double pr = model.prandtl();
  const double ra = model.rayleigh();

  std::vector<spectral::VorticityField> fields;
  for (int k = -2; k <= 2; ++k) fields.push_back(model.vorticity(t_center + k * dt));
  const auto& now = fields[2];
  const auto heat = model.heat(t_center);

  const auto omega_at = [&](const spectral::VorticityField& f, double xi) {
    return spectral::omega_reduced(f, std::clamp(xi, 0.0, xi0));
  };

  ResidualEvaluation out;
  ResidualReport& rep = out.report;
  rep.name = "vorticity_residual";
  double sum_sq = 0.0;
  for (std::size_t i = 0; i <= lattice.intervals; ++i) {
    const double xi = lattice.xi_min + h * static_cast<double>(i);
    const double o0 = omega_at(now, xi);
    const double om1 = omega_at(now, xi - h);
    const double op1 = omega_at(now, xi + h);
    double d1 = 0.0;
    double d2 = 0.0;
    if (xi - 2.0 * h >= 0.0 && xi + 2.0 * h <= xi0) {
      const double om2 = omega_at(now, xi - 2.0 * h);
      const double op2 = omega_at(now, xi + 2.0 * h);
      d1 = (om2 - 8.0 * om1 + 8.0 * op1 - op2) / (12.0 * h);
      d2 = (-om2 + 16.0 * om1 - 30.0 * o0 + 16.0 * op1 - op2) / (12.0 * h * h);
    } else {
      d1 = (op1 - om1) / (2.0 * h);
      d2 = (om1 - 2.0 * o0 + op1) / (h * h);
    }
    const double ot = (omega_at(fields[0], xi) - 8.0 * omega_at(fields[1], xi) +
                       8.0 * omega_at(fields[3], xi) - omega_at(fields[4], xi)) /
                      (12.0 * dt);
    const double forcing = ra == 0.0 ? 0.0 : ra / xi * heat_series::t_hat_derivative(heat, xi);
    const double r = ot / pr - d2 - 4.0 / xi * d1 + forcing;
    rep.max_abs = std::max(rep.max_abs, std::abs(r));
    out.omega_scale = std::max(out.omega_scale, std::abs(o0));
    sum_sq += r * r;
  }
  rep.l2 = std::sqrt(h * sum_sq);
  rep.asserted = false;
  rep.grid_meta = describe({{"xi_min", lattice.xi_min},
                            {"xi_max", lattice.xi_max},
                            {"intervals", static_cast<double>(lattice.intervals)},
                            {"h", h},
                            {"modes", static_cast<double>(model.roots().size())},
                            {"t", t_center},
                            {"dt", dt}});
  return out;
}

}  // namespace

ResidualReport vorticity_residual(const spectral::SpectralModel& model, const XiLattice& lattice,
                             double t_center, double dt) {
  return evaluate_residual(model, lattice, t_center, dt).report;
}

RefinementStudy vorticity_residual_study(
    const std::function<spectral::SpectralModel(std::size_t modes)>& build_model,
    const std::vector<RefinementLevel>& levels, double t_center) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  RefinementStudy study;
  study.levels = levels;
  for (const auto& level : levels) {
    const auto model = build_model(level.modes);
    const double xi0 = model.roots().xi0();
    const auto lattice = XiLattice::interior(xi0, level.intervals);
    auto eval = evaluate_residual(model, lattice, t_center, level.dt);
    // Cancellation in the 5-point stencils: 64 eps |Omega| / h^2 and / dt,
    // accumulated in the discrete L2 norm over [0, xi0].
    const double h = lattice.step();
    const double floor =
        64.0 * eps * eval.omega_scale * (1.0 / (h * h) + 1.0 / (model.prandtl() * level.dt)) *
        std::sqrt(xi0);
    study.floors.push_back(floor);
    study.reports.push_back(std::move(eval.report));
  }
  for (std::size_t k = 1; k < study.reports.size(); ++k) {
    const double prev = study.reports[k - 1].l2;
    const double cur = study.reports[k].l2;
    if (cur > prev && cur > study.floors[k]) study.non_increasing = false;
  }
  return study;
}

ResidualReport divergence_diagnostic(const flow::FlowFieldSnapshot& snap) {
  ResidualReport rep;
  rep.name = "divergence";
  rep.asserted = false;
  const auto& g = snap.grid;
  double sum_sq = 0.0;
  std::size_t count = 0;
  if (g.n_r >= 3 && g.n_z >= 3) {
    const double dr = g.r(1) - g.r(0);
    const double dz = g.z(1) - g.z(0);
    for (std::size_t i = 1; i + 1 < g.n_r; ++i) {
      const double r = g.r(i);
      if (r <= 0.0) continue;
      for (std::size_t j = 1; j + 1 < g.n_z; ++j) {
        const auto c = g.index(i, j);
        const auto w = g.index(i - 1, j);
        const auto e = g.index(i + 1, j);
        const auto s = g.index(i, j - 1);
        const auto n = g.index(i, j + 1);
        if (!snap.valid[c] || !snap.valid[w] || !snap.valid[e] || !snap.valid[s] ||
            !snap.valid[n]) {
          continue;
        }
        const double div =
            (g.r(i + 1) * snap.u[e] - g.r(i - 1) * snap.u[w]) / (2.0 * dr * r) +
            (snap.v[n] - snap.v[s]) / (2.0 * dz);
        rep.max_abs = std::max(rep.max_abs, std::abs(div));
        sum_sq += div * div;
        ++count;
      }
    }
    if (count > 0) rep.l2 = std::sqrt(sum_sq * dr * dz);
    rep.grid_meta = describe({{"n_r", static_cast<double>(g.n_r)},
                              {"n_z", static_cast<double>(g.n_z)},
                              {"dr", dr},
                              {"dz", dz},
                              {"points", static_cast<double>(count)},
                              {"t", snap.t}});
  } else {
    rep.grid_meta = "lattice too small for central differences";
  }
  return rep;
}

ResidualReport boundary_diagnostic(const heat_series::HeatSolution& heat, double t_tilde) {
  ResidualReport rep;
  rep.name = "thermal_boundary";
  rep.asserted = false;
  const double lower = std::abs(heat_series::temperature(heat, 0.0) - t_tilde);
  const double upper = std::abs(heat_series::temperature(heat, 1.0));
  rep.max_abs = std::max(lower, upper);
  rep.l2 = std::sqrt(0.5 * (lower * lower + upper * upper));
  rep.grid_meta = describe({{"z_lower", 0.0}, {"mismatch_lower", lower}, {"z_upper", 1.0},
                            {"mismatch_upper", upper}, {"t", heat.t}});
  return rep;
}

ResidualReport check_roots(double xi0, std::size_t count, double tol) {
  const auto roots = bessel::find_roots(xi0, count);
  ResidualReport rep;
  rep.name = "root_residual";
  rep.threshold = tol;
  double sum_sq = 0.0;
  bool bracketed = true;
  for (std::size_t n = 0; n < count; ++n) {
    const double x = roots.mu(n) * xi0;
    const double f = std::abs(bessel::j_three_half(x));
    rep.max_abs = std::max(rep.max_abs, f);
    sum_sq += f * f;
    const double k = static_cast<double>(n + 1) * std::numbers::pi;
    if (!(x > k && x < k + 0.5 * std::numbers::pi)) bracketed = false;
    if (n > 0 && !(roots.mu(n) > roots.mu(n - 1))) bracketed = false;
  }
  rep.l2 = std::sqrt(sum_sq);
  rep.pass = bracketed && rep.max_abs < tol;
  rep.grid_meta = describe({{"xi0", xi0}, {"count", static_cast<double>(count)},
                            {"bracketed", bracketed ? 1.0 : 0.0}});
  return rep;
}

ResidualReport check_orthogonality(double xi0, std::size_t count, double tol) {
  const auto roots = bessel::find_roots(xi0, count);
  ResidualReport rep;
  rep.name = "orthogonality";
  rep.threshold = tol;
  double worst_rel_diag = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t m = n; m < count; ++m) {
      auto breaks = hankel::mode_breakpoints(roots, n);
      const auto other = hankel::mode_breakpoints(roots, m);
      breaks.insert(breaks.end(), other.begin(), other.end());
      std::sort(breaks.begin(), breaks.end());
      breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
      const double mn = roots.mu(n);
      const double mm = roots.mu(m);
      const double gram =
          quadrature::integrate(
              [&](double xi) {
                return xi * bessel::j_three_half(mn * xi) * bessel::j_three_half(mm * xi);
              },
              breaks, {.abs_tol = 1e-14})
              .value;
      if (n == m) {
        const double expected = roots.norm(n);
        worst_rel_diag = std::max(worst_rel_diag, std::abs(gram - expected) / expected);
      } else {
        rep.max_abs = std::max(rep.max_abs, std::abs(gram));
      }
    }
  }
  rep.l2 = worst_rel_diag;
  rep.pass = rep.max_abs <= tol && worst_rel_diag <= tol;
  rep.grid_meta = describe({{"xi0", xi0}, {"modes", static_cast<double>(count)},
                            {"max_rel_diag", worst_rel_diag}});
  return rep;
}

double roundtrip_error(double xi0, std::size_t modes) {
  const auto roots = bessel::find_roots(xi0, modes);
  const auto f = [xi0](double xi) { return xi * std::sqrt(xi) * (xi0 - xi); };
  const auto coeffs = hankel::forward(hankel::RadialProfile::analytic(f, xi0), roots);
  const double a = 0.05 * xi0;
  const double b = 0.95 * xi0;
  const std::size_t panels = 4 * modes;
  std::vector<double> breaks(panels + 1);
  for (std::size_t k = 0; k <= panels; ++k) {
    breaks[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(panels);
  }
  const quadrature::Options opts{.abs_tol = 1e-24, .rel_tol = 1e-8, .max_panels = 100000};
  const double err2 = quadrature::integrate(
                          [&](double xi) {
                            const double d = f(xi) - hankel::inverse(coeffs, xi).value;
                            return d * d;
                          },
                          breaks, opts)
                          .value;
  const double norm2 =
      quadrature::integrate([&](double xi) { return f(xi) * f(xi); }, breaks, opts).value;
  return std::sqrt(err2 / norm2);
}

}  // namespace hankelflow::verify
