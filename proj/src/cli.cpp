#include "hankelflow/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "hankelflow/errors.hpp"

namespace hankelflow::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Forced-mode reference for the ODE oracle when the config itself has no forcing.
const Polynomial kReferenceForcing({1.0, 2.0, -1.0});

double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

verify::ResidualReport roundtrip_check(const config::SimulationConfig& cfg) {
  verify::ResidualReport rep;
  rep.name = "hankel_roundtrip";
  rep.threshold = roundtrip_threshold(cfg.modes);
  rep.max_abs = verify::roundtrip_error(cfg.xi0, cfg.modes);
  rep.l2 = rep.max_abs;
  std::ostringstream meta;
  meta << "modes=" << cfg.modes << ", interval=[0.05, 0.95] xi0, sequence:";
  bool monotone = true;
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t n : {5u, 10u, 20u, 50u}) {
    if (n > cfg.modes) break;
    const double e = verify::roundtrip_error(cfg.xi0, n);
    meta << ' ' << n << ':' << std::setprecision(3) << e;
    if (e > previous) monotone = false;
    previous = e;
  }
  rep.grid_meta = meta.str();
  rep.pass = rep.max_abs <= rep.threshold && monotone;
  return rep;
}

verify::ResidualReport heat_check(const heat_series::RadialPolynomial& configured) {
  const double xi0 = configured.xi0();
  const bool usable = configured.degree() >= 1 && configured.degree() <= 6;
  const heat_series::RadialPolynomial p0 =
      usable ? configured : heat_series::RadialPolynomial({0.0, 0.0, 0.0, 1.0, 0.0, -1.0}, xi0);
  constexpr double t_end = 0.1;
  const auto max_error = [&](double h, double dt) {
    const auto fd = verify::fd_heat_oracle(p0, t_end, h, dt);
    const auto exact = heat_series::evolve(p0, t_end);
    double worst = 0.0;
    for (std::size_t i = 0; i < fd.xi.size(); ++i) {
      worst = std::max(worst, std::abs(fd.values[i] - exact.evolved(fd.xi[i])));
    }
    return worst;
  };
  const double coarse = max_error(xi0 / 200.0, 1e-4);
  const double fine = max_error(xi0 / 400.0, 5e-5);
  const double ratio = fine > 0.0 ? coarse / fine : std::numeric_limits<double>::infinity();

  verify::ResidualReport rep;
  rep.name = "heat_fd_oracle";
  rep.threshold = 5e-3;
  rep.max_abs = coarse;
  rep.l2 = fine;
  // Below 1e-10 both errors are round-off and the ratio carries no information.
  const bool second_order = coarse < 1e-10 || (ratio >= 3.0 && ratio <= 5.0);
  rep.pass = coarse <= rep.threshold && second_order;
  std::ostringstream meta;
  meta << "data=" << (usable ? "config" : "xi^3-xi^5") << ", t=0.1, h=xi0/200, dt=1e-4"
       << ", halved_error=" << std::setprecision(3) << fine << ", ratio=" << ratio;
  rep.grid_meta = meta.str();
  return rep;
}

verify::ResidualReport mode_ode_check(const spectral::SpectralModel& model, double ode_tol) {
  const std::size_t count = std::min<std::size_t>(10, model.roots().size());
  double worst = 0.0;
  double worst_slope = 0.0;
  double worst_route = 0.0;
  bool config_forcing = false;
  for (std::size_t n = 0; n < count; ++n) {
    spectral::ModeState mode = model.mode(n);
    if (mode.phi0 == 0.0) mode.phi0 = 1.0;
    const double rate = mode.prandtl * mode.mu * mode.mu;
    const double dt = std::min(1e-4, 0.1 / rate);

    Polynomial forcing = model.forcing()[n];
    if (forcing.is_zero()) {
      forcing = kReferenceForcing;
    } else {
      config_forcing = true;
    }
    for (const Polynomial& poly : {Polynomial{}, forcing}) {
      const auto fn = [&poly](double tau) { return poly(tau); };
      std::array<double, 11> closed{};
      std::array<double, 11> oracle{};
      double peak = 0.0;
      for (std::size_t k = 0; k < closed.size(); ++k) {
        const double t = 0.1 * static_cast<double>(k);
        closed[k] = spectral::phi_bar(mode, poly, t);
        oracle[k] = verify::ode_oracle(mode, fn, t, dt);
        peak = std::max(peak, std::abs(closed[k]));
        const double by_quadrature = spectral::phi_bar(mode, fn, t, ode_tol);
        worst_route = std::max(worst_route, std::abs(by_quadrature - closed[k]));
      }
      for (std::size_t k = 0; k < closed.size(); ++k) {
        worst = std::max(worst, std::abs(closed[k] - oracle[k]) / peak);
      }
    }
    worst_slope = std::max(worst_slope, relative_error(verify::decay_slope(mode, 1.0), -rate));
  }
  verify::ResidualReport rep;
  rep.name = "mode_ode_oracle";
  rep.threshold = 1e-6;
  rep.max_abs = worst;
  rep.l2 = worst_slope;
  rep.pass = worst <= rep.threshold && worst_slope <= rep.threshold;
  std::ostringstream meta;
  meta << "modes=" << count << ", t=0..1 step 0.1, forcing=" << (config_forcing ? "config" : "1+2t-t^2")
       << ", slope_rel_err=" << std::setprecision(3) << worst_slope
       << ", quadrature_route_abs_diff=" << worst_route;
  rep.grid_meta = meta.str();
  return rep;
}

verify::ResidualReport identity_check(const spectral::SpectralModel& model, double t,
                                      double quad_tol) {
  const auto field = model.vorticity(t);
  const double xi0 = model.roots().xi0();
  constexpr std::size_t n = 50;
  const double extent = xi0 / std::numbers::sqrt2;
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double r = extent * static_cast<double>(i) / static_cast<double>(n + 1);
    for (std::size_t j = 1; j <= n; ++j) {
      const double z = extent * static_cast<double>(j) / static_cast<double>(n + 1);
      const double xi = std::hypot(r, z);
      const auto vel = flow::velocity(field, r, z, quad_tol);
      const double sd = flow::stream_derivative(field, r, xi, quad_tol);
      worst = std::max({worst, std::abs(vel.u * r + z / xi * sd), std::abs(vel.v * r - r / xi * sd)});
      scale = std::max(scale, std::abs(sd));
    }
  }
  double axis = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    const double z = xi0 * static_cast<double>(j) / static_cast<double>(n);
    const auto vel = flow::velocity(field, 0.0, z, quad_tol);
    axis = std::max({axis, std::abs(vel.u), std::abs(vel.v)});
  }
  verify::ResidualReport rep;
  rep.name = "field_identities";
  rep.threshold = 1e-12;
  rep.max_abs = std::max(worst, axis);
  rep.l2 = worst;
  rep.pass = worst <= rep.threshold && axis == 0.0;
  std::ostringstream meta;
  meta << "lattice=50x50 on (0, xi0/sqrt2)^2, t=" << t << ", axis_max=" << axis
       << ", max|dpsi/dxi|=" << std::setprecision(3) << scale;
  rep.grid_meta = meta.str();
  return rep;
}

verify::RefinementStudy single_mode_study(double xi0, double prandtl) {
  const double mu1 = bessel::tan_root(1) / xi0;
  const auto omega0 = hankel::RadialProfile::analytic(
      [mu1](double xi) { return mu1 * std::sqrt(mu1) * bessel::j_three_half_scaled(mu1 * xi); },
      xi0);
  const auto build = [&](std::size_t modes) {
    return spectral::SpectralModel::from_profiles(bessel::find_roots(xi0, modes),
                                                  heat_series::RadialPolynomial(Polynomial{}, xi0), omega0,
                                                  prandtl, 0.0);
  };
  const double rate = prandtl * mu1 * mu1;
  const double dt = 0.1 / rate;
  const std::vector<verify::RefinementLevel> levels = {
      {20, 10, dt}, {40, 20, dt / 2}, {80, 50, dt / 4}, {160, 100, dt / 8}};
  return verify::vorticity_residual_study(build, levels, 0.5 / rate);
}

verify::ResidualReport study_report(const verify::RefinementStudy& study) {
  verify::ResidualReport rep;
  rep.name = "vorticity_residual_refinement";
  rep.max_abs = study.reports.back().max_abs;
  rep.l2 = study.reports.back().l2;
  rep.threshold = study.floors.back();
  rep.pass = study.non_increasing;
  std::ostringstream meta;
  meta << std::setprecision(3) << "R=0 single mode; (intervals,modes):l2";
  for (std::size_t k = 0; k < study.levels.size(); ++k) {
    meta << " (" << study.levels[k].intervals << ',' << study.levels[k].modes
         << "):" << study.reports[k].l2;
  }
  meta << "; floor=" << study.floors.back();
  rep.grid_meta = meta.str();
  return rep;
}

void write_snapshot_csv(const flow::FlowFieldSnapshot& snap, std::ostream& out) {
  out << "r,z,u,v,omega,T\n";
  const auto& g = snap.grid;
  for (std::size_t i = 0; i < g.n_r; ++i) {
    for (std::size_t j = 0; j < g.n_z; ++j) {
      const auto idx = g.index(i, j);
      if (!snap.valid[idx]) continue;
      out << format_number(g.r(i)) << ',' << format_number(g.z(j)) << ','
          << format_number(snap.u[idx]) << ',' << format_number(snap.v[idx]) << ','
          << format_number(snap.omega[idx]) << ',' << format_number(snap.temperature[idx])
          << '\n';
    }
  }
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf.data(), ptr);
}

double roundtrip_threshold(std::size_t modes) {
  const double n = static_cast<double>(std::max<std::size_t>(modes, 1));
  return std::min(0.5, 0.5 / (n * n));
}

json to_json(const verify::ResidualReport& report) {
  return json{{"name", report.name},         {"max_abs", report.max_abs},
              {"l2", report.l2},             {"grid_meta", report.grid_meta},
              {"threshold", report.threshold}, {"asserted", report.asserted},
              {"pass", report.pass}};
}

int cmd_roots(double xi0, long long count, std::ostream& out, std::ostream& err) {
  if (!(xi0 > 0.0) || !std::isfinite(xi0) || count < 1) {
    err << "roots: --xi0 must be positive and --count >= 1\n";
    return kExitUsage;
  }
  const auto roots = bessel::find_roots(xi0, static_cast<std::size_t>(count));
  out << "n,mu,mu_xi0,deriv,residual\n";
  for (std::size_t n = 0; n < roots.size(); ++n) {
    const double x = roots.mu(n) * xi0;
    out << n + 1 << ',' << format_number(roots.mu(n)) << ',' << format_number(x) << ','
        << format_number(roots.deriv(n)) << ','
        << format_number(std::abs(bessel::j_three_half(x))) << '\n';
  }
  return kExitOk;
}

int cmd_solve(const fs::path& config_path, const fs::path& output_dir, std::ostream& log,
              std::ostream& err) {
  config::SimulationConfig cfg;
  try {
    cfg = config::load(config_path);
  } catch (const std::exception& e) {
    err << "solve: " << e.what() << '\n';
    return kExitUsage;
  }
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec || !fs::is_directory(output_dir)) {
    err << "solve: cannot create output directory " << output_dir.string() << '\n';
    return kExitUsage;
  }

  json meta;
  meta["version"] = "0.1.0";
  meta["config"] = cfg.source;
  meta["config_version"] = cfg.config_version;
  meta["xi0"] = cfg.xi0;
  meta["modes"] = cfg.modes;
  meta["prandtl"] = cfg.prandtl;
  meta["rayleigh"] = cfg.rayleigh;
  meta["t_tilde"] = cfg.t_tilde;
  meta["tolerances"] = {{"quad_tol", cfg.quad_tol}, {"ode_tol", cfg.ode_tol}};
  meta["grid"] = {{"n_r", cfg.grid.n_r},
                  {"n_z", cfg.grid.n_z},
                  {"r_max", cfg.grid.r_max},
                  {"z_max", cfg.grid.z_max},
                  {"table_nodes", flow::ModeIntegralTable::kDefaultNodes}};
  meta["snapshots"] = json::array();

  try {
    const auto model = config::build_model(cfg);
    meta["initial_xi_t0_coeffs"] = std::vector<double>(model.xi_t0().poly().coeffs().begin(),
                                                       model.xi_t0().poly().coeffs().end());
    for (double t : cfg.times) {
      const auto snap = flow::snapshot(model, cfg.grid, t, cfg.quad_tol);
      const std::string name = "fields_t" + format_number(t) + ".csv";
      std::ofstream out(output_dir / name, std::ios::binary);
      if (!out) {
        err << "solve: cannot write " << (output_dir / name).string() << '\n';
        return kExitFailure;
      }
      write_snapshot_csv(snap, out);

      const auto field = model.vorticity(t);
      const auto tail = hankel::inverse(field.coeffs, 0.5 * cfg.xi0);
      const auto points = static_cast<std::size_t>(
          std::count(snap.valid.begin(), snap.valid.end(), std::uint8_t{1}));
      meta["snapshots"].push_back(
          {{"t", t},
           {"file", name},
           {"points", points},
           {"masked", snap.valid.size() - points},
           {"truncation",
            {{"last_coefficient_abs", std::abs(field.coeffs.values.back())},
             {"last_term_at_half_xi0", tail.last_term}}},
           {"thermal_boundary", to_json(verify::boundary_diagnostic(model.heat(t), cfg.t_tilde))}});
      log << "wrote " << (output_dir / name).string() << " (" << points << " points)\n";
    }
  } catch (const std::exception& e) {
    err << "solve: " << e.what() << '\n';
    return kExitFailure;
  }

  std::ofstream meta_out(output_dir / "run_meta.json", std::ios::binary);
  if (!meta_out) {
    err << "solve: cannot write run_meta.json\n";
    return kExitFailure;
  }
  meta_out << meta.dump(2) << '\n';
  return kExitOk;
}

VerifyOutcome run_verification(const config::SimulationConfig& cfg) {
  VerifyOutcome outcome;
  auto& checks = outcome.checks;
  const auto model = config::build_model(cfg);
  const double t_last = cfg.times.back();

  checks.push_back(verify::check_roots(cfg.xi0, std::max<std::size_t>(cfg.modes, 100)));
  checks.push_back(verify::check_orthogonality(cfg.xi0, std::min<std::size_t>(cfg.modes, 10)));
  checks.push_back(roundtrip_check(cfg));
  checks.push_back(heat_check(model.xi_t0()));
  checks.push_back(mode_ode_check(model, cfg.ode_tol));
  checks.push_back(identity_check(model, t_last, cfg.quad_tol));
  checks.push_back(study_report(single_mode_study(cfg.xi0, cfg.prandtl)));

  // Configured data with forcing, on a lattice clear of the axis.
  const double t_center = std::max(t_last, 1e-3);
  auto forced = verify::vorticity_residual(model, {0.2 * cfg.xi0, 0.8 * cfg.xi0, 120}, t_center,
                                      t_center / 8.0);
  forced.name = "vorticity_residual_config";
  checks.push_back(forced);

  checks.push_back(verify::divergence_diagnostic(flow::snapshot(model, cfg.grid, t_last, cfg.quad_tol)));
  checks.push_back(verify::boundary_diagnostic(model.heat(t_last), cfg.t_tilde));

  for (const auto& c : checks) {
    if (c.asserted && !c.pass) outcome.all_passed = false;
  }
  return outcome;
}

int cmd_verify(const fs::path& config_path, const std::optional<fs::path>& report_path,
               std::ostream& out, std::ostream& err) {
  config::SimulationConfig cfg;
  try {
    cfg = config::load(config_path);
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << '\n';
    return kExitUsage;
  }
  VerifyOutcome outcome;
  try {
    outcome = run_verification(cfg);
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << '\n';
    return kExitFailure;
  }

  out << std::left << std::setw(31) << "check" << std::setw(7) << "status" << std::setw(13)
      << "max_abs" << std::setw(13) << "l2" << std::setw(13) << "threshold" << "details\n";
  for (const auto& c : outcome.checks) {
    const char* status = !c.asserted ? "INFO" : (c.pass ? "PASS" : "FAIL");
    std::ostringstream row;
    row << std::left << std::setw(31) << c.name << std::setw(7) << status << std::setprecision(4)
        << std::setw(13) << c.max_abs << std::setw(13) << c.l2 << std::setw(13)
        << (c.asserted ? c.threshold : 0.0) << c.grid_meta;
    out << row.str() << '\n';
  }
  out << (outcome.all_passed ? "verify: all asserted checks passed\n"
                             : "verify: asserted checks FAILED\n");

  if (report_path) {
    json report;
    report["config"] = cfg.source;
    report["all_passed"] = outcome.all_passed;
    report["checks"] = json::array();
    for (const auto& c : outcome.checks) report["checks"].push_back(to_json(c));
    std::ofstream f(*report_path, std::ios::binary);
    if (!f) {
      err << "verify: cannot write report " << report_path->string() << '\n';
      return kExitFailure;
    }
    f << report.dump(2) << '\n';
  }
  return outcome.all_passed ? kExitOk : kExitFailure;
}

int cmd_transform_forward(const fs::path& input, long long modes, std::ostream& out,
                          std::ostream& err) {
  if (modes < 1) {
    err << "transform forward: --modes must be >= 1\n";
    return kExitUsage;
  }
  std::vector<double> xi;
  std::vector<double> values;
  try {
    std::tie(xi, values) = config::read_two_column_csv(input);
  } catch (const std::exception& e) {
    err << "transform forward: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const auto profile = hankel::RadialProfile::sampled(std::move(xi), std::move(values));
    const auto roots = bessel::find_roots(profile.xi0(), static_cast<std::size_t>(modes));
    const auto coeffs = hankel::forward(profile, roots);
    out << "n,mu,coefficient\n";
    for (std::size_t n = 0; n < roots.size(); ++n) {
      out << n + 1 << ',' << format_number(roots.mu(n)) << ','
          << format_number(coeffs.values[n]) << '\n';
    }
  } catch (const QuadratureError& e) {
    err << "transform forward: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "transform forward: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_transform_inverse(const fs::path& input, double xi0, long long points, std::ostream& out,
                          std::ostream& err) {
  if (!(xi0 > 0.0) || points < 2) {
    err << "transform inverse: --xi0 must be positive and --points >= 2\n";
    return kExitUsage;
  }
  std::vector<double> index;
  std::vector<double> coeffs;
  try {
    const auto rows = config::read_csv(input);
    if (rows.empty() || rows.front().size() < 2) {
      throw ConfigError(input.string() + ": expected columns n,...,coefficient");
    }
    for (const auto& row : rows) {
      index.push_back(row.front());
      coeffs.push_back(row.back());
    }
  } catch (const std::exception& e) {
    err << "transform inverse: " << e.what() << '\n';
    return kExitUsage;
  }
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] != static_cast<double>(k + 1)) {
      err << "transform inverse: mode indices must run 1, 2, ... in order\n";
      return kExitUsage;
    }
  }
  const hankel::SpectralCoeffs c{bessel::find_roots(xi0, coeffs.size()), coeffs};
  out << "xi,value,last_term\n";
  for (long long k = 0; k < points; ++k) {
    const double xi =
        k + 1 == points ? xi0 : xi0 * static_cast<double>(k) / static_cast<double>(points - 1);
    const auto v = hankel::inverse(c, xi);
    out << format_number(xi) << ',' << format_number(v.value) << ','
        << format_number(v.last_term) << '\n';
  }
  return kExitOk;
}

}  // namespace hankelflow::cli
