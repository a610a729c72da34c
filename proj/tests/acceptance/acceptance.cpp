// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hankelflow/bessel.hpp"
#include "hankelflow/cli.hpp"
#include "hankelflow/config.hpp"
#include "hankelflow/flow_fields.hpp"
#include "hankelflow/hankel.hpp"
#include "hankelflow/verify.hpp"

using namespace hankelflow;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d %s: %s; runtime %.3fs (limit %gs)\n", pass ? "PASS" : "FAIL", id,
              title, o.detail.c_str(), secs, limit_s);
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double bisect_tan_root(int k) {
  double a = k * std::numbers::pi + 1e-12, b = k * std::numbers::pi + std::numbers::pi / 2;
  auto g = [](double x) { return std::sin(x) - x * std::cos(x); };
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    if ((g(a) < 0) == (g(m) < 0)) a = m; else b = m;
  }
  return 0.5 * (a + b);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  run(1, "root accuracy", 1.0, [] {
    const auto rep = verify::check_roots(1.0, 100);
    const auto t = bessel::find_roots(1.0, 3);
    const double expect[3] = {4.493409, 7.725252, 10.904122};
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
      worst = std::max(worst, std::abs(t.mu(k) - bisect_tan_root(k + 1)));
      worst = std::max(worst, std::abs(t.mu(k) - expect[k]) - 5e-7);
    }
    return Outcome{rep.pass && rep.max_abs < 1e-10 && worst < 1e-6,
                   "max|J|=" + fmt(rep.max_abs) + ", first-three deviation=" + fmt(worst)};
  });

  run(2, "orthogonality", 5.0, [] {
    const auto rep = verify::check_orthogonality(1.0, 10);
    return Outcome{rep.max_abs < 1e-8 && rep.l2 < 1e-8,
                   "off-diagonal=" + fmt(rep.max_abs) + ", diagonal rel=" + fmt(rep.l2)};
  });

  run(3, "hankel roundtrip", 10.0, [] {
    std::string seq;
    double prev = INFINITY, last = 0.0;
    bool monotone = true;
    for (std::size_t n : {5u, 10u, 20u, 50u}) {
      last = verify::roundtrip_error(1.0, n);
      monotone = monotone && last <= prev;
      prev = last;
      seq += std::to_string(n) + ":" + fmt(last) + " ";
    }
    return Outcome{monotone && last <= 1e-3, "errors " + seq + (monotone ? "non-increasing" : "NOT monotone")};
  });

  run(4, "heat series vs finite differences", 10.0, [] {
    const heat_series::RadialPolynomial p0({0.0, 0.0, 0.0, 1.0, 0.0, -1.0}, 1.0);
    auto err = [&](double h, double dt) {
      const auto fd = verify::fd_heat_oracle(p0, 0.1, h, dt);
      const auto exact = heat_series::evolve(p0, 0.1);
      double worst = 0.0;
      for (std::size_t i = 0; i < fd.xi.size(); ++i)
        worst = std::max(worst, std::abs(fd.values[i] - exact.evolved(fd.xi[i])));
      return worst;
    };
    const double e1 = err(1.0 / 200, 1e-4), e2 = err(1.0 / 400, 5e-5);
    const double ratio = e1 / e2;
    double exact_dev = 0.0;
    for (double t : {0.0, 0.5, 3.0}) {
      const auto zero = heat_series::evolve(heat_series::RadialPolynomial(Polynomial{}, 1.0), t);
      const auto one = heat_series::evolve(heat_series::RadialPolynomial({0.0, 1.0}, 1.0), t);
      for (double xi : {0.0, 0.25, 0.5, 1.0}) {
        exact_dev = std::max(exact_dev, std::abs(heat_series::temperature(zero, xi) - t));
        exact_dev = std::max(exact_dev, std::abs(heat_series::temperature(one, xi) - (t + 1)));
      }
    }
    return Outcome{e1 <= 5e-3 && ratio > 3.5 && ratio < 4.5 && exact_dev <= 1e-15,
                   "max diff=" + fmt(e1) + ", halved=" + fmt(e2) + ", ratio=" + fmt(ratio) +
                       ", exact cases dev=" + fmt(exact_dev)};
  });

  run(5, "mode ODE", 5.0, [] {
    const auto roots = bessel::find_roots(1.0, 10);
    const Polynomial forcing({1.0, 2.0, -1.0});
    double worst = 0.0, slope_err = 0.0;
    for (std::size_t n = 0; n < 10; ++n) {
      const spectral::ModeState m{n + 1, roots.mu(n), 1.0, 1.0, 0.0};
      const double lam = m.prandtl * m.mu * m.mu;
      const double dt = std::min(1e-4, 0.1 / lam);
      for (const Polynomial& f : {Polynomial{}, forcing}) {
        std::vector<double> closed, rk;
        double peak = 0.0;
        for (int k = 0; k <= 10; ++k) {
          const double t = 0.1 * k;
          closed.push_back(spectral::phi_bar(m, f, t));
          rk.push_back(verify::ode_oracle(m, [&](double s) { return f(s); }, t, dt));
          peak = std::max(peak, std::abs(rk.back()));
        }
        for (std::size_t k = 0; k < closed.size(); ++k)
          worst = std::max(worst, std::abs(closed[k] - rk[k]) / peak);
      }
      slope_err = std::max(slope_err, std::abs(verify::decay_slope(m, 1.0) / -lam - 1.0));
    }
    return Outcome{worst <= 1e-6 && slope_err <= 1e-6,
                   "max rel diff=" + fmt(worst) + ", slope rel err=" + fmt(slope_err)};
  });

  run(6, "field identities", 30.0, [] {
    const auto cfg = config::load(HANKELFLOW_DEFAULT_CONFIG);
    const auto model = config::build_model(cfg);
    const double t = 0.1;
    const auto field = model.vorticity(t);
    const double xi0 = model.roots().xi0();
    double worst = 0.0;
    const double extent = xi0 / std::sqrt(2.0);
    for (int i = 1; i <= 50; ++i) {
      for (int j = 1; j <= 50; ++j) {
        const double r = extent * i / 51.0, z = extent * j / 51.0, xi = std::hypot(r, z);
        const auto vel = flow::velocity(field, r, z);
        const double dpsi = flow::stream_derivative(field, r, xi);
        const double scale = std::max(1.0, std::abs(dpsi));
        worst = std::max(worst, std::abs(vel.u * r + z / xi * dpsi) / scale);
        worst = std::max(worst, std::abs(vel.v * r - r / xi * dpsi) / scale);
      }
    }
    double axis = 0.0;
    for (int j = 0; j <= 10; ++j) {
      const auto v = flow::velocity(field, 0.0, xi0 * j / 10.0);
      axis = std::max({axis, std::abs(v.u), std::abs(v.v)});
    }
    const flow::Grid grid{50, 50, extent, extent};
    const auto snap = flow::snapshot(model, grid, t);
    bool finite = true;
    for (double u : snap.u) finite = finite && std::isfinite(u);
    return Outcome{worst <= 1e-12 && axis == 0.0 && finite,
                   "identity residual=" + fmt(worst) + ", axis max=" + fmt(axis) +
                       ", 50x50 snapshot at N=" + std::to_string(model.roots().size())};
  });

  run(7, "residual refinement", 120.0, [] {
    const double mu1 = bessel::tan_root(1), lam = mu1 * mu1;
    auto build = [](std::size_t modes) {
      std::vector<double> phi0(modes, 0.0);
      phi0[0] = 1.0;
      return spectral::SpectralModel(bessel::find_roots(1.0, modes),
                                     heat_series::RadialPolynomial(Polynomial{}, 1.0), phi0, 1.0, 0.0);
    };
    const std::vector<verify::RefinementLevel> levels{
        {20, 10, 0.1 / lam}, {40, 20, 0.05 / lam}, {80, 50, 0.025 / lam}, {160, 100, 0.0125 / lam}};
    const auto study = verify::vorticity_residual_study(build, levels, 0.5 / lam);
    nlohmann::json report = nlohmann::json::array();
    std::string seq;
    for (std::size_t i = 0; i < study.reports.size(); ++i) {
      auto j = cli::to_json(study.reports[i]);
      j["floor"] = study.floors[i];
      report.push_back(j);
      seq += fmt(study.reports[i].l2) + " ";
    }
    const auto parsed = nlohmann::json::parse(report.dump());
    return Outcome{study.non_increasing && parsed.size() == levels.size(),
                   "l2 " + seq + "floor " + fmt(study.floors.back())};
  });

  run(8, "end-to-end determinism", 60.0, [] {
    const fs::path dir = fs::temp_directory_path() / "hankelflow_acceptance_det";
    fs::remove_all(dir);
    std::ostringstream log, err;
    const int a = cli::cmd_solve(HANKELFLOW_DEFAULT_CONFIG, dir / "a", log, err);
    const int b = cli::cmd_solve(HANKELFLOW_DEFAULT_CONFIG, dir / "b", log, err);
    bool same = a == 0 && b == 0;
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir / "a")) {
      ++files;
      const auto other = dir / "b" / entry.path().filename();
      same = same && fs::exists(other) && slurp(entry.path()) == slurp(other);
    }
    fs::remove_all(dir);
    return Outcome{same && files > 1, std::to_string(files) + " files byte-identical=" + (same ? "yes" : "no")};
  });

  run(9, "full verify suite", 120.0, [] {
    std::ostringstream out, err;
    const int code = cli::cmd_verify(HANKELFLOW_DEFAULT_CONFIG, std::nullopt, out, err);
    return Outcome{code == 0, "exit code " + std::to_string(code)};
  });

  return failures == 0 ? 0 : 1;
}
