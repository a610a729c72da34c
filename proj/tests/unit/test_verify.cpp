#include <doctest.h>

#include <cmath>
#include <vector>

#include "hankelflow/bessel.hpp"
#include "hankelflow/flow_fields.hpp"
#include "hankelflow/verify.hpp"

using namespace hankelflow;
using heat_series::RadialPolynomial;

namespace {

double max_deviation(const verify::SampledProfile& s, const std::function<double(double)>& f) {
  double worst = 0.0;
  for (std::size_t i = 0; i < s.xi.size(); ++i) worst = std::max(worst, std::abs(s.values[i] - f(s.xi[i])));
  return worst;
}

spectral::SpectralModel profile_model(std::size_t modes, double rayleigh) {
  return spectral::SpectralModel::from_profiles(
      bessel::find_roots(1.0, modes), RadialPolynomial({0.0, 0.0, 0.0, 1.0, 0.0, -1.0}, 1.0),
      hankel::RadialProfile::analytic([](double x) { return 1.0 - x * x; }, 1.0), 1.0, rayleigh);
}

}  // namespace

TEST_CASE("fd_heat_oracle examples") {
  const auto lin = verify::fd_heat_oracle(RadialPolynomial({0.0, 1.0}, 1.0), 0.1, 1.0 / 200, 1e-4);
  CHECK(lin.xi.size() == 201);
  CHECK(max_deviation(lin, [](double x) { return x; }) < 1e-10);

  const auto zero = verify::fd_heat_oracle(RadialPolynomial(Polynomial{}, 1.0), 0.1, 1.0 / 200, 1e-4);
  CHECK(max_deviation(zero, [](double) { return 0.0; }) == 0.0);

  auto exact = [](double x) { return x * x * x + 0.6 * x; };
  const RadialPolynomial cubic({0.0, 0.0, 0.0, 1.0}, 1.0);
  const double e1 = max_deviation(verify::fd_heat_oracle(cubic, 0.1, 1.0 / 200, 1e-4), exact);
  CHECK(e1 < 5e-3);
  // A cubic is reproduced exactly by the second-difference stencil, so the
  // only error is round-off.
  CHECK(e1 < 1e-10);

  const RadialPolynomial quintic({0.0, 0.0, 0.0, 1.0, 0.0, -1.0}, 1.0);
  auto series = [&](double x) { return heat_series::evolve(quintic, 0.1).evolved(x); };
  const double q1 = max_deviation(verify::fd_heat_oracle(quintic, 0.1, 1.0 / 200, 1e-4), series);
  const double q2 = max_deviation(verify::fd_heat_oracle(quintic, 0.1, 1.0 / 400, 5e-5), series);
  CHECK(q1 < 5e-3);
  CHECK(q1 / q2 == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("ode_oracle examples") {
  const spectral::ModeState m{1, 2.0, 1.0, 1.0, 0.0};
  auto none = [](double) { return 0.0; };
  CHECK(std::abs(verify::ode_oracle(m, none, 1.0, 1e-4) - std::exp(-4.0)) < 1e-10);
  CHECK(verify::ode_oracle(m, none, 0.0, 1e-4) == 1.0);
  const double c = -1.3;
  const double closed = std::exp(-4.0 * 0.7) - c / 4.0 * (1.0 - std::exp(-4.0 * 0.7));
  CHECK(verify::ode_oracle(m, [c](double) { return c; }, 0.7, 1e-4) == doctest::Approx(closed).epsilon(1e-8));
}

TEST_CASE("decay slope recovers -Pr mu^2") {
  const auto roots = bessel::find_roots(1.0, 10);
  for (std::size_t n = 0; n < 10; ++n) {
    const spectral::ModeState m{n + 1, roots.mu(n), 1.0, 0.7, 0.0};
    const double expected = -0.7 * roots.mu(n) * roots.mu(n);
    CHECK(verify::decay_slope(m, 1.0) == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("residual of zero data vanishes") {
  const auto roots = bessel::find_roots(1.0, 10);
  const spectral::SpectralModel model(roots, RadialPolynomial(Polynomial{}, 1.0),
                                      std::vector<double>(10, 0.0), 1.0, 25.0);
  const auto rep = verify::vorticity_residual(model, verify::XiLattice::interior(1.0, 40), 0.1, 1e-3);
  CHECK(rep.max_abs == 0.0);
  CHECK(rep.l2 == 0.0);
  CHECK_FALSE(rep.asserted);
}

TEST_CASE("residual refinement study for a single unforced mode") {
  const double mu1 = bessel::tan_root(1);
  const double lam = mu1 * mu1;
  auto build = [](std::size_t modes) {
    const auto roots = bessel::find_roots(1.0, modes);
    std::vector<double> phi0(modes, 0.0);
    phi0[0] = 1.0;
    return spectral::SpectralModel(roots, RadialPolynomial(Polynomial{}, 1.0), phi0, 1.0, 0.0);
  };
  const std::vector<verify::RefinementLevel> levels{
      {20, 10, 0.1 / lam}, {40, 20, 0.05 / lam}, {80, 50, 0.025 / lam}};
  const auto study = verify::vorticity_residual_study(build, levels, 0.5 / lam);
  REQUIRE(study.reports.size() == 3);
  CHECK(study.non_increasing);
  for (std::size_t i = 1; i < 3; ++i) CHECK(study.reports[i].l2 < study.reports[i - 1].l2);
  CHECK(study.floors.size() == 3);
}

TEST_CASE("forced residual does not grow when the mode count doubles") {
  const verify::XiLattice lattice{0.2, 0.8, 120};
  const auto r50 = verify::vorticity_residual(profile_model(50, 10.0), lattice, 0.1, 0.0125);
  const auto r100 = verify::vorticity_residual(profile_model(100, 10.0), lattice, 0.1, 0.0125);
  CHECK(std::isfinite(r50.l2));
  CHECK(r100.l2 <= r50.l2);
}

TEST_CASE("divergence diagnostic") {
  const auto roots = bessel::find_roots(1.0, 4);
  const spectral::SpectralModel zero(roots, RadialPolynomial(Polynomial{}, 1.0),
                                     std::vector<double>(4, 0.0), 1.0, 0.0);
  const auto z = verify::divergence_diagnostic(flow::snapshot(zero, {11, 11, 0.7, 0.7}, 0.0));
  CHECK(z.max_abs == 0.0);
  CHECK_FALSE(z.asserted);

  const spectral::SpectralModel one(roots, RadialPolynomial(Polynomial{}, 1.0), {1.0, 0, 0, 0}, 1.0, 0.0);
  const auto d = verify::divergence_diagnostic(flow::snapshot(one, {21, 21, 0.7, 0.7}, 0.0));
  CHECK(std::isfinite(d.max_abs));
  CHECK(d.grid_meta.find("n_r=21") != std::string::npos);
  CHECK(d.pass);
}

TEST_CASE("boundary diagnostic") {
  const RadialPolynomial zero(Polynomial{}, 1.0);
  CHECK(verify::boundary_diagnostic(heat_series::evolve(zero, 0.0), 0.0).max_abs == 0.0);
  const auto half = verify::boundary_diagnostic(heat_series::evolve(zero, 0.5), 0.0);
  CHECK(half.max_abs == 0.5);
  CHECK(half.l2 == doctest::Approx(0.5));
  CHECK_FALSE(half.asserted);
}

TEST_CASE("root, orthogonality and roundtrip checks") {
  const auto roots = verify::check_roots(1.0, 100);
  CHECK(roots.pass);
  CHECK(roots.max_abs < 1e-10);
  const auto gram = verify::check_orthogonality(1.0, 10);
  CHECK(gram.pass);
  CHECK(gram.max_abs < 1e-8);
  CHECK(gram.l2 < 1e-8);
  double prev = INFINITY;
  for (std::size_t n : {1u, 5u, 10u, 20u, 50u}) {
    const double e = verify::roundtrip_error(1.0, n);
    CHECK(e <= prev);
    prev = e;
  }
  CHECK(prev < 1e-3);
}
