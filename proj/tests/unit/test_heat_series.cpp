#include <doctest.h>

#include <cmath>
#include <vector>

#include "hankelflow/errors.hpp"
#include "hankelflow/hankel.hpp"
#include "hankelflow/heat_series.hpp"

using namespace hankelflow;
using heat_series::RadialPolynomial;

TEST_CASE("evolve examples") {
  for (double t : {0.0, 0.3, 2.0}) {
    const auto s = heat_series::evolve(RadialPolynomial({0.0, 1.0}, 1.0), t);
    CHECK(s.evolved.poly() == Polynomial({0.0, 1.0}));
    CHECK(heat_series::temperature(s, 0.4) == doctest::Approx(t + 1.0));
  }
  const double t = 0.1;
  const auto cubic = heat_series::evolve(RadialPolynomial({0.0, 0.0, 0.0, 1.0}, 1.0), t);
  CHECK(cubic.evolved.poly().coeff(1) == doctest::Approx(6 * t));
  CHECK(cubic.evolved.poly().coeff(3) == 1.0);
  CHECK(cubic.evolved.degree() == 3);
  CHECK(heat_series::temperature(cubic, 0.3) == doctest::Approx(0.79).epsilon(1e-14));
  CHECK(heat_series::temperature(cubic, 0.0) == doctest::Approx(t + 6 * t));

  const auto zero = heat_series::evolve(RadialPolynomial(Polynomial{}, 1.0), 0.7);
  CHECK(zero.evolved.poly().is_zero());
  CHECK(heat_series::temperature(zero, 0.5) == 0.7);
}

TEST_CASE("temperature examples") {
  heat_series::HeatSolution s{RadialPolynomial({0.0, 1.0}, 1.0), 2.0};
  CHECK(heat_series::temperature(s, 0.5) == 3.0);
  heat_series::HeatSolution q{RadialPolynomial({0.0, 0.25, 0.0, 2.0}, 1.0), 0.5};
  CHECK(heat_series::temperature(q, 0.0) == doctest::Approx(0.75));
  CHECK_THROWS_AS(heat_series::temperature(q, -0.1), DomainError);
  heat_series::HeatSolution singular{RadialPolynomial({1.0, 1.0}, 1.0), 0.0};
  CHECK_THROWS_AS(heat_series::temperature(singular, 0.0), DomainError);
  CHECK(heat_series::temperature(singular, 0.5) == doctest::Approx(3.0));
}

TEST_CASE("t_hat_derivative examples") {
  heat_series::HeatSolution flat{RadialPolynomial({0.0, 1.0}, 1.0), 0.3};
  for (double xi : {0.1, 0.5, 1.0}) CHECK(heat_series::t_hat_derivative(flat, xi) == 0.0);
  const auto cubic = heat_series::evolve(RadialPolynomial({0.0, 0.0, 0.0, 1.0}, 1.0), 0.2);
  CHECK(heat_series::t_hat_derivative(cubic, 0.5) == doctest::Approx(1.0));
  heat_series::HeatSolution sq{RadialPolynomial({0.0, 0.0, 1.0}, 1.0), 0.0};
  for (double xi : {0.1, 0.5, 1.0}) CHECK(heat_series::t_hat_derivative(sq, xi) == doctest::Approx(1.0));
  // evolved = 1 gives T^ = 1/xi, derivative -1/xi^2
  heat_series::HeatSolution inv{RadialPolynomial({1.0}, 1.0), 0.0};
  CHECK(heat_series::t_hat_derivative(inv, 0.5) == doctest::Approx(-4.0));
}

TEST_CASE("series terminates and satisfies the heat equation exactly") {
  const RadialPolynomial p0({0.0, 0.3, 0.0, -1.2, 0.0, 0.7, 0.0, 0.1}, 1.0);
  const auto terms = heat_series::series_terms(p0);
  CHECK(terms.size() == 4);
  // The series is cubic in t here, so the 5-point stencil differentiates it
  // exactly up to round-off.
  const double t = 0.4, h = 0.05;
  auto at = [&](double s, double xi) { return heat_series::evolve(p0, s).evolved(xi); };
  const Polynomial dxx = heat_series::evolve(p0, t).evolved.poly().derivative().derivative();
  for (double xi : {0.1, 0.45, 0.9}) {
    const double dt = (-at(t + 2 * h, xi) + 8 * at(t + h, xi) - 8 * at(t - h, xi) + at(t - 2 * h, xi)) / (12 * h);
    CHECK(dt == doctest::Approx(dxx(xi)).epsilon(1e-12));
  }
}

TEST_CASE("semigroup property") {
  const RadialPolynomial p0({0.0, 1.0, 0.0, 2.0, 0.0, -3.0, 0.0, 0.5}, 1.0);
  for (auto [s, t] : {std::pair{0.1, 0.2}, std::pair{0.5, 0.5}, std::pair{1.0, 0.25}}) {
    const auto two_step = heat_series::evolve(heat_series::evolve(p0, s).evolved, t).evolved.poly();
    const auto one_step = heat_series::evolve(p0, s + t).evolved.poly();
    REQUIRE(two_step.degree() == one_step.degree());
    for (int k = 0; k <= one_step.degree(); ++k) {
      CHECK(two_step.coeff(k) == doctest::Approx(one_step.coeff(k)).epsilon(1e-10));
    }
  }
}

TEST_CASE("evolve rejects negative time") {
  CHECK_THROWS(heat_series::evolve(RadialPolynomial({0.0, 1.0}, 1.0), -0.1));
}

TEST_CASE("from_temperature multiplies by xi") {
  const auto p = RadialPolynomial::from_temperature({1.0, 0.0, -1.0}, 1.0);
  CHECK(p.poly() == Polynomial({0.0, 1.0, 0.0, -1.0}));
}

TEST_CASE("project_to_polynomial examples") {
  std::vector<double> xs, cubes, zeros;
  for (int i = 0; i < 50; ++i) {
    const double x = i / 49.0;
    xs.push_back(x);
    cubes.push_back(x * x * x);
    zeros.push_back(0.0);
  }
  const auto fit = heat_series::project_to_polynomial(hankel::RadialProfile::sampled(xs, cubes), 5);
  for (int k = 0; k <= 5; ++k) CHECK(std::abs(fit.poly.poly().coeff(k) - (k == 3 ? 1.0 : 0.0)) < 1e-10);

  const auto s = heat_series::project_to_polynomial(
      hankel::RadialProfile::analytic([](double x) { return std::sin(x); }, 1.0), 7);
  double worst = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    worst = std::max(worst, std::abs(s.poly(x) - std::sin(x)));
  }
  CHECK(worst < 1e-7);
  CHECK(s.max_residual < 1e-7);

  const auto z = heat_series::project_to_polynomial(hankel::RadialProfile::sampled(xs, zeros), 4);
  CHECK(z.poly.poly().is_zero());
}

TEST_CASE("project_to_polynomial detects rank deficiency") {
  const auto p = hankel::RadialProfile::sampled({0.0, 0.5, 1.0}, {0.0, 1.0, 2.0});
  CHECK_THROWS_AS(heat_series::project_to_polynomial(p, 5), RankDeficiencyError);
}
