#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hankelflow/errors.hpp"
#include "hankelflow/polynomial.hpp"
#include "hankelflow/quadrature.hpp"
#include "hankelflow/spline.hpp"

using namespace hankelflow;

TEST_CASE("quadrature integrates smooth and oscillatory functions") {
  const auto r = quadrature::integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-14));
  CHECK(r.error <= 1e-10);

  const std::vector<double> bp{0.0, 1.0, 2.0, 3.0};
  const auto s = quadrature::integrate(
      [](double x) { return std::sin(20 * std::numbers::pi * x); }, bp);
  CHECK(std::abs(s.value) < 1e-12);

  const auto sq = quadrature::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0);
  CHECK(sq.value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("quadrature reports failure when the panel budget is exhausted") {
  quadrature::Options opts;
  opts.abs_tol = 1e-15;
  opts.max_panels = 3;
  CHECK_THROWS_AS(
      quadrature::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opts),
      QuadratureError);
}

TEST_CASE("quadrature is deterministic") {
  auto f = [](double x) { return std::cos(37.0 * x) * std::exp(-x); };
  const auto a = quadrature::integrate(f, 0.0, 5.0);
  const auto b = quadrature::integrate(f, 0.0, 5.0);
  CHECK(a.value == b.value);
}

TEST_CASE("tridiagonal solver") {
  // [2 1 0; 1 2 1; 0 1 2] x = [4 8 8] -> x = [1 2 3]
  const std::vector<double> lower{0.0, 1.0, 1.0}, diag{2.0, 2.0, 2.0}, upper{1.0, 1.0, 0.0},
      rhs{4.0, 8.0, 8.0};
  const auto x = solve_tridiagonal(lower, diag, upper, rhs);
  REQUIRE(x.size() == 3);
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(2.0));
  CHECK(x[2] == doctest::Approx(3.0));
  CHECK_THROWS(solve_tridiagonal(lower, diag, upper, std::vector<double>{1.0}));
}

TEST_CASE("natural cubic spline reproduces lines and converges on smooth data") {
  std::vector<double> xs, line, sines;
  for (int i = 0; i <= 40; ++i) {
    const double x = i / 40.0;
    xs.push_back(x);
    line.push_back(3.0 * x - 1.0);
    sines.push_back(std::sin(x));
  }
  const CubicSpline l(xs, line);
  CHECK(l(0.123) == doctest::Approx(3.0 * 0.123 - 1.0).epsilon(1e-14));
  CHECK(l(-1.0) == doctest::Approx(-1.0));  // clamped
  const CubicSpline s(xs, sines);
  for (double x : {0.3, 0.51, 0.77}) CHECK(std::abs(s(x) - std::sin(x)) < 1e-6);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p({1.0, 2.0, 3.0});
  CHECK(p(2.0) == doctest::Approx(17.0));
  CHECK(p.derivative() == Polynomial({2.0, 6.0}));
  CHECK(Polynomial({0.0, 0.0}).is_zero());
  CHECK(Polynomial({0.0, 0.0}).degree() == -1);
  CHECK((p - p).is_zero());
  CHECK((p + Polynomial({0.0, 0.0, -3.0})).degree() == 1);
  CHECK((2.0 * p) == Polynomial({2.0, 4.0, 6.0}));
  CHECK(p.coeff(7) == 0.0);
}
