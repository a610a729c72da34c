#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "hankelflow/errors.hpp"
#include "hankelflow/nondim.hpp"

using namespace hankelflow;

namespace {

// Value with SI base-dimension exponents (kg, m, s, K). Adding or subtracting
// mismatched dimensions throws.
struct Quantity {
  double value = 0.0;
  std::array<int, 4> dim{};

  friend Quantity operator*(const Quantity& a, const Quantity& b) {
    Quantity q{a.value * b.value, a.dim};
    for (int i = 0; i < 4; ++i) q.dim[i] += b.dim[i];
    return q;
  }
  friend Quantity operator/(const Quantity& a, const Quantity& b) {
    Quantity q{a.value / b.value, a.dim};
    for (int i = 0; i < 4; ++i) q.dim[i] -= b.dim[i];
    return q;
  }
  friend Quantity operator-(const Quantity& a, const Quantity& b) {
    if (a.dim != b.dim) throw std::logic_error("dimension mismatch");
    return {a.value - b.value, a.dim};
  }
};

constexpr std::array<int, 4> kDimensionless{0, 0, 0, 0};

Quantity q(double v, int kg, int m, int s, int k) { return {v, {kg, m, s, k}}; }

nondim::BasicPhysicalParams<Quantity> water() {
  return {
      q(1.0e-6, 0, 2, -1, 0),    // nu
      q(1.4e-7, 0, 2, -1, 0),    // kappa
      q(9.81, 0, 1, -2, 0),      // g
      q(2.1e-4, 0, 0, 0, -1),    // alpha
      q(0.05, 0, 1, 0, 0),       // d
      q(1000.0, 1, -1, -3, 0),   // H, W/m^3
      q(1000.0, 1, -3, 0, 0),    // rho
      q(4184.0, 0, 2, -2, -1),   // c
      q(300.0, 0, 0, 0, 1),      // T1
      q(299.0, 0, 0, 0, 1),      // T2
  };
}

nondim::PhysicalParams unit_params() { return {1, 1, 1, 1, 1, 1, 1, 1, 0, 0}; }

}  // namespace

TEST_CASE("derived groups are dimensionally homogeneous") {
  const auto out = nondim::derive_unchecked(water());
  CHECK(out.prandtl.dim == kDimensionless);
  CHECK(out.rayleigh.dim == kDimensionless);
  CHECK(out.t_tilde.dim == kDimensionless);
  CHECK(out.gamma.dim == std::array<int, 4>{0, 0, -1, 1});
  CHECK(out.time_scale.dim == std::array<int, 4>{0, 0, 1, 0});
  CHECK(out.length_scale.dim == std::array<int, 4>{0, 1, 0, 0});
  CHECK(out.temperature_scale.dim == std::array<int, 4>{0, 0, 0, 1});
}

TEST_CASE("derive examples") {
  auto p = unit_params();
  p.nu = 2.0;
  CHECK(nondim::derive(p).prandtl == 2.0);
  CHECK(nondim::derive(unit_params()).rayleigh == 1.0);

  auto w = unit_params();
  w.H = 1000.0;
  w.rho = 1000.0;
  w.c = 4184.0;
  CHECK(nondim::derive(w).gamma == doctest::Approx(2.3901e-4).epsilon(1e-4));
  CHECK(nondim::derive(w).gamma == doctest::Approx(1000.0 / (1000.0 * 4184.0)));
}

TEST_CASE("Rayleigh number scales as d^5 and t_tilde with the wall contrast") {
  auto p = unit_params();
  double prev = 0.0;
  for (double d : {0.5, 1.0, 2.0, 4.0}) {
    p.d = d;
    const double r = nondim::derive(p).rayleigh;
    CHECK(r > prev);
    CHECK(r == doctest::Approx(std::pow(d, 5)));
    prev = r;
  }
  p = unit_params();
  p.T1 = 3.0;
  p.T2 = 1.0;
  CHECK(nondim::derive(p).t_tilde == doctest::Approx(2.0));
  p.T1 = 1.0;
  p.T2 = 3.0;
  CHECK(nondim::derive(p).t_tilde == doctest::Approx(-2.0));
}

TEST_CASE("derive validates its input") {
  for (auto field : {&nondim::PhysicalParams::nu, &nondim::PhysicalParams::kappa,
                     &nondim::PhysicalParams::d, &nondim::PhysicalParams::rho,
                     &nondim::PhysicalParams::c}) {
    auto p = unit_params();
    p.*field = 0.0;
    CHECK_THROWS_AS(nondim::derive(p), DomainError);
    p.*field = -1.0;
    CHECK_THROWS_AS(nondim::derive(p), DomainError);
  }
  auto p = unit_params();
  p.H = 0.0;
  CHECK_THROWS_AS(nondim::derive(p), DegenerateSourceError);
}
