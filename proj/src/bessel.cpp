#include "hankelflow/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hankelflow/errors.hpp"

namespace hankelflow::bessel {
namespace {

constexpr double kSqrt2OverPi = 0.79788456080286535588;  // sqrt(2/pi)

// sin x / x - cos x = x^2/3 - x^4/30 + x^6/840 - x^8/45360 + ...
// Returns the bracket divided by x^2.
double small_bracket_over_x2(double x) {
  const double x2 = x * x;
  return 1.0 / 3.0 + x2 * (-1.0 / 30.0 + x2 * (1.0 / 840.0 - x2 / 45360.0));
}

// d/d(x^2) of small_bracket_over_x2
double small_bracket_over_x2_slope(double x) {
  const double x2 = x * x;
  return -1.0 / 30.0 + x2 * (2.0 / 840.0 - 3.0 * x2 / 45360.0);
}

void require_finite_nonnegative(double x, const char* fn) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError(std::string(fn) + ": argument must be finite and >= 0, got " +
                      std::to_string(x));
  }
}

// g(x) = sin x - x cos x shares its positive zeros with J_{3/2}.
double tan_residual(double x) { return std::sin(x) - x * std::cos(x); }

}  // namespace

double j_half(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("j_half: argument must be finite and > 0");
  }
  return kSqrt2OverPi * std::sin(x) / std::sqrt(x);
}

double j_three_half(double x) {
  require_finite_nonnegative(x, "j_three_half");
  if (x < kSeriesThreshold) {
    return kSqrt2OverPi * x * std::sqrt(x) * small_bracket_over_x2(x);
  }
  return kSqrt2OverPi / std::sqrt(x) * (std::sin(x) / x - std::cos(x));
}

double j_three_half_scaled(double x) {
  require_finite_nonnegative(x, "j_three_half_scaled");
  if (x < kSeriesThreshold) {
    return kSqrt2OverPi * small_bracket_over_x2(x);
  }
  return kSqrt2OverPi * (std::sin(x) / x - std::cos(x)) / (x * x);
}

double j_three_half_prime(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("j_three_half_prime: argument must be finite and > 0, got " +
                      std::to_string(x));
  }
  if (x < kSeriesThreshold) {
    // d/dx [sqrt(2/pi) x^{3/2} S(x^2)]
    const double s = small_bracket_over_x2(x);
    const double ds = small_bracket_over_x2_slope(x);
    return kSqrt2OverPi * std::sqrt(x) * (1.5 * s + 2.0 * x * x * ds);
  }
  return j_half(x) - 1.5 / x * j_three_half(x);
}

double tan_root(std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("tan_root: index starts at 1");
  }
  const double base = static_cast<double>(k) * std::numbers::pi;
  double lo = base;
  double hi = base + 0.5 * std::numbers::pi;
  double g_lo = tan_residual(lo);

  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = tan_residual(mid);
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }

  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 5; ++i) {
    const double step = tan_residual(x) / (x * std::sin(x));
    x -= step;
    if (std::abs(step) <= 1e-15 * x) break;
  }
  return x;
}

RootTable::RootTable(double xi0, std::vector<double> roots, std::vector<double> deriv_at_root)
    : xi0_(xi0), roots_(std::move(roots)), deriv_(std::move(deriv_at_root)) {
  if (!(xi0_ > 0.0) || !std::isfinite(xi0_)) {
    throw std::invalid_argument("RootTable: xi0 must be positive");
  }
  if (roots_.size() != deriv_.size()) {
    throw std::invalid_argument("RootTable: roots and derivatives differ in length");
  }
}

double RootTable::norm(std::size_t n) const {
  const double d = deriv_.at(n);
  return 0.5 * xi0_ * xi0_ * d * d;
}

RootTable RootTable::truncated(std::size_t count) const {
  if (count == 0 || count > roots_.size()) {
    throw std::invalid_argument("RootTable::truncated: count out of range");
  }
  return RootTable(xi0_, {roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(count)},
                   {deriv_.begin(), deriv_.begin() + static_cast<std::ptrdiff_t>(count)});
}

RootTable find_roots(double xi0, std::size_t count) {
  if (!(xi0 > 0.0) || !std::isfinite(xi0)) {
    throw std::invalid_argument("find_roots: xi0 must be positive, got " + std::to_string(xi0));
  }
  if (count < 1) {
    throw std::invalid_argument("find_roots: count must be >= 1");
  }
  std::vector<double> roots(count);
  std::vector<double> deriv(count);
  for (std::size_t n = 0; n < count; ++n) {
    const double x = tan_root(n + 1);
    roots[n] = x / xi0;
    deriv[n] = j_three_half_prime(x);
  }
  return RootTable(xi0, std::move(roots), std::move(deriv));
}

}  // namespace hankelflow::bessel
