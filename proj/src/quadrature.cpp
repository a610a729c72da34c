#include "hankelflow/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "hankelflow/errors.hpp"

namespace hankelflow::quadrature {
namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double abs_value;
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  double abs_sum = std::abs(kronrod);

  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kKronrodWeights[j] * (f1 + f2);
    abs_sum += kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) {
      gauss += kGaussWeights[j / 2] * (f1 + f2);
    }
  }
  kronrod *= half;
  gauss *= half;
  abs_sum *= std::abs(half);
  if (!std::isfinite(kronrod)) {
    throw QuadratureError("integrate: non-finite integrand on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]",
                          std::numeric_limits<double>::infinity());
  }
  return {a, b, kronrod, std::abs(kronrod - gauss), abs_sum};
}

struct ByError {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.a > rhs.a;
  }
};

}  // namespace

Result integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                 const Options& opts) {
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("integrate: need at least two breakpoints");
  }
  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  double total_error = 0.0;
  double total_value = 0.0;
  double total_abs = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] < breakpoints[i]) {
      throw std::invalid_argument("integrate: breakpoints must be sorted");
    }
    if (breakpoints[i + 1] == breakpoints[i]) continue;
    Panel p = gauss_kronrod(f, breakpoints[i], breakpoints[i + 1]);
    total_error += p.error;
    total_value += p.value;
    total_abs += p.abs_value;
    queue.push(p);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto target = [&] {
    return std::max({opts.abs_tol, opts.rel_tol * std::abs(total_value), 50.0 * eps * total_abs});
  };

  while (!queue.empty() && total_error > target()) {
    if (queue.size() >= opts.max_panels) {
      throw QuadratureError("integrate: panel budget exhausted, error estimate " +
                                std::to_string(total_error),
                            total_error);
    }
    Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      throw QuadratureError("integrate: panel collapsed to machine resolution, error estimate " +
                                std::to_string(total_error),
                            total_error);
    }
    queue.pop();
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    total_value += left.value + right.value - worst.value;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum from scratch in left-to-right order; the running totals above
  // only steer refinement.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  Result result;
  result.panels = panels.size();
  for (const Panel& p : panels) {
    result.value += p.value;
    result.error += p.error;
  }
  return result;
}

Result integrate(const std::function<double(double)>& f, double a, double b, const Options& opts) {
  const std::array<double, 2> ends{a, b};
  return integrate(f, ends, opts);
}

}  // namespace hankelflow::quadrature
