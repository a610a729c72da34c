#include "hankelflow/spline.hpp"

#include <algorithm>
#include <stdexcept>

namespace hankelflow {

std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (lower.size() != n || upper.size() != n || rhs.size() != n || n == 0) {
    throw std::invalid_argument("solve_tridiagonal: inconsistent sizes");
  }
  std::vector<double> c(n);
  std::vector<double> d(n);
  double pivot = diag[0];
  if (pivot == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
  c[0] = upper[0] / pivot;
  d[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - lower[i] * c[i - 1];
    if (pivot == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
    c[i] = upper[i] / pivot;
    d[i] = (rhs[i] - lower[i] * d[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) {
    d[i] -= c[i] * d[i + 1];
  }
  return d;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)), second_(x_.size(), 0.0) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) {
    throw std::invalid_argument("CubicSpline: need at least two nodes of matching size");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(x_[i] > x_[i - 1])) {
      throw std::invalid_argument("CubicSpline: nodes must be strictly increasing");
    }
  }
  if (n == 2) return;

  const std::size_t m = n - 2;
  std::vector<double> lower(m), diag(m), upper(m), rhs(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t i = k + 1;
    const double h0 = x_[i] - x_[i - 1];
    const double h1 = x_[i + 1] - x_[i];
    lower[k] = h0;
    diag[k] = 2.0 * (h0 + h1);
    upper[k] = h1;
    rhs[k] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
  }
  const auto interior = solve_tridiagonal(lower, diag, upper, rhs);
  std::copy(interior.begin(), interior.end(), second_.begin() + 1);
}

double CubicSpline::operator()(double x) const {
  if (x <= x_.front()) x = x_.front();
  if (x >= x_.back()) x = x_.back();
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - x_.begin());
  if (hi >= x_.size()) hi = x_.size() - 1;
  const std::size_t lo = hi - 1;
  const double h = x_[hi] - x_[lo];
  const double a = (x_[hi] - x) / h;
  const double b = (x - x_[lo]) / h;
  return a * y_[lo] + b * y_[hi] +
         ((a * a * a - a) * second_[lo] + (b * b * b - b) * second_[hi]) * h * h / 6.0;
}

}  // namespace hankelflow
