#pragma once

#include <span>
#include <vector>

namespace hankelflow {

/// Solves a tridiagonal system in place (Thomas algorithm). `lower[0]` and
/// `upper[n-1]` are ignored. Throws std::runtime_error on a zero pivot.
std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs);

/// Natural cubic spline through strictly increasing nodes.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;

  double front() const { return x_.front(); }
  double back() const { return x_.back(); }
  std::span<const double> nodes() const { return x_; }
  std::span<const double> values() const { return y_; }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> second_;  // second derivatives at the nodes
};

}  // namespace hankelflow
