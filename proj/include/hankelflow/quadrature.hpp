#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace hankelflow::quadrature {

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  std::size_t max_panels = 4000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t panels = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration over the
/// consecutive intervals defined by `breakpoints` (sorted, at least two
/// entries). The panel with the largest error estimate is bisected until the
/// summed estimate meets the tolerance. Panels are summed in left-to-right
/// order, so the result depends only on the inputs.
///
/// Throws QuadratureError carrying the achieved estimate on failure.
Result integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                 const Options& opts = {});

/// Single interval convenience overload.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

}  // namespace hankelflow::quadrature
