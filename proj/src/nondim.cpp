#include "hankelflow/nondim.hpp"

#include <cmath>

namespace hankelflow::nondim {

DimensionlessParams derive(const PhysicalParams& p) {
  if (!(p.nu > 0.0) || !(p.kappa > 0.0) || !(p.d > 0.0) || !(p.rho > 0.0) || !(p.c > 0.0)) {
    throw DomainError("nondim::derive: nu, kappa, d, rho and c must be positive");
  }
  if (p.H == 0.0) {
    throw DegenerateSourceError(
        "nondim::derive: heat source H is zero, temperature scale gamma d^2 / kappa vanishes");
  }
  return derive_unchecked(p);
}

}  // namespace hankelflow::nondim
