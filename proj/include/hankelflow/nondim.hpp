#pragma once

#include <stdexcept>
#include <type_traits>

#include "hankelflow/errors.hpp"

/// Physical parameters to dimensionless groups. Units: time d^2/kappa,
/// length d, temperature gamma d^2 / kappa, with gamma = H / (rho c).
namespace hankelflow::nondim {

/// SI inputs. Templated on the scalar so the formulas can be evaluated with
/// unit-carrying types.
template <typename Scalar>
struct BasicPhysicalParams {
  Scalar nu;     // kinematic viscosity [m^2/s]
  Scalar kappa;  // thermal diffusivity [m^2/s]
  Scalar g;      // gravity [m/s^2]
  Scalar alpha;  // thermal expansion [1/K]
  Scalar d;      // layer depth [m]
  Scalar H;      // volumetric heat flux [W/m^3]
  Scalar rho;    // density [kg/m^3]
  Scalar c;      // specific heat [J/(kg K)]
  Scalar T1;     // lower plate temperature [K]
  Scalar T2;     // upper plate temperature [K]
};

template <typename Scalar>
struct BasicDimensionlessParams {
  decltype(Scalar{} / Scalar{}) prandtl;
  decltype(Scalar{} / Scalar{}) rayleigh;
  decltype(Scalar{} / Scalar{}) t_tilde;
  Scalar gamma;              // H / (rho c) [K/s]
  Scalar time_scale;         // d^2 / kappa [s]
  Scalar length_scale;       // d [m]
  Scalar temperature_scale;  // gamma d^2 / kappa [K]
};

/// Source rate, Prandtl and heat Rayleigh numbers, wall temperature contrast
/// and scales. No positivity checks; see derive().
template <typename Scalar>
auto derive_unchecked(const BasicPhysicalParams<Scalar>& p) {
  const auto gamma = p.H / (p.rho * p.c);
  const auto d2 = p.d * p.d;
  const auto d5 = d2 * d2 * p.d;
  const auto time_scale = d2 / p.kappa;
  const auto temperature_scale = gamma * d2 / p.kappa;
  return BasicDimensionlessParams<std::remove_cvref_t<decltype(gamma)>>{
      p.nu / p.kappa,
      p.g * p.alpha * d5 * gamma / (p.kappa * p.kappa * p.nu),
      p.kappa / (gamma * d2) * (p.T1 - p.T2),
      gamma,
      time_scale,
      p.d,
      temperature_scale,
  };
}

using PhysicalParams = BasicPhysicalParams<double>;
using DimensionlessParams = BasicDimensionlessParams<double>;

/// Validates nu, kappa, d, rho, c > 0 and a nonzero source before deriving.
/// T2 > T1 (negative t_tilde) is allowed.
DimensionlessParams derive(const PhysicalParams& p);

}  // namespace hankelflow::nondim
