#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hankelflow/bessel.hpp"
#include "hankelflow/hankel.hpp"
#include "hankelflow/heat_series.hpp"
#include "hankelflow/polynomial.hpp"

/// Per-mode solution of the Hankel-transformed vorticity equation
///
///   Pr^{-1} dPhi_n/dt = -mu_n^2 Phi_n - Upsilon_n(t),
///
/// and reconstruction of Omega = omega / r and omega from the mode series.
namespace hankelflow::spectral {

inline constexpr double kDefaultOdeTol = 1e-9;

struct ModeState {
  std::size_t root_index;  // 1-based
  double mu;
  double phi0;
  double prandtl;
  double rayleigh;
};

struct VorticityField {
  hankel::SpectralCoeffs coeffs;
  double t;
};

/// Phi_n(0) = int_0^xi0 xi^{5/2} Omega0(xi) J_{3/2}(mu_n xi) dxi.
std::vector<double> initial_mode_coeffs(const hankel::RadialProfile& omega0,
                                        const bessel::RootTable& roots,
                                        double quad_tol = hankel::kDefaultQuadTol);

/// Upsilon_n(t) = R int_0^xi0 xi^{3/2} dT^/dxi J_{3/2}(mu_n xi) dxi at the
/// time carried by `heat`.
std::vector<double> upsilon(const heat_series::HeatSolution& heat, const bessel::RootTable& roots,
                            double rayleigh, double quad_tol = hankel::kDefaultQuadTol);

/// Upsilon_n as a polynomial in time for each mode. Polynomial heat data makes
/// the forcing polynomial in t; its coefficients are one quadrature per
/// heat-series term.
std::vector<Polynomial> upsilon_in_time(const heat_series::RadialPolynomial& xi_t0,
                                        const bessel::RootTable& roots, double rayleigh,
                                        double quad_tol = hankel::kDefaultQuadTol);

/// int_0^t exp(-rate (t - tau)) tau^k dtau, evaluated without cancellation.
double decay_convolution(std::size_t k, double rate, double t);

/// Phi_n(t) = Phi_n(0) e^{-Pr mu^2 t} - Pr int_0^t e^{-Pr mu^2 (t - tau)} Upsilon(tau) dtau
/// with the convolution by adaptive quadrature to `ode_tol`.
double phi_bar(const ModeState& mode, const std::function<double(double)>& upsilon_fn, double t,
               double ode_tol = kDefaultOdeTol);

/// Same, with polynomial forcing integrated in closed form.
double phi_bar(const ModeState& mode, const Polynomial& upsilon_poly, double t);

/// Omega(xi, t) = (2 / xi0^2) xi^{-3/2} sum_n Phi_n J_{3/2}(mu_n xi) / [J'_n]^2.
double omega_reduced(const VorticityField& field, double xi);

/// omega(r, z, t) = r Omega(sqrt(r^2 + z^2), t).
double omega_field(const VorticityField& field, double r, double z);

/// Initial data, parameters and precomputed forcing for the whole mode set.
class SpectralModel {
 public:
  SpectralModel(bessel::RootTable roots, heat_series::RadialPolynomial xi_t0,
                std::vector<double> phi0, double prandtl, double rayleigh,
                double quad_tol = hankel::kDefaultQuadTol);

  static SpectralModel from_profiles(bessel::RootTable roots, heat_series::RadialPolynomial xi_t0,
                                     const hankel::RadialProfile& omega0, double prandtl,
                                     double rayleigh, double quad_tol = hankel::kDefaultQuadTol);

  const bessel::RootTable& roots() const noexcept { return roots_; }
  const heat_series::RadialPolynomial& xi_t0() const noexcept { return xi_t0_; }
  const std::vector<double>& phi0() const noexcept { return phi0_; }
  const std::vector<Polynomial>& forcing() const noexcept { return forcing_; }
  double prandtl() const noexcept { return prandtl_; }
  double rayleigh() const noexcept { return rayleigh_; }

  ModeState mode(std::size_t n) const;
  VorticityField vorticity(double t) const;
  heat_series::HeatSolution heat(double t) const { return heat_series::evolve(xi_t0_, t); }

 private:
  bessel::RootTable roots_;
  heat_series::RadialPolynomial xi_t0_;
  std::vector<double> phi0_;
  double prandtl_;
  double rayleigh_;
  std::vector<Polynomial> forcing_;
};

}  // namespace hankelflow::spectral
