"""Axisymmetric Boussinesq flow by finite Hankel transform and heat series."""

from ._core import (
    DimensionlessParams,
    HeatSolution,
    ModeState,
    PhysicalParams,
    RootTable,
    SpectralCoeffs,
    SpectralModel,
    Snapshot,
    check_orthogonality,
    check_roots,
    derive,
    evolve,
    find_roots,
    forward,
    inverse,
    j_three_half,
    j_three_half_prime,
    mode_integral,
    phi_bar,
    roundtrip_error,
    snapshot,
    t_hat_derivative,
    tan_root,
    temperature,
    velocity,
)

__version__ = "0.1.0"
