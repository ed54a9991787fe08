"""Fractional Dirichlet energies, Riesz and L2 capacities on the unit circle."""

from ._core import (
    ConstructionError,
    ConvergenceError,
    Error,
    Grid,
    PreconditionError,
    cantor_arcs,
    cantor_capacity_series,
    carleson_sum,
    classical_capacity,
    diagnose_series,
    dirichlet_energy,
    energy_weight,
    example_arc_lengths,
    extend,
    extension_ratio,
    kernel,
    l2_capacity,
    local_energy,
    monomial,
    poincare_check,
    selftest,
    spike,
    trig_polynomial,
)

__version__ = "0.1.0"
