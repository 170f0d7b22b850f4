"""Weyl-Heisenberg group: displacements, parity and Wigner function."""

from .whgroup import (
    DisplacementIndex,
    WhOperator,
    check_dimension,
    displacement,
    displacement_stack,
    index_period,
    parity,
    phase_space,
    require_unit,
    tau,
    tau_power,
    wigner,
    wigner_function,
)

__all__ = [
    "DisplacementIndex",
    "WhOperator",
    "check_dimension",
    "displacement",
    "displacement_stack",
    "index_period",
    "parity",
    "phase_space",
    "require_unit",
    "tau",
    "tau_power",
    "wigner",
    "wigner_function",
]
