"""Utility functions and helpers."""

from .linalg import (
    fix_phase_first,
    fix_phase_largest,
    hermiticity_error,
    idempotence_error,
    is_hermitian,
    is_projector,
    max_abs,
    numerical_rank,
    orthonormal_frame,
    outer,
    range_frame,
    unit_eigenbasis,
    wrap_angle,
)

__all__ = [
    "fix_phase_first",
    "fix_phase_largest",
    "hermiticity_error",
    "idempotence_error",
    "is_hermitian",
    "is_projector",
    "max_abs",
    "numerical_rank",
    "orthonormal_frame",
    "outer",
    "range_frame",
    "unit_eigenbasis",
    "wrap_angle",
]
