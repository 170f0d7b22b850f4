"""Gram projectors and vector-set reconstruction from them."""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import InvalidTensorError, NotReconstructibleError
from ..sic import SicSet
from ..tensors import k_matrix
from ..utils import hermiticity_error, unit_eigenbasis

logger = logging.getLogger(__name__)

ANTISYMMETRY_TOL = 1e-12


def dimension_of(n: int) -> int:
    d = int(round(np.sqrt(n)))
    if d < 2 or d * d != n:
        raise InvalidTensorError(f"Index range {n} is not d^2 for an integer d >= 2")
    return d


@dataclass(frozen=True, eq=False)
class GramProjector:
    """P_rs = K_rs exp(i theta_rs)/d; a rank-d projector exactly for SIC families."""

    d: int
    P: np.ndarray


def require_antisymmetric(theta2: np.ndarray, tol: float = ANTISYMMETRY_TOL) -> int:
    theta2 = np.asarray(theta2, dtype=float)
    if theta2.ndim != 2 or theta2.shape[0] != theta2.shape[1]:
        raise InvalidTensorError(f"Order-2 angle tensor has shape {theta2.shape}")
    d = dimension_of(theta2.shape[0])
    phase = np.exp(1j * theta2)
    error = float(np.max(np.abs(phase * phase.T - 1.0)))
    if error > tol:
        raise InvalidTensorError(f"Angle tensor is not antisymmetric ({error:.3e})")
    return d


def gram_projector_from_angle2(theta2: np.ndarray) -> GramProjector:
    d = require_antisymmetric(theta2)
    P = k_matrix(d) * np.exp(1j * np.asarray(theta2, dtype=float)) / d
    return GramProjector(d=d, P=P)


def projector_traces(gp: GramProjector) -> Tuple[float, float, float, float]:
    """Tr P^k for k = 1..4."""
    p2 = gp.P @ gp.P
    return (
        float(np.trace(gp.P).real),
        float(np.trace(p2).real),
        float(np.trace(p2 @ gp.P).real),
        float(np.trace(p2 @ p2).real),
    )


def check_rank_d_projector(gp: GramProjector, tol: float = 1e-8) -> bool:
    """True iff Tr P = Tr P^2 = Tr P^3 = Tr P^4 = d within tol."""
    if hermiticity_error(gp.P) > tol:
        return False
    return all(abs(t - gp.d) <= tol for t in projector_traces(gp))


def povm_from_gram_projector(gp: GramProjector, tol: float = 1e-8) -> np.ndarray:
    """Rows |xi_r> = sum_a conj(xi_{ar}) |a> from the unit eigenspace of P.

    The result satisfies <xi_r|xi_s> = P_rs and sum_r |xi_r><xi_r| = I.
    """
    if not check_rank_d_projector(gp, tol):
        raise NotReconstructibleError("Gram projector candidate is not rank-d")
    basis = unit_eigenbasis(gp.P)
    if basis.shape[1] != gp.d:
        raise NotReconstructibleError(
            f"Unit eigenspace has dimension {basis.shape[1]}, expected {gp.d}"
        )
    return basis.conj()


def sic_from_gram_projector(gp: GramProjector, tol: float = 1e-8) -> SicSet:
    """Rescale the reconstructed |xi_r> by sqrt(d) into unit vectors."""
    return SicSet(np.sqrt(gp.d) * povm_from_gram_projector(gp, tol))
