"""Unitary equivalence of SIC sets through their order-3 angle tensors."""

import logging
from typing import Optional

import numpy as np

from ..errors import InternalInconsistencyError, InvalidDimensionError
from ..sic import SicSet
from ..tensors import gram, triple_from_gram
from ..utils import max_abs
from .angles import gauge_equivalent

logger = logging.getLogger(__name__)


def fidelity_deficit(unitary: np.ndarray, set1: SicSet, set2: SicSet) -> float:
    """max_r (1 - |<U psi1_r | psi2_r>|)."""
    mapped = set1.vectors @ unitary.T
    overlaps = np.abs(np.einsum("ri,ri->r", mapped.conj(), set2.vectors))
    return float(np.max(1.0 - overlaps))


def recover_unitary(
    set1: SicSet, set2: SicSet, tol: float = 1e-7, check_tol: float = 1e-6
) -> Optional[np.ndarray]:
    """Return U with U psi1_r proportional to psi2_r, or None if inequivalent.

    set1 is first re-gauged so its Gram matrix equals set2's; the basis change
    is then U = (1/d) sum_r |psi2_r><psi1_r'|.
    """
    if set1.d != set2.d:
        raise InvalidDimensionError(f"Dimensions differ: {set1.d} vs {set2.d}")
    d = set1.d
    g1, g2 = gram(set1), gram(set2)
    t1, t2 = triple_from_gram(g1), triple_from_gram(g2)
    mismatch = max_abs(np.exp(1j * t1.theta3) - np.exp(1j * t2.theta3))
    if mismatch > tol:
        logger.info(f"Order-3 angle tensors differ by {mismatch:.3e}; no unitary")
        return None

    gauge = gauge_equivalent(g1.theta2, g2.theta2, tol=tol)
    if not gauge.equivalent:
        raise InternalInconsistencyError(
            f"Order-3 tensors agree but order-2 tensors are not gauge equivalent "
            f"(residual {gauge.residual:.3e})"
        )
    regauged = set1.rephased(gauge.phases)
    unitary = set2.vectors.T @ regauged.vectors.conj() / d

    unitarity = max_abs(unitary @ unitary.conj().T - np.eye(d))
    mapping = max_abs(regauged.vectors @ unitary.T - set2.vectors)
    if unitarity > check_tol or mapping > check_tol:
        raise InternalInconsistencyError(
            f"Recovered map fails: unitarity {unitarity:.3e}, mapping {mapping:.3e}"
        )
    return unitary
