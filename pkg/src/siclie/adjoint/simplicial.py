"""Trace-zero simplicial basis of sl(d) built from SIC projectors."""

import logging
from typing import Optional, Tuple

import numpy as np

from ..reporting import VerificationReport
from ..sic import SicSet
from ..utils import max_abs

logger = logging.getLogger(__name__)


def ad_matrix(a: np.ndarray) -> np.ndarray:
    """Matrix of X -> [A, X] acting on row-major vec(X)."""
    a = np.asarray(a, dtype=complex)
    eye = np.eye(a.shape[0])
    return np.kron(a, eye) - np.kron(eye, a.T)


def killing_form(a: np.ndarray, b: np.ndarray) -> complex:
    """Tr(ad_A ad_B), evaluated with explicit adjoint matrices."""
    return complex(np.trace(ad_matrix(a) @ ad_matrix(b)))


def simplicial_basis(
    sic: SicSet, tol: float = 1e-9, rng: Optional[np.random.Generator] = None
) -> Tuple[np.ndarray, VerificationReport]:
    """B_r = (Pi_r - I/d) / sqrt(2(d-1)), with the checks that make it a regular simplex.

    On trace-zero operators the Killing form is 2d Tr(AB); the B_r have unit
    Killing norm and pairwise products -1/(d^2-1). A trace-zero A is recovered
    from a_r = ((d^2-1)/d^2) <A, B_r>.
    """
    d, n = sic.d, sic.n
    rng = rng if rng is not None else np.random.default_rng(0)
    B = (sic.projectors - np.eye(d) / d) / np.sqrt(2 * (d - 1))
    report = VerificationReport()

    report.measure("adjoint.simplex.trace_zero", max_abs(np.einsum("rii->r", B)), tol)
    report.measure("adjoint.simplex.sum_zero", float(np.linalg.norm(B.sum(axis=0))), tol)
    killing = 2 * d * np.einsum("rab,sba->rs", B, B)
    expected = np.where(np.eye(n, dtype=bool), 1.0, -1.0 / (d * d - 1))
    report.measure("adjoint.simplex.killing", max_abs(killing - expected), tol)
    # explicit ad matrices on the diagonal and on neighbouring pairs
    explicit = max(
        abs(killing_form(B[r], B[s]) - expected[r, s])
        for r in range(n)
        for s in (r, (r + 1) % n)
    )
    report.measure("adjoint.simplex.killing_explicit", explicit, tol)

    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    a -= np.trace(a) / d * np.eye(d)
    coeffs = (d * d - 1) / d**2 * 2 * d * np.einsum("ab,rba->r", a, B)
    rebuilt = np.einsum("r,rij->ij", coeffs, B)
    report.measure("adjoint.simplex.reconstruction", max_abs(rebuilt - a), 1e-8)
    report.measure("adjoint.simplex.coefficient_sum", abs(coeffs.sum()), 1e-8)
    logger.debug(f"simplicial_basis d={d}: {report.summary()}")
    return B, report


def killing_relation_check(
    sic: SicSet, J: np.ndarray, tol: float = 1e-9
) -> VerificationReport:
    """Tr(ad ad) and Tr(J_r J_s) both equal 2d Tr(Pi_r Pi_s) - 2."""
    d = sic.d
    pi = sic.projectors
    ads = np.array([ad_matrix(p) for p in pi])
    direct = np.einsum("rab,sba->rs", ads, ads)
    expected = 2 * d * np.einsum("rab,sba->rs", pi, pi) - 2
    report = VerificationReport()
    report.measure("adjoint.killing.ad_matrices", max_abs(direct - expected), tol)
    report.measure(
        "adjoint.killing.structure_constants",
        max_abs(np.einsum("rab,sba->rs", J, J) - expected),
        tol,
    )
    return report
