"""Expansion coefficients and the algebraic identities of SIC triple products."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..reporting import VerificationReport
from ..sic import SicSet
from ..utils import max_abs
from .gram import TripleTensors, k_matrix, triple_products

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_D = 4
MIN_SAMPLED_TUPLES = 100_000


def expand(a: np.ndarray, sic: SicSet) -> np.ndarray:
    """a_r = ((d+1)/d) Tr(Pi_r A) - Tr(A)/d."""
    d = sic.d
    tr_pa = np.einsum("ri,ij,rj->r", sic.vectors.conj(), a, sic.vectors)
    return (d + 1) / d * tr_pa - np.trace(a) / d


def reassemble(coeffs: np.ndarray, sic: SicSet) -> np.ndarray:
    return np.einsum("r,rij->ij", coeffs, sic.projectors)


def expansion_check(
    sic: SicSet, rng: np.random.Generator, tol: float = 1e-9
) -> VerificationReport:
    d = sic.d
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    report = VerificationReport()
    report.measure("tensors.expansion", max_abs(reassemble(expand(a, sic), sic) - a), tol)
    return report


def anchor_indices(n: int, per_anchor: int, seed: Optional[int], d: int) -> np.ndarray:
    """Every anchor for d <= 4, else a seeded sample covering >= 1e5 tuples."""
    if d <= EXHAUSTIVE_MAX_D:
        return np.arange(n)
    count = min(n, -(-MIN_SAMPLED_TUPLES // per_anchor))
    rng = np.random.default_rng(seed)
    return np.sort(rng.choice(n, size=count, replace=False))


def check_two_design(
    sic: SicSet, tol: float = 1e-9, seed: Optional[int] = 0
) -> VerificationReport:
    """sum_r G_{s1 r} G_{s2 r} G_{r t1} G_{r t2} = d/(d+1) (G G + G G)."""
    d, n = sic.d, sic.n
    G = sic.overlaps
    pair = np.einsum("rt,ru->rtu", G, G).reshape(n, n * n)
    anchors = anchor_indices(n, n**3, seed, d)
    worst = 0.0
    for s1 in anchors:
        lhs = ((G * G[s1][None, :]) @ pair).reshape(n, n, n)
        rhs = d / (d + 1) * (
            G[s1][None, :, None] * G[:, None, :] + G[s1][None, None, :] * G[:, :, None]
        )
        worst = max(worst, max_abs(lhs - rhs))
    report = VerificationReport()
    detail = f"{len(anchors)} of {n} anchors, {len(anchors) * n**3} tuples"
    report.measure("tensors.two_design", worst, tol, detail=detail)
    logger.debug(f"two-design d={d}: {worst:.2e} over {detail}")
    return report


def jacobi_check(
    trip: TripleTensors, tol: float = 1e-9, seed: Optional[int] = 0
) -> VerificationReport:
    """max |sum_b (J_rsb J_tba + J_stb J_rba + J_trb J_sba)| over (r, s, t, a)."""
    J = trip.J
    n = trip.n
    anchors = anchor_indices(n, n**3, seed, trip.d)
    worst = 0.0
    for r in anchors:
        first = np.tensordot(J[r], J, axes=([1], [1]))
        second = np.tensordot(J, J[r], axes=([2], [0]))
        third = np.tensordot(J[:, r, :], J, axes=([1], [1])).transpose(1, 0, 2)
        worst = max(worst, max_abs(first + second + third))
    report = VerificationReport()
    report.measure("tensors.jacobi", worst, tol, detail=f"{len(anchors)} anchors")
    return report


@dataclass
class PureStateResult:
    is_pure: bool
    quadratic_residual: float
    cubic_residual: float


def pure_state_check(
    p: np.ndarray, trip: TripleTensors, tol: float = 1e-9
) -> PureStateResult:
    """sum p^2 = 2/(d(d+1)) and sum R_rst p_r p_s p_t = 2(d+7)/(d(d+1)^2)."""
    d = trip.d
    p = np.asarray(p, dtype=float)
    quadratic = abs(p @ p - 2 / (d * (d + 1)))
    cubic_value = np.einsum("rst,r,s,t->", trip.R, p, p, p)
    cubic = abs(cubic_value - 2 * (d + 7) / (d * (d + 1) ** 2))
    return PureStateResult(
        is_pure=quadratic <= tol and cubic <= tol,
        quadratic_residual=float(quadratic),
        cubic_residual=float(cubic),
    )


def commutator_expansion_check(
    sic: SicSet, trip: TripleTensors, tol: float = 1e-9
) -> VerificationReport:
    """Commutator, anticommutator and product expansions over all (r, s)."""
    d = sic.d
    pi = sic.projectors
    eye = np.eye(d)
    k2 = k_matrix(d) ** 2
    prod = np.einsum("rij,sjk->rsik", pi, pi)
    swapped = prod.transpose(1, 0, 2, 3)

    comm = prod - swapped
    comm_rhs = np.einsum("rst,tij->rsij", trip.J, pi)
    anti = prod + swapped
    anti_rhs = np.einsum("rst,tij->rsij", trip.R, pi) - 2 * k2[:, :, None, None] * eye
    prod_rhs = (d + 1) / d * np.einsum("rst,tij->rsij", trip.T, pi)
    prod_rhs = prod_rhs - k2[:, :, None, None] * eye

    report = VerificationReport()
    report.measure("tensors.commutator", max_abs(comm - comm_rhs), tol)
    report.measure("tensors.anticommutator", max_abs(anti - anti_rhs), tol)
    report.measure("tensors.product_rule", max_abs(prod - prod_rhs), tol)
    return report


def gauge_invariance_check(
    sic: SicSet, rng: np.random.Generator, tol: float = 1e-10
) -> VerificationReport:
    """theta_rst must not move under |psi_r> -> exp(i phi_r)|psi_r>."""
    phases = rng.uniform(-np.pi, np.pi, size=sic.n)
    before = triple_products(sic).theta3
    after = triple_products(sic.rephased(phases)).theta3
    report = VerificationReport()
    report.measure(
        "tensors.theta3_gauge_invariance",
        max_abs(np.exp(1j * before) - np.exp(1j * after)),
        tol,
    )
    return report
