"""Recovering a SIC from a Hermitian basis whose adjoint matrices are Q-Q^T."""

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field
from scipy import linalg

from ..errors import (
    InternalInconsistencyError,
    InvalidMatrixError,
    NotABasisError,
)
from ..sic import SicSet, validate_sic
from ..utils import fix_phase_first, hermiticity_error, max_abs
from .qqt import QQT_TOL, is_qqt

logger = logging.getLogger(__name__)

INDEPENDENCE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """[L_r, L_s] = sum_t C_rst L_t; C[r] is the matrix C_r."""

    C: np.ndarray
    residual: float


class MetricCheckResult(BaseModel):
    """Fit of Tr(L_r L_s) to beta delta_rs + gamma l_r l_s."""

    beta: float
    gamma: float
    kappa: float = Field(description="(1/d) sum_r l_r^2")
    l: List[float] = Field(description="Traces l_r = Tr L_r")
    fit_residual: float
    identity_residual: float = Field(
        description="max |sum_r sign(l_r) L_r - d l I| with l = mean |l_r|"
    )


@dataclass
class ConverseResult:
    """Outcome of sic_from_qqt_basis; sic is None when the basis is rejected."""

    accepted: bool
    sic: Optional[SicSet] = None
    signs: Optional[np.ndarray] = None
    alpha: Optional[float] = None
    l: Optional[float] = None
    l_spread: Optional[float] = None
    reason: Optional[str] = None


def _require_basis(basis: np.ndarray) -> np.ndarray:
    basis = np.asarray(basis, dtype=complex)
    if basis.ndim != 3 or basis.shape[1] != basis.shape[2]:
        raise NotABasisError(f"Expected (d^2, d, d) operators, got {basis.shape}")
    n, d = basis.shape[0], basis.shape[1]
    if n != d * d:
        raise NotABasisError(f"Need d^2 = {d * d} operators, got {n}")
    return basis


def structure_constants(basis: np.ndarray) -> StructureConstants:
    """Solve [L_r, L_s] = sum_t C_rst L_t by least squares over vectorized L_t."""
    basis = _require_basis(basis)
    n, d = basis.shape[0], basis.shape[1]
    vecs = basis.reshape(n, d * d).T
    gram = linalg.eigvalsh(vecs.conj().T @ vecs)
    if gram[0] <= INDEPENDENCE_TOL * gram[-1]:
        raise NotABasisError("Operators are linearly dependent")

    prod = np.einsum("rij,sjk->rsik", basis, basis)
    comm = prod - prod.transpose(1, 0, 2, 3)
    rhs = comm.reshape(n * n, d * d).T
    coeffs, *_ = linalg.lstsq(vecs, rhs)
    residual = max_abs(vecs @ coeffs - rhs)
    C = coeffs.T.reshape(n, n, n)
    return StructureConstants(C=C, residual=residual)


def metric_check(basis: np.ndarray) -> MetricCheckResult:
    basis = _require_basis(basis)
    n, d = basis.shape[0], basis.shape[1]
    if max(hermiticity_error(m) for m in basis) > 1e-10:
        raise InvalidMatrixError("metric_check requires Hermitian operators")
    l_r = np.einsum("rii->r", basis).real
    M = np.einsum("rij,sji->rs", basis, basis).real
    design = np.column_stack([np.eye(n).ravel(), np.outer(l_r, l_r).ravel()])
    (beta, gamma), *_ = linalg.lstsq(design, M.ravel())
    fit_residual = max_abs(M - beta * np.eye(n) - gamma * np.outer(l_r, l_r))
    l_mean = float(np.mean(np.abs(l_r)))
    signed = np.einsum("r,rij->ij", np.sign(l_r), basis)
    return MetricCheckResult(
        beta=float(beta),
        gamma=float(gamma),
        kappa=float(l_r @ l_r / d),
        l=l_r.tolist(),
        fit_residual=fit_residual,
        identity_residual=max_abs(signed - d * l_mean * np.eye(d)),
    )


def planted_basis(sic: SicSet, signs: np.ndarray, alpha: float) -> np.ndarray:
    """L_r = eps_r (Pi_r + alpha I); alpha = -1/d would make every trace vanish."""
    d = sic.d
    if abs(alpha + 1.0 / d) < 1e-12:
        raise NotABasisError("alpha = -1/d gives a linearly dependent family")
    signs = np.asarray(signs, dtype=float)
    return signs[:, None, None] * (sic.projectors + alpha * np.eye(d))


def pauli_basis() -> np.ndarray:
    return np.array(
        [
            [[1, 0], [0, 1]],
            [[0, 1], [1, 0]],
            [[0, -1j], [1j, 0]],
            [[1, 0], [0, -1]],
        ],
        dtype=complex,
    )


def _rank_one_vectors(projectors: np.ndarray, tol: float) -> Optional[np.ndarray]:
    worst = max(
        max(hermiticity_error(p), max_abs(p @ p - p), abs(np.trace(p).real - 1))
        for p in projectors
    )
    if worst > tol:
        return None
    vectors = []
    for p in projectors:
        evals, evecs = linalg.eigh(p)
        vectors.append(fix_phase_first(evecs[:, int(np.argmax(evals))]))
    return np.array(vectors)


def sic_from_qqt_basis(
    basis: np.ndarray, tol: float = QQT_TOL, sic_tol: float = 1e-8
) -> ConverseResult:
    """Recover Pi_r = eps eps'_r L_r - ((eps l - 1)/d) I from a Q-Q^T basis."""
    basis = _require_basis(basis)
    d = basis.shape[1]
    sc = structure_constants(basis)

    for r, c in enumerate(sc.C):
        try:
            ok = is_qqt(c, rank_target=d - 1, tol=tol)
        except InvalidMatrixError:
            ok = False
        if not ok:
            reason = f"C_{r} does not have the Q-Q^T property with rank {d - 1}"
            logger.info(f"Basis rejected: {reason}")
            return ConverseResult(accepted=False, reason=reason)

    l_r = np.einsum("rii->r", basis).real
    l = float(np.mean(np.abs(l_r)))
    l_spread = float(np.max(np.abs(np.abs(l_r) - l)))
    primes = np.sign(l_r)

    for eps in (1.0, -1.0):
        shift = (eps * l - 1.0) / d
        projectors = (eps * primes)[:, None, None] * basis - shift * np.eye(d)
        vectors = _rank_one_vectors(projectors, sic_tol)
        if vectors is None:
            continue
        sic = SicSet(vectors)
        if validate_sic(sic, tol=sic_tol).passed:
            logger.info(f"Recovered SIC from Q-Q^T basis with eps={eps:+.0f}")
            return ConverseResult(
                accepted=True,
                sic=sic,
                signs=eps * primes,
                alpha=shift,
                l=l,
                l_spread=l_spread,
            )

    raise InternalInconsistencyError(
        "Every C_r is Q-Q^T but neither sign choice yields SIC projectors"
    )
