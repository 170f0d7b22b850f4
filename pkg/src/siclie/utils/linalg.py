"""Dense linear-algebra helpers shared across the package."""

from typing import Optional

import numpy as np
from scipy import linalg

RANK_RTOL = 1e-8
PHASE_EPS = 1e-10
EIGEN_CUT = 0.5


def max_abs(a) -> float:
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a)))


def numerical_rank(a: np.ndarray, rtol: float = RANK_RTOL) -> int:
    """Count singular values above rtol times the largest one."""
    s = linalg.svdvals(a)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > rtol * s[0]))


def hermiticity_error(a: np.ndarray) -> float:
    return max_abs(a - a.conj().T)


def is_hermitian(a: np.ndarray, tol: float = 1e-10) -> bool:
    a = np.asarray(a)
    return a.ndim == 2 and a.shape[0] == a.shape[1] and hermiticity_error(a) <= tol


def idempotence_error(p: np.ndarray) -> float:
    return max_abs(p @ p - p)


def is_projector(p: np.ndarray, tol: float = 1e-8) -> bool:
    return is_hermitian(p, tol) and idempotence_error(p) <= tol


def outer(u: np.ndarray, v: Optional[np.ndarray] = None) -> np.ndarray:
    """Return |u><v|, with v defaulting to u."""
    v = u if v is None else v
    return np.outer(u, v.conj())


def wrap_angle(theta) -> np.ndarray:
    """Wrap angles into (-pi, pi], snapping values within 1e-12 of +-pi to pi."""
    wrapped = np.mod(np.asarray(theta, dtype=float) + np.pi, 2 * np.pi) - np.pi
    return np.where(np.abs(np.abs(wrapped) - np.pi) < 1e-12, np.pi, wrapped)


def fix_phase_first(v: np.ndarray, eps: float = PHASE_EPS) -> np.ndarray:
    """Rotate v so its first component above eps in magnitude is real positive."""
    idx = np.flatnonzero(np.abs(v) > eps)
    if idx.size == 0:
        return v
    c = v[idx[0]]
    return v * (np.conj(c) / abs(c))


def fix_phase_largest(v: np.ndarray) -> np.ndarray:
    """Rotate v so its largest-magnitude component is real positive."""
    c = v[int(np.argmax(np.abs(v)))]
    if c == 0:
        return v
    return v * (np.conj(c) / abs(c))


def unit_eigenbasis(p: np.ndarray, cut: float = EIGEN_CUT) -> np.ndarray:
    """Deterministic orthonormal basis of the eigenspace of p above cut.

    The eigenspace is found with eigh; the returned basis does not depend on
    the solver's choice of eigenvectors. Standard basis vectors are projected
    into the eigenspace in index order and Gram-Schmidt orthonormalized, and
    each accepted vector has its first nonzero component made real positive.
    Columns of the result span the eigenspace.
    """
    evals, evecs = linalg.eigh(p)
    order = np.argsort(evals)[::-1]
    evals, evecs = evals[order], evecs[:, order]
    k = int(np.count_nonzero(evals > cut))
    n = p.shape[0]
    if k == 0:
        return np.zeros((n, 0), dtype=complex)
    u = evecs[:, :k]
    proj = u @ u.conj().T

    basis = []
    for j in range(n):
        w = proj[:, j].astype(complex)
        for _ in range(2):
            for b in basis:
                w = w - b * np.vdot(b, w)
        norm = np.linalg.norm(w)
        if norm > 1e-3:
            basis.append(fix_phase_first(w / norm))
        if len(basis) == k:
            break
    return np.column_stack(basis)


def orthonormal_frame(vectors: np.ndarray, rtol: float = RANK_RTOL) -> np.ndarray:
    """Orthonormal basis (columns) for the span of the given columns."""
    if vectors.size == 0:
        return np.zeros((vectors.shape[0], 0), dtype=vectors.dtype)
    u, s, _ = linalg.svd(vectors, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((vectors.shape[0], 0), dtype=vectors.dtype)
    return u[:, s > rtol * s[0]]


def range_frame(p: np.ndarray, rtol: float = RANK_RTOL) -> np.ndarray:
    """Orthonormal basis for the range of a Hermitian positive semidefinite p."""
    evals, evecs = linalg.eigh(p)
    top = np.max(np.abs(evals)) if evals.size else 0.0
    if top == 0.0:
        return np.zeros((p.shape[0], 0), dtype=evecs.dtype)
    return evecs[:, evals > rtol * top]
