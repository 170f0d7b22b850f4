"""Principal angles and uniform inclination between projector subspaces."""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy import linalg

from ..errors import InvalidProjectorError
from ..utils import is_projector, max_abs, numerical_rank, orthonormal_frame, range_frame

PROJECTOR_TOL = 1e-8
INTERSECTION_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class SubspaceFrame:
    """Orthonormal columns spanning a subspace of the d^2-dimensional space."""

    frame: np.ndarray

    @property
    def ambient(self) -> int:
        return self.frame.shape[0]

    @property
    def dim(self) -> int:
        return self.frame.shape[1]

    @property
    def projector(self) -> np.ndarray:
        return self.frame @ self.frame.conj().T

    @classmethod
    def from_projector(cls, p: np.ndarray, tol: float = PROJECTOR_TOL) -> "SubspaceFrame":
        _require_projector(p, tol)
        return cls(frame=range_frame(p))

    @classmethod
    def from_vectors(cls, vectors: np.ndarray) -> "SubspaceFrame":
        """Span of the given columns."""
        return cls(frame=orthonormal_frame(np.asarray(vectors)))


def _require_projector(p: np.ndarray, tol: float) -> None:
    if not is_projector(np.asarray(p), tol):
        raise InvalidProjectorError("Expected a Hermitian idempotent matrix")


def principal_cosines(
    p: np.ndarray, pp: np.ndarray, tol: float = PROJECTOR_TOL
) -> np.ndarray:
    """Cosines of the principal angles between range(p) and range(pp), descending."""
    a = SubspaceFrame.from_projector(p, tol)
    b = SubspaceFrame.from_projector(pp, tol)
    if a.ambient != b.ambient:
        raise InvalidProjectorError(f"Ambient sizes differ: {a.ambient} vs {b.ambient}")
    if a.dim == 0 or b.dim == 0:
        return np.zeros(0)
    cosines = linalg.svdvals(a.frame.conj().T @ b.frame)
    return np.clip(np.sort(cosines)[::-1], 0.0, 1.0)


def intersection_dimension(
    p: np.ndarray, pp: np.ndarray, tol: float = INTERSECTION_TOL
) -> int:
    return int(np.count_nonzero(principal_cosines(p, pp) > 1 - tol))


def inclination(p: np.ndarray, pp: np.ndarray) -> Tuple[float, float]:
    """Residual of P P' P = c^2 P with c^2 = Tr(P P' P)/rank(P), and c itself."""
    p, pp = np.asarray(p), np.asarray(pp)
    rank, rank_p = numerical_rank(p), numerical_rank(pp)
    if rank != rank_p:
        raise InvalidProjectorError(f"Projector ranks differ: {rank} vs {rank_p}")
    if rank == 0:
        raise InvalidProjectorError("Uniform inclination of zero subspaces")
    sandwich = p @ pp @ p
    c2 = float(np.trace(sandwich).real) / rank
    return max_abs(sandwich - c2 * p), float(np.sqrt(max(c2, 0.0)))


def check_uniform_inclination(
    p: np.ndarray, pp: np.ndarray, tol: float = PROJECTOR_TOL
) -> Tuple[bool, float]:
    residual, cos_theta = inclination(p, pp)
    return residual < tol, cos_theta
