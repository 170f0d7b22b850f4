"""SIC sets: construction from a fiducial, validation, and state tools."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple

import numpy as np

from ..errors import InvalidStateError
from ..reporting import VerificationReport
from ..utils import max_abs
from ..weyl import DisplacementIndex, check_dimension, displacement_stack, phase_space

logger = logging.getLogger(__name__)

FIDUCIAL_NORM_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Fiducial:
    """A state |psi> whose Weyl-Heisenberg orbit is a candidate SIC."""

    components: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.components, dtype=complex)
        if v.ndim != 1:
            raise InvalidStateError(f"Fiducial must be a vector, got shape {v.shape}")
        check_dimension(v.shape[0])
        object.__setattr__(self, "components", v)

    @property
    def d(self) -> int:
        return self.components.shape[0]

    @property
    def norm_error(self) -> float:
        return abs(float(np.linalg.norm(self.components)) - 1.0)

    def is_normalized(self, tol: float = FIDUCIAL_NORM_TOL) -> bool:
        return self.norm_error <= tol

    def require_normalized(self, tol: float = FIDUCIAL_NORM_TOL) -> "Fiducial":
        if not self.is_normalized(tol):
            raise InvalidStateError(
                f"Fiducial norm deviates from 1 by {self.norm_error:.3e}"
            )
        return self


@dataclass(frozen=True, eq=False)
class SicSet:
    """d^2 unit vectors in dimension d, one row per vector."""

    vectors: np.ndarray
    label_map: Optional[Tuple[DisplacementIndex, ...]] = None

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2 or v.shape[0] != v.shape[1] ** 2:
            raise InvalidStateError(f"Expected (d^2, d) vectors, got shape {v.shape}")
        check_dimension(v.shape[1])
        object.__setattr__(self, "vectors", v)

    @property
    def d(self) -> int:
        return self.vectors.shape[1]

    @property
    def n(self) -> int:
        return self.vectors.shape[0]

    @cached_property
    def projectors(self) -> np.ndarray:
        """Pi_r = |psi_r><psi_r|, shape (d^2, d, d)."""
        return np.einsum("ri,rj->rij", self.vectors, self.vectors.conj())

    @cached_property
    def overlaps(self) -> np.ndarray:
        """G_rs = <psi_r|psi_s>."""
        return self.vectors.conj() @ self.vectors.T

    def rephased(self, phases: np.ndarray) -> "SicSet":
        """|psi_r> -> exp(i phi_r)|psi_r>."""
        phases = np.exp(1j * np.asarray(phases))[:, None]
        return SicSet(self.vectors * phases, self.label_map)

    def transformed(self, unitary: np.ndarray) -> "SicSet":
        return SicSet(self.vectors @ np.asarray(unitary).T, self.label_map)


def sic_from_fiducial(fid: Fiducial) -> SicSet:
    """Orbit D_p|psi> over p in Z_d x Z_d, row-major in (p1, p2)."""
    fid.require_normalized()
    d = fid.d
    vectors = displacement_stack(d) @ fid.components
    return SicSet(vectors, tuple(phase_space(d)))


def sic_targets(d: int) -> np.ndarray:
    """(d delta_rs + 1)/(d + 1) on the d^2 x d^2 index grid."""
    n = d * d
    return (d * np.eye(n) + 1.0) / (d + 1)


def validate_sic(sic: SicSet, tol: float = 1e-9) -> VerificationReport:
    """Check squared overlaps and the resolution of the identity."""
    d = sic.d
    overlap_error = max_abs(np.abs(sic.overlaps) ** 2 - sic_targets(d))
    frame = sic.vectors.T @ sic.vectors.conj()
    identity_error = max_abs(frame - d * np.eye(d))
    report = VerificationReport()
    report.measure("sic.overlaps", overlap_error, tol)
    report.measure("sic.resolution_of_identity", identity_error, tol)
    logger.debug(f"validate_sic d={d}: overlaps {overlap_error:.2e}")
    return report


def probabilities(rho: np.ndarray, sic: SicSet) -> np.ndarray:
    """p_r = Tr(Pi_r rho)/d."""
    values = np.einsum("ri,ij,rj->r", sic.vectors.conj(), rho, sic.vectors)
    return values.real / sic.d


def state_from_probabilities(p: np.ndarray, sic: SicSet) -> np.ndarray:
    """rho = sum_r ((d+1) p_r - 1/d) Pi_r."""
    d = sic.d
    coeffs = (d + 1) * np.asarray(p, dtype=float) - 1.0 / d
    return np.einsum("r,rij->ij", coeffs, sic.projectors)


def random_fiducial(d: int, rng: np.random.Generator) -> Fiducial:
    """Haar-random unit vector."""
    check_dimension(d)
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return Fiducial(v / np.linalg.norm(v))


def random_density_matrix(d: int, rng: np.random.Generator, rank: int = 1) -> np.ndarray:
    """rho = A A^dagger / Tr(A A^dagger) with A of shape (d, rank)."""
    a = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real
