"""Conditions on order-2 and order-3 angle tensors, and gauge equivalence."""

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import InvalidTensorError, NotAnAngleTensorError
from ..sic import SicSet
from ..tensors import k_matrix
from ..utils import max_abs
from .projector import (
    dimension_of,
    gram_projector_from_angle2,
    require_antisymmetric,
    sic_from_gram_projector,
)

logger = logging.getLogger(__name__)


@dataclass
class Angle2Verdict:
    """Residuals of the quadratic projector condition and the two trace sums."""

    holds: bool
    projector_residual: float
    cubic_sum: complex
    quartic_sum: complex
    cubic_residual: float
    quartic_residual: float


def check_angle2_conditions(theta2: np.ndarray, tol: float = 1e-9) -> Angle2Verdict:
    """M = K exp(i theta): M M = d M entrywise, Tr M^3 = d^4, Tr M^4 = d^5."""
    d = require_antisymmetric(theta2)
    m = k_matrix(d) * np.exp(1j * np.asarray(theta2, dtype=float))
    m2 = m @ m
    projector_residual = max_abs(m2 - d * m)
    cubic = complex(np.trace(m2 @ m))
    quartic = complex(np.trace(m2 @ m2))
    return Angle2Verdict(
        holds=projector_residual <= tol,
        projector_residual=projector_residual,
        cubic_sum=cubic,
        quartic_sum=quartic,
        cubic_residual=abs(cubic - d**4),
        quartic_residual=abs(quartic - d**5),
    )


def _require_theta3(theta3: np.ndarray) -> np.ndarray:
    theta3 = np.asarray(theta3, dtype=float)
    if theta3.ndim != 3 or len(set(theta3.shape)) != 1:
        raise InvalidTensorError(f"Order-3 angle tensor has shape {theta3.shape}")
    dimension_of(theta3.shape[0])
    return theta3


def cocycle_residual(theta3: np.ndarray, anchor: int) -> float:
    """max |exp(i(theta_ars + theta_ast + theta_atr)) - exp(i theta_rst)|."""
    e = np.exp(1j * theta3[anchor])
    lhs = e[:, :, None] * e[None, :, :] * e.T[:, None, :]
    return max_abs(lhs - np.exp(1j * theta3))


def angle2_from_angle3(
    theta3: np.ndarray, anchor: int = 0, tol: float = 1e-9
) -> np.ndarray:
    """theta_rs = theta_{anchor, r, s}, after checking the cocycle condition."""
    theta3 = _require_theta3(theta3)
    n = theta3.shape[0]
    if not 0 <= anchor < n:
        raise InvalidTensorError(f"Anchor {anchor} outside 0..{n - 1}")
    residual = cocycle_residual(theta3, anchor)
    if residual > tol:
        raise NotAnAngleTensorError(
            f"Consistency condition failed at anchor {anchor} (residual {residual:.3e})"
        )
    return theta3[anchor].copy()


@dataclass
class GaugeResult:
    equivalent: bool
    phases: np.ndarray
    residual: float


def gauge_equivalent(
    theta2a: np.ndarray, theta2b: np.ndarray, tol: float = 1e-9, anchor: int = 0
) -> GaugeResult:
    """Test theta_b = theta_a - phi_r + phi_s with phi read off the anchor row."""
    da = require_antisymmetric(theta2a)
    db = require_antisymmetric(theta2b)
    if da != db:
        return GaugeResult(equivalent=False, phases=np.zeros(0), residual=np.inf)
    theta2a = np.asarray(theta2a, dtype=float)
    theta2b = np.asarray(theta2b, dtype=float)
    phases = theta2b[anchor] - theta2a[anchor]
    predicted = theta2a - phases[:, None] + phases[None, :]
    residual = max_abs(np.exp(1j * theta2b) - np.exp(1j * predicted))
    return GaugeResult(equivalent=residual <= tol, phases=phases, residual=residual)


def reconstruct_from_theta3(
    theta3: np.ndarray, anchor: int = 0, tol: float = 1e-8
) -> SicSet:
    """theta_rst -> theta_rs -> Gram projector -> SicSet."""
    theta2 = angle2_from_angle3(theta3, anchor, tol=tol)
    gp = gram_projector_from_angle2(theta2)
    sic = sic_from_gram_projector(gp, tol)
    logger.info(f"Reconstructed d={gp.d} vector set from anchor {anchor}")
    return sic
