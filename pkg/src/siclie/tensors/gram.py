"""Gram data, angle tensors and triple products."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np

from ..errors import InvalidFileError, NotASicError
from ..reporting import VerificationReport
from ..sic import SicSet, sic_targets
from ..utils import max_abs, wrap_angle

logger = logging.getLogger(__name__)

THETA3_MAGIC = b"SICT3\x00\x00\x01"


@dataclass(frozen=True, eq=False)
class GramData:
    """G_rs = K_rs exp(i theta_rs)."""

    d: int
    G: np.ndarray
    K: np.ndarray
    theta2: np.ndarray


@dataclass(frozen=True, eq=False)
class TripleTensors:
    """T_rst = G_rs G_st G_tr with the derived J, R and theta_rst."""

    d: int
    T: np.ndarray
    J: np.ndarray
    R: np.ndarray
    theta3: np.ndarray

    @property
    def n(self) -> int:
        return self.d * self.d


def k_matrix(d: int) -> np.ndarray:
    """K_rs = sqrt((d delta_rs + 1)/(d + 1))."""
    return np.sqrt(sic_targets(d))


def gram(sic: SicSet, tol: float = 1e-8) -> GramData:
    d = sic.d
    G = sic.overlaps
    K = k_matrix(d)
    deviation = max_abs(np.abs(G) - K)
    if deviation > tol:
        raise NotASicError(f"|G_rs| deviates from K_rs by {deviation:.3e}")
    theta2 = wrap_angle(np.angle(G))
    np.fill_diagonal(theta2, 0.0)
    return GramData(d=d, G=G, K=K, theta2=theta2)


def triple_from_gram(g: GramData) -> TripleTensors:
    d = g.d
    T = np.einsum("rs,st,tr->rst", g.G, g.G, g.G)
    scale = (d + 1) / d
    J = 1j * (2 * scale) * T.imag
    R = (2 * scale) * T.real
    th = g.theta2
    theta3 = wrap_angle(th[:, :, None] + th[None, :, :] + th.T[:, None, :])
    return TripleTensors(d=d, T=T, J=J, R=R, theta3=theta3)


def triple_products(sic: SicSet, tol: float = 1e-8) -> TripleTensors:
    return triple_from_gram(gram(sic, tol))


def triple_trace_check(trip: TripleTensors, tol: float = 1e-9) -> VerificationReport:
    """Trace conditions on T and the closed forms of J and R through theta_rst."""
    d, T = trip.d, trip.T
    K = k_matrix(d)
    report = VerificationReport()

    total = d**4
    report.measure("tensors.triple_sum", abs(T.sum() - total) / total, tol)
    report.measure("tensors.triple_row_sum", max_abs(T.sum(axis=2) - d * K**2), tol)
    tt = np.einsum("sab,ba->", T, T.sum(axis=0))
    expected_tt = 2 * d**5 / (d + 1)
    report.measure("tensors.trace_TrTs", abs(tt - expected_tt) / expected_tt, tol)
    report.measure("tensors.triple_diagonal", max_abs(np.einsum("rrr->r", T) - 1), tol)

    sym = max(
        max_abs(T - T.transpose(2, 0, 1)),
        max_abs(T - T.transpose(1, 2, 0)),
        max_abs(T - T.transpose(0, 2, 1).conj()),
    )
    report.measure("tensors.triple_symmetry", sym, tol)

    kkk = K[:, :, None] * K[None, :, :] * K.T[:, None, :]
    scale = 2 * (d + 1) / d
    j_form = 1j * scale * kkk * np.sin(trip.theta3)
    r_form = scale * kkk * np.cos(trip.theta3)
    report.measure("tensors.J_closed_form", max_abs(trip.J - j_form), tol)
    report.measure("tensors.R_closed_form", max_abs(trip.R - r_form), tol)
    logger.debug(f"triple_trace_check d={d}: {report.summary()}")
    return report


def save_theta3(theta3: np.ndarray, path: Union[str, Path]) -> Path:
    """Header: 8-byte magic, uint32 d; payload: d^6 float64, all little-endian."""
    theta3 = np.asarray(theta3, dtype="<f8")
    n = theta3.shape[0]
    d = int(round(np.sqrt(n)))
    path = Path(path)
    header = THETA3_MAGIC + np.array([d], dtype="<u4").tobytes()
    path.write_bytes(header + np.ascontiguousarray(theta3).tobytes())
    return path


def load_theta3(path: Union[str, Path]) -> np.ndarray:
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise InvalidFileError(f"Cannot read {path}: {e}") from e
    head = len(THETA3_MAGIC) + 4
    if len(raw) < head or raw[: len(THETA3_MAGIC)] != THETA3_MAGIC:
        raise InvalidFileError(f"{path}: not a theta3 dump")
    d = int(np.frombuffer(raw[len(THETA3_MAGIC) : head], dtype="<u4")[0])
    n = d * d
    if d < 2 or len(raw) - head != 8 * n**3:
        raise InvalidFileError(f"{path}: payload size does not match d={d}")
    return np.frombuffer(raw[head:], dtype="<f8").reshape(n, n, n).copy()
