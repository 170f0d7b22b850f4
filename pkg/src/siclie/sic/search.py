"""Numerical search for Weyl-Heisenberg SIC fiducials."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field
from scipy.optimize import least_squares, minimize

from ..errors import SearchFailedError
from ..utils import fix_phase_largest
from ..weyl import check_dimension, displacement_stack
from .sicpovm import Fiducial

logger = logging.getLogger(__name__)


class SearchOptions(BaseModel):
    """Budget and target for fiducial_search."""

    restarts: int = Field(default=20, ge=1, description="Random starting points")
    target: float = Field(
        default=1e-9, gt=0, description="Max deviation of any overlap from 1/(d+1)"
    )
    max_iter: int = Field(default=3000, ge=1, description="Quasi-Newton iterations")
    workers: Optional[int] = Field(
        default=None, ge=1, description="Restarts evaluated concurrently"
    )


@dataclass
class RestartResult:
    restart: int
    vector: np.ndarray
    residual: float


class OverlapPenalty:
    """F(psi) = sum_{p != 0} (|<psi|D_p psi>|^2 / |psi|^4 - 1/(d+1))^2."""

    def __init__(self, d: int):
        self.d = d
        self.ops = displacement_stack(d)[1:]
        self.target = 1.0 / (d + 1)

    def _split(self, x: np.ndarray) -> np.ndarray:
        return x[: self.d] + 1j * x[self.d :]

    def terms(self, v: np.ndarray) -> Tuple[np.ndarray, np.ndarray, float]:
        dv = self.ops @ v
        a = dv @ v.conj()
        n = float(np.vdot(v, v).real)
        return a, dv, n

    def residuals(self, v: np.ndarray) -> np.ndarray:
        a, _, n = self.terms(v)
        return np.abs(a) ** 2 / n**2 - self.target

    def _wirtinger(self, v: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        # rows g_p = d s_p / d conj(v)
        a, dv, n = self.terms(v)
        dadj_v = np.einsum("pji,j->pi", self.ops.conj(), v)
        s = np.abs(a) ** 2 / n**2
        g = (
            a.conj()[:, None] * dv + a[:, None] * dadj_v
        ) / n**2 - 2 * (np.abs(a) ** 2 / n**3)[:, None] * v[None, :]
        return s - self.target, g

    def value_and_grad(self, x: np.ndarray) -> Tuple[float, np.ndarray]:
        r, g = self._wirtinger(self._split(x))
        grad_c = 2 * (r[:, None] * g).sum(axis=0)
        return float(r @ r), np.concatenate([2 * grad_c.real, 2 * grad_c.imag])

    def ls_residuals(self, x: np.ndarray) -> np.ndarray:
        v = self._split(x)
        return np.append(self.residuals(v), np.vdot(v, v).real - 1.0)

    def ls_jacobian(self, x: np.ndarray) -> np.ndarray:
        v = self._split(x)
        _, g = self._wirtinger(v)
        rows = np.hstack([2 * g.real, 2 * g.imag])
        norm_row = np.concatenate([2 * v.real, 2 * v.imag])
        return np.vstack([rows, norm_row])


def max_overlap_residual(v: np.ndarray) -> float:
    """max_{p != 0} | |<psi|D_p psi>|^2 - 1/(d+1) | for the normalized v."""
    v = v / np.linalg.norm(v)
    return float(np.max(np.abs(OverlapPenalty(v.shape[0]).residuals(v))))


def _run_restart(
    penalty: OverlapPenalty, seed: int, restart: int, opts: SearchOptions
) -> RestartResult:
    rng = np.random.default_rng([seed, restart])
    d = penalty.d
    x0 = rng.standard_normal(2 * d)
    x0 /= np.linalg.norm(x0)

    coarse = minimize(
        penalty.value_and_grad,
        x0,
        jac=True,
        method="L-BFGS-B",
        options={"maxiter": opts.max_iter, "gtol": 1e-14, "ftol": 1e-20},
    )
    x = coarse.x / np.linalg.norm(coarse.x)
    polished = least_squares(
        penalty.ls_residuals,
        x,
        jac=penalty.ls_jacobian,
        method="trf",
        ftol=1e-15,
        xtol=1e-15,
        gtol=1e-15,
        max_nfev=200,
    )
    v = penalty._split(polished.x)
    v = fix_phase_largest(v / np.linalg.norm(v))
    residual = max_overlap_residual(v)
    logger.debug(f"d={d} restart {restart}: residual {residual:.3e}")
    return RestartResult(restart=restart, vector=v, residual=residual)


def fiducial_search(
    d: int, seed: int = 42, opts: Optional[SearchOptions] = None
) -> Fiducial:
    """Minimize the overlap penalty from seeded random starts.

    Restarts are evaluated in batches on a thread pool. The first restart (by
    index) that reaches opts.target wins, so the result depends only on
    (d, seed, opts).
    """
    check_dimension(d)
    opts = opts or SearchOptions()
    penalty = OverlapPenalty(d)
    batch = opts.workers or 4
    best: Optional[RestartResult] = None

    with ThreadPoolExecutor(max_workers=opts.workers) as pool:
        for start in range(0, opts.restarts, batch):
            indices = range(start, min(start + batch, opts.restarts))
            futures = [
                pool.submit(_run_restart, penalty, seed, i, opts) for i in indices
            ]
            results: List[RestartResult] = [f.result() for f in futures]
            for result in results:
                if best is None or result.residual < best.residual:
                    best = result
            winners = [r for r in results if r.residual <= opts.target]
            if winners:
                winner = winners[0]
                logger.info(
                    f"Fiducial search d={d} seed={seed} converged at restart "
                    f"{winner.restart} (residual {winner.residual:.2e})"
                )
                return Fiducial(winner.vector)

    raise SearchFailedError(
        f"No restart reached target {opts.target:.1e} for d={d}; "
        f"best residual {best.residual:.3e}",
        best_residual=best.residual,
    )
