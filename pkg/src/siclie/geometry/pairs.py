"""Pairwise geometry of the Q_r, Q_r^T and Rbar_r subspaces, and the f-sum identities."""

import logging
from typing import Iterable, List, Optional, Tuple

import numpy as np

from ..adjoint import AdjointBundle
from ..reporting import VerificationReport
from ..utils import idempotence_error, max_abs, numerical_rank
from .subspaces import inclination, intersection_dimension
from .vectors import GeomVectors, check_geom_vectors, geom_vectors

logger = logging.getLogger(__name__)

DEGENERATE = "skipped (degenerate dimension)"
EXHAUSTIVE_MAX_D = 4
SAMPLED_PAIRS = 200


def pair_sample(d: int, seed: Optional[int] = 0) -> List[Tuple[int, int]]:
    """Every ordered pair r != s for d <= 4, otherwise a seeded sample of 200."""
    n = d * d
    if d <= EXHAUSTIVE_MAX_D:
        return [(r, s) for r in range(n) for s in range(n) if r != s]
    rng = np.random.default_rng(seed)
    pairs = []
    while len(pairs) < SAMPLED_PAIRS:
        r, s = (int(x) for x in rng.integers(0, n, size=2))
        if r != s:
            pairs.append((r, s))
    return pairs


def _line(v: np.ndarray) -> np.ndarray:
    return np.outer(v, v.conj())


def _inclined_at(p: np.ndarray, pp: np.ndarray, cos_expected: float) -> float:
    residual, cos_theta = inclination(p, pp)
    return max(residual, abs(cos_theta - cos_expected))


def verify_q_geometry(
    bundle: AdjointBundle,
    r: int,
    s: int,
    tol: float = 1e-8,
    gv: Optional[GeomVectors] = None,
) -> VerificationReport:
    """Decompositions Q_r = f_rs f_rs^dag + Q_rs and their relations to the s pieces."""
    gv = gv if gv is not None else geom_vectors(bundle)
    d = bundle.d
    f_rs, f_sr = gv.f[r, s], gv.f[s, r]
    fs_rs, fs_sr = gv.fstar[r, s], gv.fstar[s, r]
    Q_r, Q_s = bundle.Q[r], bundle.Q[s]
    Qt_r, Qt_s = bundle.QT[r], bundle.QT[s]
    Q_rs, Q_sr = Q_r - _line(f_rs), Q_s - _line(f_sr)
    Qb_rs, Qb_sr = Qt_r - _line(fs_rs), Qt_s - _line(fs_sr)
    report = VerificationReport()

    in_range = max(max_abs(Q_r @ f_rs - f_rs), max_abs(Qt_r @ fs_rs - fs_rs))
    report.measure("geometry.q.line_in_range", in_range, tol)
    report.measure(
        "geometry.q.decomposition_idempotent",
        max(idempotence_error(Q_rs), idempotence_error(Qb_rs)),
        tol,
    )
    report.measure(
        "geometry.q.line_cosine", abs(abs(np.vdot(f_rs, f_sr)) - 1 / (d + 1)), tol
    )
    report.measure(
        "geometry.qbar.line_cosine", abs(abs(np.vdot(fs_rs, fs_sr)) - 1 / (d + 1)), tol
    )
    report.measure(
        "geometry.q_qbar.line_cosine", abs(abs(np.vdot(f_rs, fs_sr)) - d / (d + 1)), tol
    )
    report.measure(
        "geometry.q.Q_maps_f", max_abs(Q_s @ f_rs + f_sr / (d + 1)), tol
    )
    report.measure(
        "geometry.q.QT_maps_f", max_abs(Qt_s @ f_rs + d / (d + 1) * fs_sr), tol
    )
    sandwich = Q_r @ Q_s @ Q_r - (Q_r / (d + 1) - d / (d + 1) ** 2 * _line(f_rs))
    report.measure("geometry.q.sandwich", max_abs(sandwich), tol)

    names = (
        "geometry.q.orthogonality",
        "geometry.q.inclination",
        "geometry.qbar.orthogonality",
        "geometry.qbar.inclination",
        "geometry.q_qbar.orthogonality",
        "geometry.q.rank",
    )
    if d == 2:
        for name in names:
            report.skip(name, DEGENERATE, tol)
        return report

    cos_expected = 1 / np.sqrt(d + 1)
    report.measure(
        "geometry.q.orthogonality",
        max(max_abs(Q_sr @ f_rs), max_abs(Q_rs @ f_sr)),
        tol,
    )
    report.measure("geometry.q.inclination", _inclined_at(Q_rs, Q_sr, cos_expected), tol)
    report.measure(
        "geometry.qbar.orthogonality",
        max(max_abs(Qb_sr @ fs_rs), max_abs(Qb_rs @ fs_sr)),
        tol,
    )
    report.measure(
        "geometry.qbar.inclination", _inclined_at(Qb_rs, Qb_sr, cos_expected), tol
    )
    report.measure(
        "geometry.q_qbar.orthogonality",
        max(max_abs(Qb_sr @ f_rs), max_abs(Q_rs @ fs_sr), max_abs(Q_rs @ Qb_sr)),
        tol,
    )
    report.measure(
        "geometry.q.rank", abs(numerical_rank(Q_rs) - (d - 2)), 0.0
    )
    return report


def verify_r_geometry(
    bundle: AdjointBundle,
    r: int,
    s: int,
    tol: float = 1e-8,
    gv: Optional[GeomVectors] = None,
) -> VerificationReport:
    """Rbar_r = g g^T + gbar gbar^T + R_rs, and how these pieces sit against the s ones."""
    gv = gv if gv is not None else geom_vectors(bundle)
    d = bundle.d
    g_rs, g_sr = gv.g[r, s], gv.g[s, r]
    b_rs, b_sr = gv.gbar[r, s], gv.gbar[s, r]
    Rb_r, Rb_s = bundle.Rbar[r].real, bundle.Rbar[s].real
    R_rs = Rb_r - np.outer(g_rs, g_rs) - np.outer(b_rs, b_rs)
    R_sr = Rb_s - np.outer(g_sr, g_sr) - np.outer(b_sr, b_sr)
    report = VerificationReport()

    in_range = max(max_abs(Rb_r @ g_rs - g_rs), max_abs(Rb_r @ b_rs - b_rs))
    report.measure("geometry.r.lines_in_range", in_range, tol)
    report.measure("geometry.r.decomposition_idempotent", idempotence_error(R_rs), tol)
    report.measure("geometry.r.shared_line", abs(abs(g_rs @ g_sr) - 1), tol)
    report.measure(
        "geometry.r.gbar_cosine", abs(abs(b_rs @ b_sr) - (d - 1) / (d + 1)), tol
    )
    report.measure(
        "geometry.r.intersection_dim",
        abs(intersection_dimension(Rb_r, Rb_s) - 1),
        0.0,
    )

    names = ("geometry.r.orthogonality", "geometry.r.inclination", "geometry.r.rank")
    if d == 2:
        for name in names:
            report.skip(name, DEGENERATE, tol)
        return report

    report.measure(
        "geometry.r.orthogonality",
        max(max_abs(R_rs @ b_sr), max_abs(R_sr @ b_rs)),
        tol,
    )
    report.measure(
        "geometry.r.inclination", _inclined_at(R_rs, R_sr, 1 / np.sqrt(d + 1)), tol
    )
    report.measure("geometry.r.rank", abs(numerical_rank(R_rs) - (2 * d - 4)), 0.0)
    return report


def _outer_sums(vectors: np.ndarray, first_index: bool) -> np.ndarray:
    """sum_s v_rs v_rs^dag (first_index) or sum_s v_sr v_sr^dag, for every r."""
    spec = "rsi,rsj->rij" if first_index else "sri,srj->rij"
    return np.einsum(spec, vectors, vectors.conj())


def f_sum_identities(
    bundle: AdjointBundle, tol: float = 1e-8, gv: Optional[GeomVectors] = None
) -> VerificationReport:
    """Sums over s != r of outer products of the pair vectors."""
    gv = gv if gv is not None else geom_vectors(bundle)
    d, n = bundle.d, bundle.n
    Q, QT, Rbar = bundle.Q, bundle.QT, bundle.Rbar.real
    ee = np.einsum("ri,rj->rij", gv.ebar, gv.ebar)
    complement = np.eye(n) - np.outer(bundle.v0, bundle.v0)
    report = VerificationReport()

    def measure(name: str, lhs: np.ndarray, rhs: np.ndarray) -> None:
        report.measure(f"geometry.fsum.{name}", max_abs(lhs - rhs), tol)

    measure("f", _outer_sums(gv.f, True) / (d + 1), Q)
    measure("fstar", _outer_sums(gv.fstar, True) / (d + 1), QT)
    measure("g", 2 * _outer_sums(gv.g, True) / (d + 1), Rbar)
    measure("gbar", 2 * _outer_sums(gv.gbar, True) / (d + 1), Rbar)
    measure(
        "f_mixed",
        np.einsum("rsi,rsj->rij", gv.f, gv.fstar.conj()),
        np.zeros_like(Q),
    )

    shared = ee + complement / (d * d - 1)
    measure("f_reversed", _outer_sums(gv.f, False) / (d - 1), QT + shared)
    measure("fstar_reversed", _outer_sums(gv.fstar, False) / (d - 1), Q + shared)
    measure("g_reversed", 2 * _outer_sums(gv.g, False) / (d + 1), Rbar)
    if d <= 3:
        report.skip("geometry.fsum.gbar_reversed", DEGENERATE, tol)
    else:
        rhs = (
            Rbar
            + 4 * (d - 1) / (d - 3) * ee
            + 4 / ((d + 1) * (d - 3)) * complement
        )
        measure("gbar_reversed", 2 * _outer_sums(gv.gbar, False) / (d - 3), rhs)
    return report


def geometry_sweep(
    bundle: AdjointBundle,
    tol: float = 1e-8,
    pairs: Optional[Iterable[Tuple[int, int]]] = None,
    seed: Optional[int] = 0,
) -> VerificationReport:
    """Vector checks, f-sums, and the worst case of the pair identities over pairs."""
    gv = geom_vectors(bundle)
    pairs = list(pairs) if pairs is not None else pair_sample(bundle.d, seed)
    per_pair = []
    for r, s in pairs:
        pair_report = verify_q_geometry(bundle, r, s, tol, gv)
        pair_report.merge(verify_r_geometry(bundle, r, s, tol, gv))
        per_pair.append(pair_report)
    report = VerificationReport.worst_of(per_pair, label="pairs")
    report.merge(check_geom_vectors(gv, bundle, tol))
    report.merge(f_sum_identities(bundle, tol, gv))
    logger.info(f"Geometry over {len(pairs)} pairs at d={bundle.d}: {report.summary()}")
    return report
