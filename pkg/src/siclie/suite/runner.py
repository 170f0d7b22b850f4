"""Verification suite: every check group over one fiducial, run in a thread pool."""

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional

import numpy as np

from ..adjoint import (
    AdjointBundle,
    adjoint_bundle,
    check_spectral,
    hs_identities,
    is_qqt,
    killing_relation_check,
    metric_check,
    pauli_basis,
    planted_basis,
    qqt_canonical_form,
    sic_from_qqt_basis,
    simplicial_basis,
    structure_constants,
    sum_identities,
)
from ..config import Settings, get_settings
from ..errors import NotABasisError, SicError
from ..geometry import geometry_sweep
from ..gramproj import check_ppt, wh_gram_bundle, wigner_h_relation
from ..reconstruct import (
    check_angle2_conditions,
    fidelity_deficit,
    reconstruct_from_theta3,
    recover_unitary,
)
from ..reporting import Check, VerificationReport
from ..sic import (
    Fiducial,
    SicSet,
    fiducial_hash,
    probabilities,
    random_density_matrix,
    random_fiducial,
    sic_from_fiducial,
    state_from_probabilities,
    validate_sic,
)
from ..tensors import (
    GramData,
    TripleTensors,
    check_two_design,
    commutator_expansion_check,
    expansion_check,
    gauge_invariance_check,
    gram,
    jacobi_check,
    pure_state_check,
    triple_from_gram,
    triple_products,
    triple_trace_check,
)
from ..utils import max_abs

logger = logging.getLogger(__name__)

LOOSE_TOL = 1e-8
ROUND_TRIP_TOL = 1e-7
CONVERSE_TRIALS = 20
RANDOM_FIDUCIALS = 10


@dataclass(frozen=True, eq=False)
class SuiteContext:
    """Shared read-only inputs for the check groups."""

    fid: Fiducial
    sic: SicSet
    gram: GramData
    trip: TripleTensors
    bundle: AdjointBundle
    tol: float
    seed: int

    @property
    def d(self) -> int:
        return self.sic.d

    def rng(self, stream: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, stream])

    @property
    def loose(self) -> float:
        return max(self.tol, LOOSE_TOL)


def build_context(fid: Fiducial, tol: float, seed: int) -> SuiteContext:
    sic = sic_from_fiducial(fid)
    g = gram(sic)
    trip = triple_from_gram(g)
    return SuiteContext(
        fid=fid,
        sic=sic,
        gram=g,
        trip=trip,
        bundle=adjoint_bundle(trip),
        tol=tol,
        seed=seed,
    )


def _renamed(report: VerificationReport, old: str, new: str) -> VerificationReport:
    return VerificationReport(
        checks=[
            c.model_copy(update={"name": c.name.replace(old, new, 1)})
            for c in report.checks
        ]
    )


def _sic_group(ctx: SuiteContext) -> VerificationReport:
    report = validate_sic(ctx.sic, ctx.tol)
    rho = random_density_matrix(ctx.d, ctx.rng(1), rank=2)
    rebuilt = state_from_probabilities(probabilities(rho, ctx.sic), ctx.sic)
    report.measure("sic.state_reconstruction", max_abs(rebuilt - rho), ctx.tol)
    return report


def _tensors_group(ctx: SuiteContext) -> VerificationReport:
    report = triple_trace_check(ctx.trip, ctx.tol)
    report.merge(check_two_design(ctx.sic, ctx.tol, ctx.seed))
    report.merge(commutator_expansion_check(ctx.sic, ctx.trip, ctx.tol))
    report.merge(expansion_check(ctx.sic, ctx.rng(2), ctx.tol))
    report.merge(gauge_invariance_check(ctx.sic, ctx.rng(3), ctx.loose))

    pure = probabilities(random_density_matrix(ctx.d, ctx.rng(4)), ctx.sic)
    result = pure_state_check(pure, ctx.trip, ctx.tol)
    report.measure(
        "tensors.pure_state",
        max(result.quadratic_residual, result.cubic_residual),
        ctx.tol,
    )
    return report


def _jacobi_group(ctx: SuiteContext) -> VerificationReport:
    return jacobi_check(ctx.trip, ctx.tol, ctx.seed)


def _reconstruct_group(ctx: SuiteContext) -> VerificationReport:
    n = ctx.sic.n
    reference = np.exp(1j * ctx.trip.theta3)
    report = VerificationReport()

    verdict = check_angle2_conditions(ctx.gram.theta2, ctx.loose)
    d = ctx.d
    conditions = max(
        verdict.projector_residual,
        verdict.cubic_residual / d**4,
        verdict.quartic_residual / d**5,
    )
    report.measure("reconstruct.angle2_conditions", conditions, ctx.loose)

    first = reconstruct_from_theta3(ctx.trip.theta3, anchor=0, tol=ctx.loose)
    last = reconstruct_from_theta3(ctx.trip.theta3, anchor=n - 1, tol=ctx.loose)
    theta_first = np.exp(1j * triple_products(first).theta3)
    theta_last = np.exp(1j * triple_products(last).theta3)
    report.measure(
        "reconstruct.theta3_round_trip", max_abs(theta_first - reference), ROUND_TRIP_TOL
    )
    report.measure(
        "reconstruct.anchor_independence",
        max_abs(theta_first - theta_last),
        ROUND_TRIP_TOL,
    )

    rng = ctx.rng(5)
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    planted = q * (np.diag(r) / np.abs(np.diag(r)))
    target = ctx.sic.transformed(planted)
    unitary = recover_unitary(ctx.sic, target)
    if unitary is None:
        report.measure("reconstruct.unitary_fidelity", math.inf, LOOSE_TOL)
        report.measure("reconstruct.unitary_match", math.inf, LOOSE_TOL)
        return report
    report.measure(
        "reconstruct.unitary_fidelity",
        fidelity_deficit(unitary, ctx.sic, target),
        LOOSE_TOL,
    )
    report.measure(
        "reconstruct.unitary_match",
        1 - abs(np.trace(planted.conj().T @ unitary)) / d,
        LOOSE_TOL,
    )
    return report


def _spectral_group(ctx: SuiteContext) -> VerificationReport:
    d = ctx.d
    report = check_spectral(ctx.bundle, ctx.tol)
    failing = sum(not is_qqt(j, rank_target=d - 1) for j in ctx.bundle.J)
    report.measure("adjoint.J_passes_qqt", failing, 0.0)
    form = qqt_canonical_form(ctx.bundle.J[0])
    S = form.S
    canonical = max(
        max_abs(form.reconstruct() - ctx.bundle.J[0]),
        max_abs(S.T @ S - np.eye(S.shape[0])),
    )
    report.measure("adjoint.qqt_canonical_form", canonical, ctx.loose)
    report.measure("adjoint.qqt_half_rank", abs(form.n - (d - 1)), 0.0)
    report.merge(killing_relation_check(ctx.sic, ctx.bundle.J, ctx.loose))
    return report


def _hs_group(ctx: SuiteContext) -> VerificationReport:
    return hs_identities(ctx.bundle, ctx.tol)


def _sums_group(ctx: SuiteContext) -> VerificationReport:
    return sum_identities(ctx.bundle, ctx.tol)


def _geometry_group(ctx: SuiteContext) -> VerificationReport:
    return geometry_sweep(ctx.bundle, ctx.loose, seed=ctx.seed)


def _simplicial_group(ctx: SuiteContext) -> VerificationReport:
    _, report = simplicial_basis(ctx.sic, ctx.tol, ctx.rng(6))
    return report


def _gramproj_group(ctx: SuiteContext) -> VerificationReport:
    d = ctx.d
    odd = d % 2 == 1
    bundle = wh_gram_bundle(ctx.fid)
    report = check_ppt(bundle, ctx.tol)
    report.measure(
        "gramproj.matches_gram", max_abs(bundle.P - ctx.gram.G / d), ctx.tol
    )
    if odd:
        report.merge(wigner_h_relation(ctx.fid, ctx.tol))
    else:
        report.skip("gramproj.wigner_h", "requires odd d", ctx.tol)

    rng = ctx.rng(7)
    sampled = []
    for _ in range(RANDOM_FIDUCIALS):
        fid = random_fiducial(d, rng)
        one = check_ppt(wh_gram_bundle(fid), ctx.tol)
        if odd:
            one.merge(wigner_h_relation(fid, ctx.tol))
        sampled.append(one)
    random_report = VerificationReport.worst_of(sampled, label="random fiducials")
    report.merge(_renamed(random_report, "gramproj.", "gramproj.random."))
    return report


def _draw_alpha(rng: np.random.Generator, d: int) -> float:
    while True:
        alpha = float(rng.uniform(-1.0, 1.0))
        if abs(alpha + 1.0 / d) > 0.1:
            return alpha


def _negative_control(ctx: SuiteContext) -> np.ndarray:
    d = ctx.d
    if d == 2:
        return pauli_basis()
    rng = ctx.rng(9)
    a = rng.standard_normal((d * d, d, d)) + 1j * rng.standard_normal((d * d, d, d))
    return a + a.conj().transpose(0, 2, 1)


def _converse_group(ctx: SuiteContext) -> VerificationReport:
    d, n = ctx.d, ctx.sic.n
    J = ctx.trip.J
    reference = np.exp(1j * ctx.trip.theta3)
    rng = ctx.rng(8)
    round_trip = alpha_error = sign_error = metric_error = constants_error = 0.0

    for _ in range(CONVERSE_TRIALS):
        signs = rng.choice([-1.0, 1.0], size=n)
        alpha = _draw_alpha(rng, d)
        basis = planted_basis(ctx.sic, signs, alpha)

        C = structure_constants(basis).C
        eps3 = signs[:, None, None] * signs[None, :, None] * signs[None, None, :]
        constants_error = max(constants_error, max_abs(C - eps3 * J))

        metric = metric_check(basis)
        metric_error = max(
            metric_error,
            abs(metric.beta - d / (d + 1)),
            metric.fit_residual,
            metric.identity_residual,
        )

        result = sic_from_qqt_basis(basis)
        if not result.accepted:
            round_trip = math.inf
            continue
        theta = np.exp(1j * triple_products(result.sic).theta3)
        round_trip = max(round_trip, max_abs(theta - reference))
        alpha_error = max(alpha_error, abs(result.alpha - alpha))
        sign_error = max(sign_error, max_abs(result.signs - signs))

    report = VerificationReport()
    detail = f"{CONVERSE_TRIALS} planted bases"
    report.measure("adjoint.converse.round_trip", round_trip, ROUND_TRIP_TOL, detail=detail)
    report.measure("adjoint.converse.alpha", alpha_error, ROUND_TRIP_TOL, detail=detail)
    report.measure("adjoint.converse.signs", sign_error, 0.0, detail=detail)
    report.measure("adjoint.converse.metric", metric_error, LOOSE_TOL, detail=detail)
    report.measure(
        "adjoint.converse.structure_constants", constants_error, LOOSE_TOL, detail=detail
    )

    try:
        rejected = not sic_from_qqt_basis(_negative_control(ctx)).accepted
    except NotABasisError:
        rejected = True
    report.measure(
        "adjoint.converse.negative_control",
        0.0 if rejected else 1.0,
        0.0,
        detail="Pauli basis" if d == 2 else "random Hermitian basis",
    )
    return report


CHECK_GROUPS: Dict[str, Callable[[SuiteContext], VerificationReport]] = {
    "sic": _sic_group,
    "tensors": _tensors_group,
    "jacobi": _jacobi_group,
    "reconstruct": _reconstruct_group,
    "spectral": _spectral_group,
    "hs": _hs_group,
    "sums": _sums_group,
    "geometry": _geometry_group,
    "simplicial": _simplicial_group,
    "gramproj": _gramproj_group,
    "converse": _converse_group,
}


def select_groups(checks: Optional[Iterable[str]]) -> List[str]:
    """Resolve a --checks selection; None or 'all' means every group."""
    if checks is None:
        return list(CHECK_GROUPS)
    names = [c.strip() for c in checks if c.strip()]
    if not names or "all" in names:
        return list(CHECK_GROUPS)
    unknown = [c for c in names if c not in CHECK_GROUPS]
    if unknown:
        raise SicError(
            f"Unknown check groups: {', '.join(unknown)}; "
            f"choose from {', '.join(CHECK_GROUPS)}"
        )
    return [c for c in CHECK_GROUPS if c in names]


def run_suite(
    fid: Fiducial,
    settings: Optional[Settings] = None,
    checks: Optional[Iterable[str]] = None,
    seed: int = 0,
    tol: Optional[float] = None,
) -> VerificationReport:
    """Run the selected check groups and return one report sorted by check name."""
    settings = settings or get_settings()
    tol = tol if tol is not None else settings.tol
    groups = select_groups(checks)
    start = time.perf_counter()

    ctx = build_context(fid, tol, seed)
    logger.info(f"Running {len(groups)} check groups at d={ctx.d}")

    futures = []
    with ThreadPoolExecutor(max_workers=settings.workers) as pool:
        for name in groups:
            futures.append((name, pool.submit(CHECK_GROUPS[name], ctx)))

    report = VerificationReport()
    for name, future in futures:
        try:
            report.merge(future.result())
        except Exception as e:
            logger.error(f"Check group {name} raised: {e}")
            report.add(Check.measure(f"{name}.error", math.inf, 0.0, detail=str(e)))

    report = report.sorted()
    report.metadata.d = ctx.d
    report.metadata.fiducial_hash = fiducial_hash(fid)
    report.metadata.seed = seed
    report.metadata.wall_time = time.perf_counter() - start
    logger.info(f"Suite d={ctx.d}: {report.summary()} in {report.metadata.wall_time:.2f}s")
    return report
