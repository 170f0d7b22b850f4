"""Command-line entry point: verify, search, theta3 and reconstruct."""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

import numpy as np
from pydantic import ValidationError

from ..config import Settings, get_settings
from ..errors import (
    InternalInconsistencyError,
    NotAnAngleTensorError,
    NotASicError,
    NotReconstructibleError,
    SearchFailedError,
    SicError,
)
from ..reconstruct import reconstruct_from_theta3
from ..sic import (
    SearchOptions,
    fiducial_search,
    max_overlap_residual,
    resolve_fiducial,
    save_fiducial,
    save_sic_set,
    sic_from_fiducial,
)
from ..suite import run_suite
from ..tensors import load_theta3, save_theta3, triple_products
from ..utils import max_abs

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siclie", description="SIC-POVM Lie-algebraic verification"
    )
    parser.add_argument("--log-level", type=str, default=None, help="logging level")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the verification suite")
    verify.add_argument("--dim", type=int, required=True, help="Hilbert space dimension")
    verify.add_argument("--fiducial", type=Path, default=None, help="fiducial file")
    verify.add_argument("--tol", type=float, default=None, help="check tolerance")
    verify.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    verify.add_argument(
        "--restarts", type=int, default=20, help="restarts if a fiducial must be searched"
    )
    verify.add_argument("--out", type=Path, default=None, help="JSON report path")
    verify.add_argument(
        "--checks", type=str, default="all", help="comma-separated check groups or all"
    )

    search = sub.add_parser("search", help="search for a SIC fiducial")
    search.add_argument("--dim", type=int, required=True, help="Hilbert space dimension")
    search.add_argument("--seed", type=int, default=42, help="search seed")
    search.add_argument("--restarts", type=int, default=20, help="random restarts")
    search.add_argument("--tol", type=float, default=None, help="overlap target")
    search.add_argument("--out", type=Path, required=True, help="fiducial output path")

    theta3 = sub.add_parser("theta3", help="dump the order-3 angle tensor of a SIC")
    theta3.add_argument("--dim", type=int, required=True, help="Hilbert space dimension")
    theta3.add_argument("--fiducial", type=Path, default=None, help="fiducial file")
    theta3.add_argument("--out", type=Path, required=True, help="binary dump path")

    recon = sub.add_parser("reconstruct", help="rebuild vectors from a theta3 dump")
    recon.add_argument("--theta3", type=Path, required=True, help="theta3 dump path")
    recon.add_argument(
        "--anchor", type=int, default=1, help="anchor index a, counted from 1"
    )
    recon.add_argument("--tol", type=float, default=1e-8, help="condition tolerance")
    recon.add_argument("--out", type=Path, required=True, help="vector-set output path")
    return parser


def _parse_checks(raw: str) -> List[str]:
    return [c.strip() for c in raw.split(",") if c.strip()]


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    opts = SearchOptions(restarts=args.restarts, workers=settings.workers)
    fid = resolve_fiducial(args.dim, args.fiducial, settings, opts)
    report = run_suite(
        fid, settings, checks=_parse_checks(args.checks), seed=args.seed, tol=args.tol
    )
    if args.out is not None:
        args.out.write_text(report.to_json())
        logger.info(f"Report written to {args.out}")

    print(f"d={args.dim}: {report.summary()}")
    for check in report.failures():
        print(f"FAILED {check.name}: error {check.max_error:.3e} > {check.tolerance:.1e}")
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_search(args: argparse.Namespace, settings: Settings) -> int:
    fields = {"restarts": args.restarts, "workers": settings.workers}
    if args.tol is not None:
        fields["target"] = args.tol
    try:
        fid = fiducial_search(args.dim, seed=args.seed, opts=SearchOptions(**fields))
    except SearchFailedError as e:
        print(f"Search failed: best residual {e.best_residual:.3e}")
        return EXIT_FAILURE
    save_fiducial(fid, args.out)
    print(f"residual {max_overlap_residual(fid.components):.3e} -> {args.out}")
    return EXIT_OK


def cmd_theta3(args: argparse.Namespace, settings: Settings) -> int:
    fid = resolve_fiducial(args.dim, args.fiducial, settings)
    trip = triple_products(sic_from_fiducial(fid))
    save_theta3(trip.theta3, args.out)
    print(f"theta3 for d={args.dim} -> {args.out}")
    return EXIT_OK


def cmd_reconstruct(args: argparse.Namespace, settings: Settings) -> int:
    theta3 = load_theta3(args.theta3)
    try:
        sic = reconstruct_from_theta3(theta3, anchor=args.anchor - 1, tol=args.tol)
    except (NotAnAngleTensorError, NotReconstructibleError) as e:
        print(f"Reconstruction failed: {e}")
        return EXIT_FAILURE
    save_sic_set(sic, args.out)
    rebuilt = triple_products(sic).theta3
    mismatch = max_abs(np.exp(1j * rebuilt) - np.exp(1j * theta3))
    matches = mismatch <= args.tol
    print(f"tensor match: {'yes' if matches else 'no'} (max deviation {mismatch:.3e})")
    return EXIT_OK if matches else EXIT_FAILURE


COMMANDS = {
    "verify": cmd_verify,
    "search": cmd_search,
    "theta3": cmd_theta3,
    "reconstruct": cmd_reconstruct,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"Invalid SIC_* environment settings: {e}", file=sys.stderr)
        return EXIT_USAGE
    level = (args.log_level or settings.log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format="%(asctime)s - %(levelname)s - %(message)s",
    )

    try:
        return COMMANDS[args.command](args, settings)
    except (SearchFailedError, NotASicError, InternalInconsistencyError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except SicError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"Invalid option: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
