import argparse
import json
import logging
import os
import time

import numpy as np

from siclie.config import get_settings
from siclie.sic import resolve_fiducial
from siclie.suite import run_suite

argparser = argparse.ArgumentParser()
argparser.add_argument(
    "--dims", type=int, nargs="+", default=[2, 3, 4, 5, 6, 7], help="dimensions"
)
argparser.add_argument("--store", type=str, required=True, help="store path")
argparser.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
argparser.add_argument(
    "--checks", type=str, default="all", help="comma-separated check groups"
)
argparser.add_argument("--rerun", action="store_true", help="ignore stored results")
argparser.add_argument("--logging", action="store_true", help="logging")


def flush_results(path, results):
    with open(path, "w") as f:
        json.dump(results, f, indent=2)


def run_dimension(d, args, settings):
    fid = resolve_fiducial(d, settings=settings)
    start = time.perf_counter()
    report = run_suite(
        fid, settings, checks=args.checks.split(","), seed=args.seed
    )
    return {
        "passed": report.passed,
        "summary": report.summary(),
        "checks": len(report.checks),
        "failures": [c.name for c in report.failures()],
        "time": time.perf_counter() - start,
        "fiducial_hash": report.metadata.fiducial_hash,
    }


def main():
    args = argparser.parse_args()
    logging.basicConfig(
        level=logging.INFO if args.logging else logging.WARNING,
        format="%(asctime)s - %(levelname)s - %(message)s",
    )
    settings = get_settings()

    all_results = {}
    if os.path.exists(args.store) and not args.rerun:
        with open(args.store, "r") as f:
            all_results = json.load(f)

    for d in args.dims:
        if str(d) not in all_results:
            all_results[str(d)] = run_dimension(d, args, settings)
            flush_results(args.store, all_results)
        result = all_results[str(d)]
        print(f"d={d}: {result['summary']} in {result['time']:.2f}s")
        for name in result["failures"]:
            print(f"  FAILED {name}")

    times = [all_results[str(d)]["time"] for d in args.dims]
    print(f"Time per dimension: {np.average(times):.2f} +/- {np.std(times):.2f}s")
    print(f"All passed: {all(all_results[str(d)]['passed'] for d in args.dims)}")


if __name__ == "__main__":
    main()
