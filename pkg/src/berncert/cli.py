"""Command-line front end for the subdivision-count experiments.

Three subcommands, each writing one CSV (stdout by default, or --out):

    berncert quad-roots        # ts,nsubs,gsubs over a uniform root grid
    berncert quad-histogram    # N,pct_nb,pct_gb cumulative percentages
    berncert matrix-experiment # per-dimension count statistics

Exit codes: 0 success, 2 argument error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .experiments import (
    ExperimentConfig,
    run_matrix_experiment,
    run_quad_histogram,
    run_quad_roots,
    write_csv,
)
from .subdivide import Criterion

_CRITERIA = {
    "nb": (Criterion.NB,),
    "gb": (Criterion.GB,),
    "both": (Criterion.NB, Criterion.GB),
}


def _parse_dims(text: str) -> list[int]:
    """Accept '2..10' ranges (inclusive) or comma lists like '2,4,8'."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        dims = list(range(int(lo), int(hi) + 1))
    else:
        dims = [int(part) for part in text.split(",") if part]
    if not dims or any(d < 1 for d in dims):
        raise argparse.ArgumentTypeError(f"bad dimension list: {text!r}")
    return dims


def _add_common(sub: argparse.ArgumentParser, matrix: bool) -> None:
    sub.add_argument("--delta", type=float, default=1e-4, help="lower-bound slack")
    sub.add_argument("--seed", type=int, default=0, help="experiment seed")
    sub.add_argument(
        "--criterion", choices=sorted(_CRITERIA), default="both",
        help="which acceptance tests to run",
    )
    sub.add_argument(
        "--max-depth", type=int, default=32 if matrix else 6,
        help="subdivision depth limit",
    )
    sub.add_argument("--out", default=None, help="output CSV path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="berncert", description="subdivision-count experiments"
    )
    subs = parser.add_subparsers(dest="command", required=True)

    for name in ("quad-roots", "quad-histogram"):
        sub = subs.add_parser(name, help=f"{name} CSV over a root-location grid")
        sub.add_argument(
            "--grid", type=int, default=4001, help="number of t samples on [0,1]"
        )
        _add_common(sub, matrix=False)

    sub = subs.add_parser("matrix-experiment", help="random matrix polynomial counts")
    sub.add_argument(
        "--dims", type=_parse_dims, default=list(range(2, 11)),
        help="matrix dimensions, e.g. 2..10 or 2,4,8",
    )
    sub.add_argument("--trials", type=int, default=100, help="instances per dimension")
    _add_common(sub, matrix=True)
    return parser


def _config_from(args: argparse.Namespace) -> ExperimentConfig:
    cfg = ExperimentConfig(
        delta=args.delta,
        seed=args.seed,
        criteria=_CRITERIA[args.criterion],
        out=args.out,
    )
    if args.command == "matrix-experiment":
        cfg.dims = args.dims
        cfg.trials = args.trials
        cfg.max_depth_matrix = args.max_depth
    else:
        cfg.grid = args.grid
        cfg.max_depth = args.max_depth
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from(args)
    except ValueError as exc:
        parser.error(str(exc))  # exits with code 2
    runner = {
        "quad-roots": run_quad_roots,
        "quad-histogram": run_quad_histogram,
        "matrix-experiment": run_matrix_experiment,
    }[args.command]
    try:
        header, rows = runner(cfg)
    except ValueError as exc:
        parser.error(str(exc))  # exits with code 2
    try:
        if cfg.out is None or cfg.out == "-":
            write_csv(sys.stdout, header, rows)
        else:
            with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
                write_csv(fh, header, rows)
    except OSError as exc:
        print(f"berncert: cannot write output: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
