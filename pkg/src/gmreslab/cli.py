"""Command-line harness.

Four subcommands::

    lab run <config.json> [flags]     full experiment from a config file
    lab bounds --matrix A.mtx --depths 1..5
                                      experiment assembled from flags only
    lab fov --matrix A.mtx --samples 720
                                      boundary scan of the field of values
    lab ideal --matrix A.mtx -k 3     one ideal-GMRES minimization

Flags override config fields.  Exit codes follow the experiment runner:
0 all checks passed, 1 an inequality failed beyond slack, 2 I/O or parse
trouble, 3 non-certified result under --strict.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import experiment, fov, mmio
from .errors import (
    FileError,
    InvalidSpec,
    ParseError,
    SingularMatrix,
    UnsupportedFormat,
)
from .experiment import EXIT_IO, EXIT_NOT_CERTIFIED, EXIT_OK
from .minimax import SolverOptions, ideal_gmres
from .reporting import format_real

__all__ = ["main", "parse_depths"]


def parse_depths(text: str) -> List[int]:
    """Parse ``"3"``, ``"1,2,4"``, or ``"1..5"`` (ranges are inclusive)."""
    depths = []
    for token in text.split(","):
        token = token.strip()
        try:
            if ".." in token:
                lo_text, hi_text = token.split("..", 1)
                lo, hi = int(lo_text), int(hi_text)
                if hi < lo:
                    raise InvalidSpec(f"empty depth range {token!r}")
                depths.extend(range(lo, hi + 1))
            else:
                depths.append(int(token))
        except ValueError:
            raise InvalidSpec(f"cannot parse depth token {token!r}") from None
    if not depths:
        raise InvalidSpec("no depths given")
    return sorted(set(depths))


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--trials", type=int, default=None, help="r0 samples per depth")
    sub.add_argument("--seed", type=int, default=None, help="master RNG seed")
    sub.add_argument("--out-dir", default=None, help="output directory")
    sub.add_argument(
        "--strict",
        action="store_true",
        default=None,
        help="exit 3 when a minimization is not certified",
    )
    sub.add_argument("--threads", type=int, default=None, help="worker threads")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lab",
        description="GMRES bound verification laboratory",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    run = subs.add_parser("run", help="run an experiment from a JSON config")
    run.add_argument("config", help="path to the config JSON file")
    run.add_argument("--matrix", default=None, help="Matrix Market file override")
    run.add_argument("--depths", default=None, help='e.g. "1..5" or "1,2,3"')
    _add_common_flags(run)
    run.set_defaults(func=_cmd_run)

    bounds_cmd = subs.add_parser("bounds", help="run the bound checks on one matrix")
    bounds_cmd.add_argument("--matrix", required=True, help="Matrix Market file")
    bounds_cmd.add_argument("--depths", default="1..3", help='e.g. "1..5"')
    _add_common_flags(bounds_cmd)
    bounds_cmd.set_defaults(func=_cmd_bounds)

    fov_cmd = subs.add_parser("fov", help="scan the field-of-values boundary")
    fov_cmd.add_argument("--matrix", required=True, help="Matrix Market file")
    fov_cmd.add_argument("--samples", type=int, default=720, help="scan angles")
    fov_cmd.add_argument("--out", default=None, help="CSV path (default: stdout)")
    fov_cmd.set_defaults(func=_cmd_fov)

    ideal_cmd = subs.add_parser("ideal", help="one ideal-GMRES minimization")
    ideal_cmd.add_argument("--matrix", required=True, help="Matrix Market file")
    ideal_cmd.add_argument("-k", "--depth", type=int, required=True, dest="k")
    ideal_cmd.add_argument("--seed", type=int, default=0)
    ideal_cmd.add_argument("--strict", action="store_true")
    ideal_cmd.set_defaults(func=_cmd_ideal)

    return parser


def _overrides_from(args: argparse.Namespace) -> dict:
    overrides = {
        "trials": args.trials,
        "seed": args.seed,
        "out_dir": args.out_dir,
        "strict": args.strict,
        "threads": args.threads,
    }
    if getattr(args, "matrix", None):
        overrides["matrix"] = {"family": "file", "path": args.matrix}
    if getattr(args, "depths", None):
        overrides["depths"] = parse_depths(args.depths)
    return overrides


def _summarize(cfg: experiment.ExperimentConfig, code: int) -> None:
    where = cfg.out_dir
    print(f"wrote report.json, curves.csv{', plot.svg' if cfg.plot else ''} to {where}")
    if code == EXIT_OK:
        print("all checks passed")
    elif code == experiment.EXIT_BOUND_FAILED:
        print("FAILED: an inequality exceeded its slack (see report.json)")
    elif code == EXIT_NOT_CERTIFIED:
        print("non-certified minimization under --strict (see report.json)")


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = experiment.load_config(args.config, overrides=_overrides_from(args))
    code = experiment.run_experiment(cfg)
    if code != EXIT_IO:
        _summarize(cfg, code)
    return code


def _cmd_bounds(args: argparse.Namespace) -> int:
    raw = {
        "matrix": {"family": "file", "path": args.matrix},
        "depths": parse_depths(args.depths),
        "out_dir": args.out_dir or "out",
    }
    if args.trials is not None:
        raw["trials"] = args.trials
    if args.seed is not None:
        raw["seed"] = args.seed
    if args.strict is not None:
        raw["strict"] = args.strict
    if args.threads is not None:
        raw["threads"] = args.threads
    cfg = experiment.ExperimentConfig.from_dict(raw)
    code = experiment.run_experiment(cfg)
    if code != EXIT_IO:
        _summarize(cfg, code)
    return code


def _cmd_fov(args: argparse.Namespace) -> int:
    if args.samples < 8:
        raise InvalidSpec(f"need at least 8 samples, got {args.samples}")
    a = mmio.read_matrix_market(args.matrix)
    boundary = fov.fov_boundary(a, args.samples)
    lines = ["theta,point_re,point_im,support_min,support_max"]
    for i in range(len(boundary.angles)):
        lines.append(
            ",".join(
                [
                    format_real(boundary.angles[i]),
                    format_real(boundary.points[i].real),
                    format_real(boundary.points[i].imag),
                    format_real(boundary.support_min[i]),
                    format_real(boundary.support_max[i]),
                ]
            )
        )
    text = "\n".join(lines) + "\n"

    nu_a = fov.nu_fov(a).value
    try:
        nu_inv_text = format_real(fov.nu_fov_inverse(a))
    except SingularMatrix:
        nu_inv_text = "n/a (singular matrix)"
    summary = (
        f"nu(F(A)) = {format_real(nu_a)}\n"
        f"nu(F(inv(A))) = {nu_inv_text}\n"
    )
    if args.out is None:
        sys.stdout.write(text)
        sys.stderr.write(summary)
    else:
        try:
            with open(args.out, "w") as handle:
                handle.write(text)
        except OSError as exc:
            raise FileError(f"cannot write {args.out}: {exc}") from exc
        sys.stdout.write(summary)
        print(f"wrote {len(boundary.angles)} boundary samples to {args.out}")
    return EXIT_OK


def _cmd_ideal(args: argparse.Namespace) -> int:
    a = mmio.read_matrix_market(args.matrix)
    if not 1 <= args.k <= a.shape[0]:
        raise InvalidSpec(f"depth {args.k} outside [1, {a.shape[0]}]")
    result = ideal_gmres(a, args.k, SolverOptions(seed=args.seed))
    print(f"ideal(k={args.k}) = {format_real(result.value)}")
    print(f"certified lower bound = {format_real(result.lower_bound)}")
    print(f"gap = {format_real(result.upper_bound - result.lower_bound)}")
    print(f"certified = {'yes' if result.certified else 'no'}")
    print("residual polynomial 1 + c1*z + ... coefficients:")
    for j, c in enumerate(result.coefficients, start=1):
        print(f"  c{j} = {format_real(c.real)} + {format_real(c.imag)}j")
    if args.strict and not result.certified:
        return EXIT_NOT_CERTIFIED
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnsupportedFormat, FileError, InvalidSpec, SingularMatrix) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
