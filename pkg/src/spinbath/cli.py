"""Command-line interface.

Subcommands:
  sweep         run a Monte Carlo sweep and write CSV (+ optional figures)
  oracle-check  compare the analytic pipeline against brute-force evolution
  fit           Gaussian-envelope fit on a sweep CSV column

Exit codes: 0 success, 2 invalid configuration, 3 internal-consistency
failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import InternalConsistencyError, ResourceLimitError
from .harness import (
    Distribution,
    SweepConfig,
    fit_gaussian_envelope,
    oracle_max_deviation,
    read_sweep_csv,
    run_sweep,
    write_sweep_csv,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CONSISTENCY = 3


def _add_sweep_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, help="JSON config file; flags override it")
    p.add_argument("--scenario", choices=("two-bath", "common", "one-coupled"))
    p.add_argument("--bell", type=int, choices=(1, 2, 3, 4), dest="bell_index")
    p.add_argument("--n-spins", type=int, dest="n_spins")
    p.add_argument(
        "--omega-dist",
        dest="omega_dist",
        help="uniform:lo:hi | gaussian:mean:sd | constant:v",
    )
    p.add_argument(
        "--omega2-dist",
        dest="omega2_dist",
        help="second-coupling distribution, or 'match' to copy the first",
    )
    p.add_argument("--t-max", type=float, dest="t_max")
    p.add_argument("--steps", type=int)
    p.add_argument("--trials", type=int, dest="n_trials")
    p.add_argument("--seed", type=int)


def _build_config(args: argparse.Namespace) -> SweepConfig:
    base: dict = {}
    if args.config is not None:
        base = json.loads(Path(args.config).read_text())
    for key in (
        "scenario",
        "bell_index",
        "n_spins",
        "omega_dist",
        "omega2_dist",
        "t_max",
        "steps",
        "n_trials",
        "seed",
    ):
        val = getattr(args, key, None)
        if val is not None:
            base[key] = val
    return SweepConfig.from_dict(base)


def cmd_sweep(args: argparse.Namespace) -> int:
    config = _build_config(args)
    result = run_sweep(config)
    out = Path(args.out)
    meta = write_sweep_csv(result, out)
    made = [out, meta]
    if args.plot:
        from .report import render_sweep_figures

        made += render_sweep_figures(result, out)
    for path in made:
        print(path)
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    if args.n_spins is None:
        args.n_spins = 3
    if args.scenario is None:
        args.scenario = "two-bath"
    if args.scenario == "common" and args.omega2_dist is None:
        args.omega2_dist = "uniform:0:1"
    if args.steps is None:
        args.steps = 10
    if args.t_max is None:
        args.t_max = 0.5
    config = _build_config(args)
    dev = oracle_max_deviation(config)
    print(f"max entrywise deviation: {dev:.3e}")
    if dev > args.tol:
        print(f"FAIL: deviation exceeds tolerance {args.tol:g}", file=sys.stderr)
        return EXIT_CONSISTENCY
    return EXIT_OK


def cmd_fit(args: argparse.Namespace) -> int:
    columns, rows = read_sweep_csv(args.input)
    if args.column not in columns:
        raise ValueError(f"column {args.column!r} not in {args.input}")
    sel = [r for r in rows if r["trial"] == args.trial]
    if not sel:
        raise ValueError(f"no rows for trial {args.trial!r}")
    times = [r["time"] for r in sel]
    moduli = [r[args.column] for r in sel]
    a_hat, resid = fit_gaussian_envelope(times, moduli)
    print(f"a_hat: {a_hat:.17g}")
    print(f"max_residual: {resid:.17g}")
    if args.plot:
        from .report import render_fit_figure

        out = Path(args.input).with_suffix("") .as_posix() + f"_fit_{args.column}.png"
        print(render_fit_figure(times, moduli, a_hat, out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinbath",
        description="Dephasing of an entangled spin pair in spin-1/2 baths",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="run a Monte Carlo sweep, write CSV")
    _add_sweep_flags(p_sweep)
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.add_argument("--plot", action="store_true", help="also render PNG figures")
    p_sweep.set_defaults(func=cmd_sweep)

    p_oracle = sub.add_parser(
        "oracle-check", help="analytic vs brute-force comparison at small N"
    )
    _add_sweep_flags(p_oracle)
    p_oracle.add_argument("--tol", type=float, default=1e-12)
    p_oracle.set_defaults(func=cmd_oracle_check)

    p_fit = sub.add_parser("fit", help="Gaussian-envelope fit on a sweep CSV")
    p_fit.add_argument("--in", dest="input", required=True, help="sweep CSV path")
    p_fit.add_argument("--column", default="abs_r1")
    p_fit.add_argument("--trial", type=int, default=0)
    p_fit.add_argument("--plot", action="store_true")
    p_fit.set_defaults(func=cmd_fit)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
