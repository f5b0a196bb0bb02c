"""Command-line front door.

Subcommands:

* ``analyze`` -- one game, full JSON report to stdout;
* ``sweep``   -- grid over two parameters, predicate per point, CSV;
* ``curve``   -- payoffs along one transfer mechanism, CSV;
* ``verify``  -- seeded random games, analytic vs oracle comparison, CSV.

Exit codes: 0 success, 1 validation error, 2 verification disagreement.
"""

from __future__ import annotations

import argparse
import sys

from .analysis import analyze_game, to_json
from .core import GameInstance, GameValidationError
from .mutual import Mechanism, SearchConfig
from .sweep import (
    Predicate,
    SweepSpec,
    run_curve,
    run_sweep,
    run_verify,
    write_csv,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2


def _add_game_args(p: argparse.ArgumentParser, required: bool) -> None:
    for name in ("phi1", "phi2", "x1", "x2"):
        p.add_argument(f"--{name}", type=float, required=required)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--eps", type=float, default=None, help="classification tolerance")
    p.add_argument(
        "--typo-mode",
        choices=["literal", "corrected"],
        default=None,
        help="reading of suspect printed coefficients",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coalitional-lotto",
        description="Alliance transfer analysis for two-front General Lotto games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one game (JSON to stdout)")
    _add_game_args(p, required=True)
    _add_common(p)

    p = sub.add_parser("sweep", help="predicate over a 2-D parameter grid (CSV)")
    _add_game_args(p, required=False)
    _add_common(p)
    p.add_argument(
        "--axis",
        action="append",
        required=True,
        metavar="NAME=LO:HI",
        help="swept parameter and range; give exactly twice",
    )
    p.add_argument("--steps", type=int, default=300, help="grid points per axis")
    p.add_argument(
        "--predicate",
        choices=[pr.value for pr in Predicate],
        required=True,
    )
    p.add_argument("--out", default="-", help="output CSV path ('-' = stdout)")

    p = sub.add_parser("curve", help="payoffs along one mechanism (CSV)")
    _add_game_args(p, required=True)
    _add_common(p)
    p.add_argument("--mechanism", choices=["budget", "contest"], required=True)
    p.add_argument("--steps", type=int, default=500)
    p.add_argument("--out", default="-")

    p = sub.add_parser("verify", help="analytic vs grid-oracle calibration (CSV)")
    _add_common(p)
    p.add_argument("--count", type=int, required=True, help="number of sampled games")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")

    return parser


def _config(args: argparse.Namespace) -> SearchConfig:
    kwargs = {}
    if getattr(args, "eps", None) is not None:
        kwargs["eps"] = args.eps
    if getattr(args, "typo_mode", None) is not None:
        kwargs["typo_mode"] = args.typo_mode
    return SearchConfig(**kwargs)


def _game(args: argparse.Namespace) -> GameInstance:
    return GameInstance(args.phi1, args.phi2, args.x1, args.x2)


def _open_out(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _parse_axis(text: str) -> tuple[str, float, float]:
    try:
        name, rng = text.split("=", 1)
        lo, hi = rng.split(":", 1)
        return name.strip(), float(lo), float(hi)
    except ValueError as exc:
        raise GameValidationError(f"bad --axis {text!r}; expected NAME=LO:HI") from exc


def _cmd_analyze(args) -> int:
    report = analyze_game(_game(args), _config(args))
    print(to_json(report.as_dict()))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if len(args.axis) != 2:
        raise GameValidationError("give --axis exactly twice")
    axes = tuple(_parse_axis(a) for a in args.axis)
    fixed = {}
    for name in ("phi1", "phi2", "x1", "x2"):
        value = getattr(args, name)
        if value is not None:
            fixed[name] = value
    spec = SweepSpec(fixed=fixed, axes=axes, steps=args.steps, predicate=Predicate(args.predicate))
    rows = run_sweep(spec, _config(args))
    stream, close = _open_out(args.out)
    try:
        fixed_desc = " ".join(f"{k}={format(v, '.12g')}" for k, v in sorted(fixed.items()))
        write_csv(
            stream,
            [
                f"predicate={args.predicate} fixed: {fixed_desc}",
                "units: budgets in adversary-budget units, valuations in contest-value units",
            ],
            [axes[0][0], axes[1][0], args.predicate],
            rows,
        )
    finally:
        if close:
            stream.close()
    return EXIT_OK


def _cmd_curve(args) -> int:
    g = _game(args)
    mech = Mechanism(args.mechanism)
    rows = run_curve(g, mech, args.steps, _config(args))
    stream, close = _open_out(args.out)
    try:
        unit = "budget (tau)" if mech is Mechanism.BUDGET else "valuation (nu)"
        write_csv(
            stream,
            [
                f"game: phi1={g.phi1:.12g} phi2={g.phi2:.12g} x1={g.x1:.12g} x2={g.x2:.12g}",
                f"mechanism={mech.value}; transfer units: {unit}; payoffs in valuation units",
            ],
            ["transfer", "u1", "u2", "collective"],
            rows,
        )
    finally:
        if close:
            stream.close()
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.count < 1:
        raise GameValidationError("count must be >= 1")
    rows, ok = run_verify(args.count, args.seed, _config(args))
    stream, close = _open_out(args.out)
    try:
        header = list(rows[0].keys())
        write_csv(
            stream,
            [
                f"count={args.count} seed={args.seed} box=[{0.05},{3.0}]^4",
                "analytic vs grid-oracle: contest existence, best response, collective maxima",
            ],
            header,
            [[row[k] for k in header] for row in rows],
        )
    finally:
        if close:
            stream.close()
    return EXIT_OK if ok else EXIT_DISAGREEMENT


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "curve":
            return _cmd_curve(args)
        if args.command == "verify":
            return _cmd_verify(args)
    except (GameValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
