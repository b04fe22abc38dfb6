"""Command-line front door.

Subcommands expose every operation with machine-readable output and stable
exit codes: 0 when the computation succeeded and every claim checked held,
1 when a check found a counterexample or an unexpected exception set, 2 for
usage, parse, and resource-cap errors.

Rationals cross the boundary as exact "p/q" strings (plain integers and exact
decimals also parse); output is deterministic for fixed arguments.  A JSON
--config file may override caps, the root-bracket width, the evaluation grid,
and the worker count; the OVERPOLY_WORKERS environment variable takes
precedence for workers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .bijections import MAP_NAMES, audit, expected_verdict
from .enumeration import (
    CapExceededError,
    Constraint,
    DEFAULT_CAPS,
    NO_CONSTRAINT,
    enumerate_ops,
    format_parts,
)
from .polynomials import pbar_derivative, pbar_poly, series_expand
from .serial import encode
from .verification import (
    CLAIMS,
    roots_csv,
    roots_table,
    run_claim,
    sandwich,
)

__all__ = ["main", "build_parser"]


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(_rational(chunk) for chunk in text.split(",") if chunk.strip())


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(chunk) for chunk in text.split(",") if chunk.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="overpoly",
        description="Exact arithmetic and verification for overpartition polynomials.",
    )
    parser.add_argument("--config", help="JSON file overriding caps/width/xs/workers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="overpartition polynomial for one n")
    p.add_argument("n", type=int)
    p.add_argument("--eval", dest="point", type=_rational, help="evaluate at a rational point")
    p.add_argument("--derivative", action="store_true", help="use the derivative-identity polynomial")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("series", help="truncated exponential generating series")
    p.add_argument("order", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("enumerate", help="list k-colored overpartitions of n")
    p.add_argument("n", type=int)
    p.add_argument("--colors", type=int, default=1)
    p.add_argument("--forbid", default="", help='non-overlined bans, e.g. "1_1,2_1"')
    p.add_argument("--count", action="store_true", help="print the count only")
    p.add_argument("--cap", type=int, help="enumeration cap for this color count")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("bijection", help="exhaustively audit one of the injections")
    p.add_argument("map", choices=MAP_NAMES)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--colors", type=int, default=1)
    p.add_argument("--cap", type=int, help="enumeration cap for this color count")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="check one claim over its range")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--nmax", type=int)
    p.add_argument("--amax", type=int)
    p.add_argument("--alo", type=int)
    p.add_argument("--ahi", type=int)
    p.add_argument("--xs", type=_rational_list, help='grid, e.g. "1,3/2,2,5/2,3"')
    p.add_argument("--kset", type=_int_list, help='color counts, e.g. "2,3"')
    p.add_argument("--ns", type=_int_list, help='descent inputs, e.g. "3,7,15,31"')
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("roots", help="certified max-root table for the gap polynomials")
    p.add_argument("--amax", type=int, default=10)
    p.add_argument("--bmax", type=int, default=10)
    p.add_argument("--width", type=_rational, help="bracket width (default 1/10000)")
    p.add_argument("--format", choices=("csv", "json", "text"), default="csv")

    p = sub.add_parser("bounds", help="analytic sandwich and truncated-series data")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--nmax", type=int, help="scan 1..nmax instead of a single n")
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _cmd_poly(args) -> int:
    poly = pbar_derivative(args.n) if args.derivative else pbar_poly(args.n)
    if args.point is not None:
        value = poly(args.point)
        if args.format == "json":
            _emit_json({"n": args.n, "x": encode(args.point), "value": encode(value)})
        else:
            print(value)
        return 0
    if args.format == "json":
        _emit_json({"n": args.n, "derivative": args.derivative, "coeffs": encode(poly.coeffs)})
    else:
        label = "pbar_derivative" if args.derivative else "pbar_poly"
        print(f"{label}({args.n}) = {poly}")
    return 0


def _cmd_series(args) -> int:
    table = series_expand(args.order)
    if args.format == "json":
        _emit_json(
            {"order": table.order, "coeffs": [encode(p.coeffs) for p in table.coeff_polys]}
        )
    else:
        for n, poly in enumerate(table.coeff_polys):
            print(f"q^{n}: {poly}")
    return 0


def _cmd_enumerate(args, config: dict) -> int:
    constraint = Constraint.parse(args.forbid) if args.forbid else NO_CONSTRAINT
    caps = _caps_from(config, args.colors, args.cap)
    items = enumerate_ops(args.n, args.colors, constraint, caps=caps)
    if args.format == "json":
        payload = {"n": args.n, "colors": args.colors, "count": len(items)}
        if not args.count:
            payload["overpartitions"] = encode(items)
        _emit_json(payload)
    else:
        print(f"count = {len(items)}")
        if not args.count:
            for parts in items:
                print(format_parts(parts))
    return 0


def _cmd_bijection(args, config: dict) -> int:
    caps = _caps_from(config, args.colors, args.cap)
    report = audit(args.map, args.a, args.b, args.colors, caps=caps)
    if args.format == "json":
        _emit_json(report.to_dict())
    else:
        print(
            f"map={report.map_name} a={report.a} b={report.b} k={report.k} "
            f"domain={report.domain_size} image={report.image_size} codomain={report.codomain_size}"
        )
        print(
            f"well_defined={report.well_defined} injective={report.injective} "
            f"surjective={report.surjective}"
        )
        if report.collision_witness:
            lam, mu = report.collision_witness
            print(f"collision: {format_parts(lam)} and {format_parts(mu)}")
        if report.unhit_witness:
            left, right = report.unhit_witness
            print(f"unhit: ({format_parts(left)}; {format_parts(right)})")
    return 0 if expected_verdict(report) else 1


def _cmd_verify(args) -> int:
    report = run_claim(
        args.claim,
        n_max=args.nmax,
        a_max=args.amax,
        a_lo=args.alo,
        a_hi=args.ahi,
        xs=args.xs,
        k_set=args.kset,
        ns=args.ns,
    )
    if args.format == "json":
        _emit_json(report.to_dict())
    else:
        print(f"claim={report.claim} range='{report.range_checked}' holds={report.holds}")
        if report.exceptions:
            print(f"exceptions={sorted(report.exceptions)}")
        if report.counterexample is not None:
            print(f"counterexample={report.counterexample}")
        if report.inconclusive:
            print(f"inconclusive={list(report.inconclusive)}")
        if report.stats:
            rendered = json.dumps(encode(report.stats), sort_keys=True)
            print(f"stats={rendered}")
    return 0 if report.holds else 1


def _cmd_roots(args, config: dict) -> int:
    width = args.width
    if width is None:
        width = Fraction(config["width"]) if "width" in config else Fraction(1, 10**4)
    workers = _workers_from(config)
    records = roots_table(args.amax, args.bmax, width, workers=workers)
    if args.format == "csv":
        sys.stdout.write(roots_csv(records))
    elif args.format == "json":
        for record in records:
            _emit_json(record.to_dict())
    else:
        for record in records:
            print(f"x({record.a},{record.b}) = {record.rounded}  bracket=[{record.bracket_lo}, {record.bracket_hi}]")
    return 0


def _cmd_bounds(args) -> int:
    if args.n is None and args.nmax is None:
        print("bounds: give n or --nmax", file=sys.stderr)
        return 2
    ns = range(1, args.nmax + 1) if args.nmax else [args.n]
    all_ok = True
    for n in ns:
        triple = sandwich(n)
        ok = triple.lower < triple.exact < triple.upper and (n < 2 or triple.remainder_ok)
        all_ok = all_ok and ok
        if args.format == "json":
            _emit_json(triple.to_dict())
        else:
            print(
                f"n={triple.n} lower={triple.lower!r} exact={triple.exact} upper={triple.upper!r} "
                f"main_term={triple.main_term!r} remainder_bound={triple.remainder_bound!r} "
                f"remainder_ok={triple.remainder_ok}"
            )
    return 0 if all_ok else 1


def _caps_from(config: dict, colors: int | None = None, cap: int | None = None):
    caps = None
    if "caps" in config:
        caps = {int(k): int(v) for k, v in config["caps"].items()}
    if cap is not None:
        caps = dict(DEFAULT_CAPS) if caps is None else caps
        caps[colors] = cap
    return caps


def _workers_from(config: dict) -> int:
    env = os.environ.get("OVERPOLY_WORKERS")
    if env is not None:
        return int(env)
    return int(config.get("workers", 1))


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        config = _load_config(args.config)
        if args.command == "poly":
            return _cmd_poly(args)
        if args.command == "series":
            return _cmd_series(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args, config)
        if args.command == "bijection":
            return _cmd_bijection(args, config)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "roots":
            return _cmd_roots(args, config)
        if args.command == "bounds":
            return _cmd_bounds(args)
        raise AssertionError(f"unhandled command {args.command}")
    except CapExceededError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
