"""Command-line interface.

Subcommands: gen, analyze, lfactor, period, experiment, bounds.
Exit codes: 0 success, 2 domain errors, 3 failed self-checks under
`experiment --check`.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from ._backend import BACKEND
from .bounds import bounds_table
from .core import SymbolString, shortest_border, shortest_period
from .errors import CheckFailedError, DomainError, UnknownAlgorithmError
from .experiment import RngSpec, emit_report, run_experiment, sample_string
from .factors import (
    brute_force_longest_unbordered,
    maximal_unbordered_factors,
    scan_longest_unbordered,
)
from .formats import parse_strings, read_strings, write_strings
from .reductions import (
    ReductionConfig,
    failure_table_period,
    period_via_unbordered,
    unbordered_via_period,
)


def _load_one_string(args) -> SymbolString:
    if args.file:
        strings = read_strings(args.file, args.sigma)
        if not strings:
            raise DomainError(f"no strings found in {args.file}")
        return strings[0]
    if args.string is None:
        raise DomainError("provide a STRING argument or --file")
    return parse_strings(args.string, args.sigma)[0]


def _add_input_args(p) -> None:
    p.add_argument("string", nargs="?", default=None, metavar="STRING")
    p.add_argument("--file", help="read the (first) string from this file")
    p.add_argument("--sigma", type=int, default=None, help="alphabet size")


def _cmd_gen(args) -> int:
    rng_spec = RngSpec(args.seed)
    strings = [
        sample_string(args.sigma, args.length, rng_spec.trial_rng(i))
        for i in range(args.count)
    ]
    sys.stdout.write(write_strings(strings, args.format))
    return 0


def _cmd_analyze(args) -> int:
    s = _load_one_string(args)
    res = scan_longest_unbordered(s)
    payload = {
        "n": len(s),
        "L": res.length,
        "witness": list(res.witness.as_tuple()),
        "per": shortest_period(s),
        "F": shortest_border(s),
    }
    if args.factors:
        payload["maximal_factors"] = [
            list(sp.as_tuple()) for sp in maximal_unbordered_factors(s)
        ]
    print(json.dumps(payload))
    return 0


def _reduction_config(args, s: SymbolString) -> ReductionConfig:
    if args.d is not None:
        return ReductionConfig(delta=1.0 / max(len(s), 2) ** 2, d=args.d,
                               constant_factor=args.constant_factor)
    return ReductionConfig.for_length(s.alphabet.sigma, len(s), args.constant_factor)


def _cmd_lfactor(args) -> int:
    s = _load_one_string(args)
    if args.algo == "brute":
        res = brute_force_longest_unbordered(s)
        payload = {"n": len(s), "value": res.length, "fallback": False, "d": None,
                   "witness": list(res.witness.as_tuple())}
    elif args.algo == "scan":
        res = scan_longest_unbordered(s)
        payload = {"n": len(s), "value": res.length, "fallback": False, "d": None,
                   "witness": list(res.witness.as_tuple())}
    elif args.algo == "reduction":
        cfg = _reduction_config(args, s)
        out = unbordered_via_period(s, cfg)
        payload = {"n": len(s), "value": out.value, "fallback": out.fallback_used,
                   "d": cfg.d,
                   "witness": list(out.span.as_tuple()) if out.span else None}
    else:
        raise UnknownAlgorithmError(f"unknown algorithm {args.algo!r}")
    print(json.dumps(payload))
    return 0


def _cmd_period(args) -> int:
    s = _load_one_string(args)
    if args.algo == "mp":
        payload = {"n": len(s), "value": failure_table_period(s), "fallback": False,
                   "d": None, "witness": None}
    elif args.algo == "via-unbordered":
        out = period_via_unbordered(s)
        payload = {"n": len(s), "value": out.value, "fallback": out.fallback_used,
                   "d": None,
                   "witness": list(out.span.as_tuple()) if out.span else None}
    else:
        raise UnknownAlgorithmError(f"unknown algorithm {args.algo!r}")
    print(json.dumps(payload))
    return 0


def _cmd_experiment(args) -> int:
    ell_grid = tuple(int(x) for x in args.ell_grid.split(",")) if args.ell_grid else None
    config = None
    if args.algo == "reduction" and args.d is not None:
        config = ReductionConfig(delta=1.0 / max(args.length, 2) ** 2, d=args.d,
                                 constant_factor=args.constant_factor)
    report = run_experiment(
        args.sigma,
        args.length,
        args.trials,
        RngSpec(args.seed),
        algo=args.algo,
        ell_grid=ell_grid,
        workers=args.workers,
        check=args.check,
        config=config,
    )
    data = emit_report(report, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())
    return 0


def _cmd_bounds(args) -> int:
    ell_grid = (
        tuple(int(x) for x in args.ell_grid.split(","))
        if args.ell_grid
        else (1, 2, 4, 8, 16, 32, 64)
    )
    table = bounds_table(args.sigma, n=args.n, ell_grid=ell_grid)
    if args.format == "json":
        print(json.dumps(table, indent=2))
        return 0
    if args.format == "csv":
        print("quantity,value")
        print(f"t_star,{table['t_star']!r}")
        print(f"c_at_t_star,{table['c_at_t_star']!r}")
        print(f"c_at_t_max,{table['c_at_t_max']!r}")
        print(f"expectation_bound,{table['expectation_bound']!r}")
        print(f"lower_bound,{table['lower_bound']!r}")
        for ell, value in table["tail"].items():
            print(f"tail_ell_{ell},{value!r}")
        return 0
    raise DomainError(f"unknown format {args.format!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unbordered",
        description="Maximal unbordered factors, shortest periods, reductions "
        "between the two, and Monte Carlo checks of the analytic bounds.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} (backend: {BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="sample uniform random strings")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "int"], default="text")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("analyze", help="L, witness, period and shortest border")
    _add_input_args(p)
    p.add_argument("--factors", action="store_true",
                   help="also list every maximal unbordered factor")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("lfactor", help="longest unbordered factor length")
    _add_input_args(p)
    p.add_argument("--algo", choices=["brute", "scan", "reduction"], default="scan")
    p.add_argument("--d", type=int, default=None, help="override the gap threshold")
    p.add_argument("--constant-factor", type=float, default=10.0)
    p.set_defaults(func=_cmd_lfactor)

    p = sub.add_parser("period", help="shortest period")
    _add_input_args(p)
    p.add_argument("--algo", choices=["mp", "via-unbordered"], default="mp")
    p.set_defaults(func=_cmd_period)

    p = sub.add_parser("experiment", help="seeded Monte Carlo experiment")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algo", choices=["scan", "reduction"], default="scan")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--check", action="store_true",
                   help="audit a subsample against the brute oracle and require "
                   "every bound comparison to pass")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--ell-grid", default=None, help="comma-separated tail grid")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--constant-factor", type=float, default=10.0)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("bounds", help="analytic bound table")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--ell-grid", default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_bounds)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CheckFailedError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
