"""Command-line front end: coefficients, roots, membership tests, verification.

Exit codes are never conflated: 0 = pass/member/integral, 1 = checked and
mathematically negative, 2 = usage error, 3 = search resource cap exceeded.
Output at fixed flags is byte-identical across runs; verify reports print
elapsed_ms as 0 unless --timings is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .sequence import coefficient_stream, generating_series
from .series import (
    DEFAULT_FRONTIER_CAP,
    IntSeries,
    SearchCapExceeded,
    _membership_search,
    format_series,
    mu,
    nth_root_integral,
    parse_series,
    pn_membership_mod,
    reduce_mod,
)
from .verifier import verify_corollary, verify_eq1, verify_observation2, verify_theorem1

EXIT_PASS = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAP = 3

DEFAULT_ORDER = 50


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyadicseries",
        description="Exact coefficient sums, integer series roots, and valuation checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeffs = sub.add_parser("coeffs", help="print the coefficient sequence A(0)..A(order)")
    coeffs.add_argument("--order", type=int, default=None, help=f"last index (default {DEFAULT_ORDER})")
    coeffs.add_argument("--format", choices=("plain", "json"), default="plain")

    root = sub.add_parser("root", help="extract an integer n-th root of a series")
    root.add_argument("--order", type=int, default=None, help="truncation order")
    root.add_argument("--n", type=int, default=2, help="root degree (default 2)")
    root.add_argument("--input", default=None, help="comma-separated coefficients (default: built-in series)")
    root.add_argument("--format", choices=("plain", "json"), default="plain")

    pn = sub.add_parser("pn-check", help="n-th power membership test modulo mu(n)")
    pn.add_argument("--order", type=int, default=None, help="truncation order")
    pn.add_argument("--n", type=int, default=2, help="power degree (default 2)")
    pn.add_argument("--input", default=None, help="comma-separated coefficients (default: built-in series)")
    pn.add_argument("--modulus", type=int, default=None, help="override the reduction modulus (expert)")
    pn.add_argument("--cap", type=int, default=DEFAULT_FRONTIER_CAP, help="search frontier cap")
    pn.add_argument("--format", choices=("plain", "json"), default="plain")

    verify = sub.add_parser("verify", help="run exhaustive verification sweeps")
    verify.add_argument(
        "which", choices=("theorem1", "corollary", "eq1", "observation2", "all")
    )
    verify.add_argument("--n-max", type=int, default=None, dest="n_max",
                        help=f"range bound / truncation order (default {DEFAULT_ORDER})")
    verify.add_argument("--parallelism", type=int, default=None,
                        help="worker processes (default: available cores)")
    verify.add_argument("--timings", action="store_true",
                        help="emit real elapsed_ms instead of the deterministic 0")
    verify.add_argument("--format", choices=("plain", "json"), default="plain")

    return parser


def _input_series(args) -> IntSeries:
    """Build the series to operate on: --input coefficients or the built-in sequence.

    With both --input and --order, the coefficient list is zero-padded or
    truncated to the requested order.
    """
    if args.input is not None:
        coeffs = parse_series(args.input)
        if args.order is not None:
            if args.order < 0:
                raise ValueError(f"order must be >= 0, got {args.order}")
            length = args.order + 1
            coeffs = (coeffs + [0] * length)[:length]
        return IntSeries(coeffs)
    order = DEFAULT_ORDER if args.order is None else args.order
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return generating_series(order)


def _run_coeffs(args) -> int:
    order = DEFAULT_ORDER if args.order is None else args.order
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    values = list(coefficient_stream(order))
    if args.format == "json":
        print(json.dumps(values, separators=(",", ":")))
    else:
        print(format_series(values))
    return EXIT_PASS


def _run_root(args) -> int:
    if args.n < 2:
        raise ValueError(f"root degree must be >= 2, got {args.n}")
    f = _input_series(args)
    outcome = nth_root_integral(f, args.n)
    if outcome.is_integral:
        if args.format == "json":
            print(json.dumps(
                {"status": "INTEGRAL", "root": list(outcome.root.coefficients)},
                separators=(",", ":"),
            ))
        else:
            print(format_series(outcome.root))
        return EXIT_PASS
    if args.format == "json":
        print(json.dumps(
            {
                "status": "FAILS",
                "failure_index": outcome.failure_index,
                "failure_remainder": outcome.failure_remainder,
            },
            separators=(",", ":"),
        ))
    else:
        print(f"FAILS index={outcome.failure_index} remainder={outcome.failure_remainder}")
    return EXIT_NEGATIVE


def _run_pn_check(args) -> int:
    if args.n < 2:
        raise ValueError(f"power degree must be >= 2, got {args.n}")
    if args.cap < 1:
        raise ValueError(f"cap must be >= 1, got {args.cap}")
    f = _input_series(args)
    if f.coefficients[0] != 1:
        raise ValueError("series must have constant coefficient 1")
    modulus = mu(args.n) if args.modulus is None else args.modulus
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    reduced = reduce_mod(f, modulus)
    if modulus == mu(args.n):
        member = pn_membership_mod(reduced, args.n, frontier_cap=args.cap)
    else:
        # expert override: arbitrary modulus, full branching search under the cap
        member = _membership_search(reduced.residues, modulus, args.n, args.cap)
    if args.format == "json":
        print(json.dumps(
            {"member": member, "mu": modulus, "n": args.n, "order": f.order},
            separators=(",", ":"),
        ))
    else:
        print(f"{'member' if member else 'non-member'} mu={modulus}")
    return EXIT_PASS if member else EXIT_NEGATIVE


_VERIFIERS = {
    "theorem1": lambda bound, workers: verify_theorem1(bound, workers),
    "corollary": lambda bound, workers: verify_corollary(bound, workers),
    "eq1": lambda bound, workers: verify_eq1(bound, workers),
    "observation2": lambda bound, workers: verify_observation2(bound),
}


def _run_verify(args) -> int:
    bound = DEFAULT_ORDER if args.n_max is None else args.n_max
    if bound < 1:
        raise ValueError(f"n-max must be >= 1, got {bound}")
    workers = args.parallelism if args.parallelism is not None else os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"parallelism must be >= 1, got {workers}")
    names = list(_VERIFIERS) if args.which == "all" else [args.which]
    reports = [_VERIFIERS[name](bound, workers) for name in names]
    dicts = [r.to_json_dict(include_timing=args.timings) for r in reports]
    if args.format == "json":
        payload = dicts[0] if len(dicts) == 1 else dicts
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for d in dicts:
            print(json.dumps(d, indent=2))
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_NEGATIVE


_COMMANDS = {
    "coeffs": _run_coeffs,
    "root": _run_root,
    "pn-check": _run_pn_check,
    "verify": _run_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad flags
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return _COMMANDS[args.command](args)
    except SearchCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
