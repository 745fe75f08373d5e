"""Command-line front end: verification suites and small graded-ring utilities.

Exit codes: 0 all checks pass, 1 at least one failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .checks import (CheckRecord, ConfigurationError, EXTRA_SUITES, SUITES,
                     VerifyConfig, run_all, scroll_suite)
from .grading import enumerate_monomials, hilbert_count
from .poly import monomial_text
from .wps import WeightedProjectiveSpace


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        weights = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ConfigurationError(f"weights must be a comma-separated integer list, got {text!r}")
    if not weights:
        raise ConfigurationError("weights must be nonempty")
    return weights


def _variable_names(count: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, count + 1))


def _print_records(records: list[CheckRecord]) -> None:
    width = max(len(r.check_id) for r in records)
    for r in records:
        value = r.computed if r.status == "PASS" else f"{r.computed}, expected {r.expected}"
        print(f"{r.status:<4}  {r.check_id:<{width}}  {value}  | {r.claim}")


def _write_json(records: list[CheckRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for r in records:
            handle.write(json.dumps(asdict(r)) + "\n")


def _finish(records: list[CheckRecord], json_path: str | None) -> int:
    _print_records(records)
    if json_path:
        _write_json(records, json_path)
    failed = sum(1 for r in records if r.status == "FAIL")
    elapsed = sum(r.elapsed for r in records)
    print(f"{len(records)} checks: {len(records) - failed} passed, "
          f"{failed} failed ({elapsed:.2f}s)")
    return 1 if failed else 0


def cmd_verify(args: argparse.Namespace) -> int:
    suite = args.suite_flag if args.suite_flag else args.suite
    config = VerifyConfig(xi_text=args.xi, suite=suite, seed=args.seed)
    return _finish(run_all(config), args.json)


def cmd_hilbert(args: argparse.Namespace) -> int:
    weights = _parse_weights(args.weights)
    print(f"weights {weights}, degree {args.degree}: "
          f"{hilbert_count(weights, args.degree)} monomials")
    if args.list:
        names = _variable_names(len(weights))
        for exponents in enumerate_monomials(weights, args.degree):
            print(f"  {monomial_text(exponents, names) or '1'}")
    return 0


def cmd_wps(args: argparse.Namespace) -> int:
    weights = _parse_weights(args.weights)
    try:
        space = WeightedProjectiveSpace(weights)
    except ValueError as error:
        raise ConfigurationError(str(error))
    basis = space.anticanonical_basis()
    print(f"P{space.weights.weights}")
    print(f"  anticanonical weight:            {space.anticanonical_weight()}")
    print(f"  anticanonical self-intersection: {space.anticanonical_selfintersection()}")
    print(f"  anticanonical basis size:        {len(basis)} (projective dimension {len(basis) - 1})")
    if args.basis:
        names = _variable_names(len(weights))
        for exponents in basis:
            print(f"  {monomial_text(exponents, names) or '1'}")
    return 0


def cmd_scroll_check(args: argparse.Namespace) -> int:
    return _finish(scroll_suite(), args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fano72",
        description="Exact certification that the degree-72 scroll-cone threefold "
                    "is anticanonically embedded P(1,1,4,6).")
    sub = parser.add_subparsers(dest="command", required=True)

    suite_names = ("all",) + SUITES + EXTRA_SUITES
    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("suite", nargs="?", default="all", choices=suite_names,
                        help="suite to run (default: all)")
    verify.add_argument("--suite", dest="suite_flag", choices=suite_names, default=None,
                        help="suite to run (overrides the positional form)")
    verify.add_argument("--xi", default=None, metavar="CUBIC",
                        help="pencil cubic in x1, x2, e.g. "
                             "'x2^3 - 6*x1*x2^2 + 11*x1^2*x2 - 6*x1^3'")
    verify.add_argument("--seed", type=int, default=0,
                        help="seed for the random-member sample checks")
    verify.add_argument("--json", default=None, metavar="PATH",
                        help="also write one JSON record per check to PATH")
    verify.set_defaults(func=cmd_verify)

    hilbert = sub.add_parser("hilbert", help="count monomials of a weighted degree")
    hilbert.add_argument("--weights", required=True, help="comma-separated weights, e.g. 1,1,4,6")
    hilbert.add_argument("--degree", type=int, required=True)
    hilbert.add_argument("--list", action="store_true", help="also print the monomials")
    hilbert.set_defaults(func=cmd_hilbert)

    wps = sub.add_parser("wps", help="anticanonical data of a weighted projective space")
    wps.add_argument("--weights", required=True, help="comma-separated weights, e.g. 1,1,4,6")
    wps.add_argument("--basis", action="store_true", help="also print the basis monomials")
    wps.set_defaults(func=cmd_wps)

    scroll = sub.add_parser("scroll-check", help="run the scroll and cone bookkeeping checks")
    scroll.add_argument("--json", default=None, metavar="PATH")
    scroll.set_defaults(func=cmd_scroll_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigurationError as error:
        print(f"configuration error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
