"""
Command-line front end.  Every subcommand prints deterministic text;
exit code 0 on success, 1 on a domain error, 2 on a usage error.
"""
from __future__ import annotations

import argparse
import sys

from . import checks
from .basis import basis_length_counts, compute_basis
from .machine import render_trace, sort_with_trace, tier_by_simulation
from .parker import format_parker, parker_to_perm, parse_parker, perm_to_parker
from .perm import format_permutation, parse_permutation, separated_pairs
from .series import DEFAULT_ORDER, format_series_terms, t_series
from .tables import FORMATTERS, cumulative, table_bruteforce, table_gf, table_recurrence
from .tiers import max_tier, max_tier_witness, tier


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stacktier",
        description="Multi-pass stack sorting: tiers, bases, bijection, enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tier", help="tier of a permutation")
    p.add_argument("perm")
    p.add_argument("--method", choices=["pairs", "sim", "both"], default="pairs")

    p = sub.add_parser("sort", help="pass-by-pass sorting of a permutation")
    p.add_argument("perm")
    p.add_argument("--trace", action="store_true", help="one line per push/pop event")

    p = sub.add_parser("pairs", help="separated pairs with witnesses")
    p.add_argument("perm")

    p = sub.add_parser("table", help="tier triangle / cumulative class counts")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--cumulative", action="store_true")
    p.add_argument("--method", choices=["brute", "recurrence", "gf"], default="recurrence")
    p.add_argument("--format", choices=sorted(FORMATTERS), default="text")

    p = sub.add_parser("basis", help="basis of the class of tier <= t")
    p.add_argument("--tier", type=int, required=True, dest="t")
    p.add_argument("--max-len", type=int, default=9)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--counts", action="store_true", help="per-length counts only")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("maxtier", help="maximum tier at a given length")
    p.add_argument("n", type=int)
    p.add_argument("--witness", action="store_true")

    p = sub.add_parser("bijection", help="Parker sequence <-> permutation")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--to-perm", metavar="SEQ")
    group.add_argument("--to-seq", metavar="PERM")

    p = sub.add_parser("gf", help="series for the tier-t generating function")
    p.add_argument("--tier", type=int, required=True, dest="t")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)

    p = sub.add_parser("check", help="run the cross-oracle validation battery")
    p.add_argument("--max-n", type=int, default=8)

    return parser


def _cmd_tier(args) -> int:
    p = parse_permutation(args.perm)
    if args.method == "pairs":
        print(tier(p))
    elif args.method == "sim":
        print(tier_by_simulation(p))
    else:
        by_pairs, by_sim = tier(p), tier_by_simulation(p)
        if by_pairs != by_sim:
            print(
                f"internal-consistency failure: pairs={by_pairs} sim={by_sim}",
                file=sys.stderr,
            )
            return 1
        print(by_pairs)
    return 0


def _cmd_sort(args) -> int:
    p = parse_permutation(args.perm)
    trace = sort_with_trace(p)
    if args.trace:
        print(render_trace(trace))
    else:
        for k, one in enumerate(trace.passes, start=1):
            popped = " ".join(str(v) for v in one.popped)
            leftover = " ".join(str(v) for v in one.leftover) or "-"
            print(f"pass {k}: pop {popped} | leftover {leftover}")
        print(f"tier {trace.tier}")
    return 0


def _cmd_pairs(args) -> int:
    p = parse_permutation(args.perm)
    for sp in separated_pairs(p):
        witness = p[sp.witness_position - 1]
        print(
            f"({sp.large},{sp.small}) separated by {witness} "
            f"at position {sp.witness_position}"
        )
    return 0


def _cmd_table(args) -> int:
    if args.method == "brute":
        table = table_bruteforce(args.max_n)
    elif args.method == "recurrence":
        table, _ = table_recurrence(args.max_n)
    else:
        table = table_gf(args.max_n)
    if args.cumulative:
        table = cumulative(table)
    print(FORMATTERS[args.format](table))
    return 0


def _cmd_basis(args) -> int:
    b = compute_basis(args.t, args.max_len, allow_large=args.allow_large)
    if args.counts:
        counts = basis_length_counts(b)
        if args.format == "json":
            import json

            print(json.dumps({str(k): v for k, v in sorted(counts.items())}))
        else:
            for length in sorted(counts):
                print(f"length {length}: {counts[length]}")
    elif args.format == "json":
        import json

        print(json.dumps([list(p) for p in b.elements]))
    else:
        for p in b.elements:
            print(format_permutation(p))
    return 0


def _cmd_maxtier(args) -> int:
    print(max_tier(args.n))
    if args.witness:
        print(format_permutation(max_tier_witness(args.n)))
    return 0


def _cmd_bijection(args) -> int:
    if args.to_perm is not None:
        seq = parse_parker(args.to_perm)
        print(format_permutation(parker_to_perm(seq)))
    else:
        p = parse_permutation(args.to_seq)
        print(format_parker(perm_to_parker(p)))
    return 0


def _cmd_gf(args) -> int:
    coeffs = t_series(args.t, args.order)
    for line in format_series_terms(coeffs):
        print(line)
    return 0


def _cmd_check(args) -> int:
    failures = 0
    for name, ok, detail in checks.run_all(args.max_n):
        status = "PASS" if ok else "FAIL"
        print(f"{status} {name}: {detail}")
        failures += 0 if ok else 1
    return 0 if failures == 0 else 1


_HANDLERS = {
    "tier": _cmd_tier,
    "sort": _cmd_sort,
    "pairs": _cmd_pairs,
    "table": _cmd_table,
    "basis": _cmd_basis,
    "maxtier": _cmd_maxtier,
    "bijection": _cmd_bijection,
    "gf": _cmd_gf,
    "check": _cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
