"""``continuants`` command line: evaluate, construct, verify, bound and trace.

Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error,
3 infeasible set.  Output is JSON unless ``--plain`` is given; large
integers are always printed as decimal strings.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import extremal, grids
from .bounds import bound_report, base_comparison
from .core import InvalidSequenceError, as_sequence, cf_value, continuant, to_decimal
from .extremal import DomainError, InfeasibleError, MultisetSpec
from .oracle import EnumerationRequest, brute_force
from .reflect import replay_trace, transitive_maximize, transitive_minimize

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3

# largest U_n(S) the bound command will search exhaustively for the exact minimum
_BOUND_SEARCH_LIMIT = 24


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(record: dict, plain: bool) -> None:
    if plain:
        width = max((len(k) for k in record), default=0)
        for key, val in record.items():
            if isinstance(val, (list, dict)):
                val = json.dumps(val)
            print(f"{key:<{width}}  {val}")
    else:
        print(json.dumps(record))


def cmd_eval(args) -> int:
    seq = as_sequence(args.elements)
    record = {"sequence": list(seq), "continuant": to_decimal(continuant(seq))}
    if args.cf:
        if not seq:
            raise DomainError("a continued fraction needs at least one term")
        value: Fraction = cf_value(seq[1:], seq[0])
        record["cf"] = f"{value.numerator}/{value.denominator}"
    if args.plain or not args.json:
        print(record["continuant"])
        if args.cf:
            print(record["cf"])
    else:
        print(json.dumps(record))
    return EXIT_OK


def _multiset(args) -> MultisetSpec:
    if args.values is None or args.mults is None:
        raise DomainError("--values and --mults are required")
    return MultisetSpec(tuple(args.values), tuple(args.mults))


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise DomainError(f"--{name.replace('_', '-')} is required")


def cmd_extremal(args) -> int:
    cmd = args.command
    if cmd == "max-v":
        result = extremal.max_v(_multiset(args))
    elif cmd == "max-w":
        result = extremal.max_w(_multiset(args))
    elif cmd == "min-w":
        result = extremal.min_w(_multiset(args))
    elif cmd == "max-un":
        _need(args, "sum")
        result = extremal.max_un(args.sum)
    elif cmd == "max-ust":
        _need(args, "sum", "len")
        result = extremal.max_ust(args.sum, args.len)
    elif cmd == "min-ustn":
        _need(args, "sum", "len", "bound")
        result = extremal.min_ustn(args.sum, args.len, args.bound)
    else:
        _need(args, "sum", "bound")
        result = extremal.min_un(args.sum, args.bound)
    _emit(result.to_record(), args.plain)
    return EXIT_OK


def cmd_verify(args) -> int:
    ranges = {
        "S_max": args.S_max,
        "t_max": args.t_max,
        "n_max": args.n_max,
        "h_max": args.h_max,
        "f_max": args.f_max,
    }
    allowed = set(grids.DEFAULT_RANGES[args.family])
    ranges = {k: v for k, v in ranges.items() if v is not None and k in allowed}
    grid = grids.run_grid(args.family, jobs=args.jobs, uniqueness=args.uniqueness, **ranges)
    record = grid.to_record(verbose=args.verbose)
    if args.uniqueness:
        record["all_unique"] = grid.all_unique
    _emit(record, args.plain)
    return EXIT_OK if grid.all_match else EXIT_MISMATCH


def cmd_bound(args) -> int:
    if args.compare_bases:
        ours, theirs = base_comparison(args.digits)
        holds = ours > theirs
        record = {"base_n4": str(ours), "older_base": str(theirs), "holds": holds,
                  "comparison": f"{ours} {'>' if holds else '<='} {theirs}"}
        if args.plain:
            print(record["comparison"])
        else:
            print(json.dumps(record))
        return EXIT_OK
    _need(args, "sum", "bound")
    S, n = args.sum, args.bound
    if not 2 <= n <= S - 2:
        raise DomainError("requires 2 <= n <= S - 2")
    exact = None
    if S <= _BOUND_SEARCH_LIMIT:
        exact = brute_force(EnumerationRequest.uns(S, n)).min_value
    _emit(bound_report(S, n, exact, args.digits), args.plain)
    return EXIT_OK


def cmd_trace(args) -> int:
    seq = as_sequence(args.seq)
    run = transitive_maximize if args.maximize else transitive_minimize
    final, trace = run(seq)
    steps = replay_trace(seq, trace)
    for step in steps:
        before, after = int(step["before"]), int(step["after"])
        if (args.maximize and after < before) or (args.minimize and after > before):
            raise AssertionError(f"non-monotone step {step}")
    record = {
        "start": list(seq),
        "start_value": to_decimal(continuant(seq)),
        "steps": steps,
        "final": list(final),
        "final_value": to_decimal(continuant(final)),
    }
    if args.plain:
        print(f"start  {list(seq)}  {record['start_value']}")
        for step in steps:
            print(f"reflect {step['lo']}..{step['hi']}  {step['before']} -> {step['after']}")
        print(f"final  {list(final)}  {record['final_value']}")
    else:
        print(json.dumps(record))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="continuants", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="continuant of a sequence")
    p.add_argument("elements", nargs="*", type=int)
    p.add_argument("--cf", action="store_true", help="also print [a0; a1, ...] as an exact fraction")
    p.add_argument("--json", action="store_true")
    p.add_argument("--plain", action="store_true")
    p.set_defaults(func=cmd_eval)

    for name, help_text in (
        ("max-v", "maximum over arrangements starting with the minimum"),
        ("max-w", "maximum over arrangements of a multiset"),
        ("min-w", "minimum over arrangements of a multiset"),
        ("max-un", "maximum over compositions of S"),
        ("max-ust", "maximum over compositions of S into t parts"),
        ("min-ustn", "minimum over compositions of S into t parts bounded by n"),
        ("min-un", "minimum over compositions of S with parts bounded by n"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--values", type=_int_list)
        p.add_argument("--mults", type=_int_list)
        p.add_argument("--sum", type=int)
        p.add_argument("--len", type=int)
        p.add_argument("--bound", type=int)
        p.add_argument("--plain", action="store_true")
        p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="compare closed forms with exhaustive search on a grid")
    p.add_argument("--family", required=True, choices=grids.GRID_FAMILIES)
    p.add_argument("--S-max", dest="S_max", type=int)
    p.add_argument("--t-max", dest="t_max", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--h-max", dest="h_max", type=int)
    p.add_argument("--f-max", dest="f_max", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--uniqueness", action="store_true", help="also check that witnesses form one class")
    p.add_argument("--verbose", action="store_true", help="include every grid point")
    p.add_argument("--plain", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="certified lower bound for bounded compositions")
    p.add_argument("--sum", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--digits", type=int, default=20)
    p.add_argument("--compare-bases", "--remark1", dest="compare_bases", action="store_true",
                   help="compare the n = 4 growth base with sqrt(2 + 1e-6)")
    p.add_argument("--plain", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("trace", help="reflection trace towards an extremal arrangement")
    p.add_argument("--seq", type=_int_list, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--maximize", action="store_true")
    mode.add_argument("--minimize", action="store_true")
    p.add_argument("--plain", action="store_true")
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (DomainError, InvalidSequenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
