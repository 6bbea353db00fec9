"""Command line front end.

    oriposet rank 2,1,1,3 [--circular] [--oracle] [--json | --latex]
    oriposet qrat 32/9 [--oracle] [--json | --latex]
    oriposet markov aabab [--trace] [--kogiso] [--json | --latex]
    oriposet markov --depth 2 [--csv FILE] [--json]
    oriposet verify traces --rmax 40 [--csv FILE] [--json]

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import fence, harness, markov, qrational
from .poset import InvalidComposition, TooLarge, parse_composition
from .qpoly import LaurentPoly

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_ORACLE = 3


class UsageError(Exception):
    pass


def _fmt(poly: LaurentPoly, args) -> str:
    return poly.to_latex() if getattr(args, "latex", False) else str(poly)


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True, default=_json_default))


def _json_default(obj):
    if isinstance(obj, LaurentPoly):
        return obj.to_json()
    if isinstance(obj, tuple):
        return list(obj)
    return str(obj)


# -- rank -------------------------------------------------------------------------

def cmd_rank(args) -> int:
    try:
        parts = parse_composition(args.composition).require_positive()
        if args.circular:
            poly = fence.circular_rank(parts)
        else:
            poly = fence.rank(parts)
    except InvalidComposition as exc:
        raise UsageError(str(exc)) from exc

    status = EXIT_OK
    oracle_ok = None
    if args.oracle:
        try:
            if args.circular:
                brute = fence.circular_rank_oracle(parts, args.max_nodes)
            else:
                brute = fence.rank_oracle(parts, args.max_nodes)
        except TooLarge as exc:
            raise UsageError(str(exc)) from exc
        oracle_ok = brute == poly
        if not oracle_ok:
            status = EXIT_ORACLE
            print(f"oracle mismatch: enumeration gives {brute}", file=sys.stderr)

    if args.json:
        _emit_json({
            "composition": list(parts),
            "circular": args.circular,
            "polynomial": poly,
            "oracle_agrees": oracle_ok,
        })
    else:
        print(_fmt(poly, args))
    return status


# -- qrat ----------------------------------------------------------------------------

def cmd_qrat(args) -> int:
    try:
        x = qrational.parse_rational(args.fraction)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    regular = qrational.expand_regular(x)
    negative = qrational.expand_negative(x)
    value = qrational.q_rational(x)
    mq = qrational.matrix_Mq(negative)
    mplus = qrational.matrix_Mq_plus(regular)
    report = qrational.trace_theorems(x, oracle=args.oracle)
    if x.r == x.t:
        alpha = None
        trace_fence = "empty structure"
        trace_plus_fence = "(0,1)"
    else:
        alpha = tuple(qrational.alpha_of(x))
        trace_fence = ",".join(map(str, (regular[0] - 1,) + tuple(regular[1:])))
        trace_plus_fence = ",".join(map(str, regular))

    status = EXIT_OK
    failed = [k for k, ok in report.items() if not ok]
    if failed:
        status = EXIT_ORACLE if any(k.startswith("oracle") for k in failed) else EXIT_FAIL

    if args.json:
        _emit_json({
            "rational": str(x),
            "regular": list(regular),
            "negative": list(negative),
            "alpha": alpha,
            "numerator": value.num,
            "denominator": value.den,
            "trace_Mq": mq.trace(),
            "trace_Mq_circular_fence": trace_fence,
            "trace_Mq_plus": mplus.trace(),
            "trace_Mq_plus_circular_fence": trace_plus_fence,
            "checks": report,
        })
        return status

    print(f"rational      {x}")
    print(f"regular CF    {regular}")
    print(f"negative CF   {negative}")
    print(f"alpha         {'none' if alpha is None else ','.join(map(str, alpha))}")
    print(f"R(q)          {_fmt(value.num, args)}")
    print(f"T(q)          {_fmt(value.den, args)}")
    print(f"tr M_q        {_fmt(mq.trace(), args)}    circular fence {trace_fence}")
    print(f"tr M_q+       {_fmt(mplus.trace(), args)}    circular fence {trace_plus_fence}")
    for statement, ok in report.items():
        print(f"  [{'ok' if ok else 'FAIL'}] {statement}")
    return status


# -- markov ---------------------------------------------------------------------------

def _markov_table(args) -> int:
    rows = markov.table_rows(args.depth)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["word", "path", "fence", "polynomial", "symmetric", "unimodal"])
            for row in rows:
                poly = row["polynomial"]
                fence_txt = "" if row["fence"] is None else ",".join(map(str, row["fence"]))
                writer.writerow([row["word"], row["path"] or "", fence_txt, str(poly),
                                 poly.is_symmetric(), poly.is_unimodal()])
    if args.json:
        _emit_json(rows)
        return EXIT_OK
    width = max(len(r["word"]) for r in rows)
    for row in rows:
        fence_txt = "-" if row["fence"] is None else "(" + ",".join(map(str, row["fence"])) + ")"
        print(f"{row['word']:<{width}}  {fence_txt:<26} {_fmt(row['polynomial'], args)}")
    return EXIT_OK


def cmd_markov(args) -> int:
    if (args.word is None) == (args.depth is None):
        raise UsageError("give either a word or --depth")
    if args.depth is not None:
        if args.depth < 0:
            raise UsageError("--depth must be >= 0")
        return _markov_table(args)

    try:
        word = markov.ChristoffelWord(markov.expand_word(args.word))
    except markov.InvalidWord as exc:
        raise UsageError(str(exc)) from exc
    trace = markov.word_trace(word, kogiso=args.kogiso)
    if word.is_trivial() and not args.trace:
        raise UsageError(f"{word} is a trivial word; pass --trace to print its trace")

    payload = {"word": word.letters, "path": markov.find_path(word.letters, 10)}
    if args.trace:
        payload["trace"] = trace
    if not word.is_trivial():
        poly = markov.q_markov(word)
        payload["fence"] = list(markov.markov_fence(word))
        payload["polynomial"] = poly.shift(-word.length - word.count_b) if args.kogiso else poly
    if args.json:
        _emit_json(payload)
        return EXIT_OK
    if "polynomial" in payload:
        print(_fmt(payload["polynomial"], args))
    if args.trace:
        print(f"trace: {_fmt(trace, args)}")
    return EXIT_OK


# -- verify ------------------------------------------------------------------------

_SUITE_PARAMS = {
    "props": {"max_size": "max_size", "seed": "seed", "count": "count"},
    "identities": {},
    "traces": {"rmax": "rmax", "oracle": "oracle"},
    "markov-eq": {"depth": "depth"},
    "unimodal-sweep": {"max_size": "max_size"},
    "oracle": {"max_size": "max_size"},
    "markov-words": {"depth": "depth"},
    "counterexamples": {},
    "table1": {},
    "generalized": {"count": "count", "seed": "seed"},
}


def cmd_verify(args) -> int:
    params = {}
    for param, attr in _SUITE_PARAMS[args.suite].items():
        value = getattr(args, attr)
        if value is not None:
            params[param] = value
    result = harness.run_suite(args.suite, **params)

    if args.csv:
        _write_rows(args.csv, result.rows)
    if args.json:
        _emit_json(result.to_json())
    else:
        print(result.summary())
        if result.expected:
            shown = ", ".join(str(e) for e in result.expected[:12])
            print(f"expected exceptions: {shown}")
        for w in result.witnesses:
            print(f"counterexample: {w}")
    if result.ok:
        return EXIT_OK
    return EXIT_ORACLE if result.oracle_mismatch else EXIT_FAIL


def _write_rows(path: str, rows: list[dict]) -> None:
    if not rows:
        open(path, "w").close()
        return
    keys = list(rows[0])
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(keys)
        for row in rows:
            writer.writerow([_csv_cell(row[k]) for k in keys])


def _csv_cell(value):
    if isinstance(value, tuple):
        return ",".join(map(str, value))
    return str(value)


# -- entry point --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oriposet",
        description="Rank polynomials of fences, q-rationals and q-Markov numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p, latex=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if latex:
            p.add_argument("--latex", action="store_true", help="LaTeX exponents q^{k}")

    p = sub.add_parser("rank", help="rank polynomial of a fence or circular fence")
    p.add_argument("composition", help='parts such as "2,1,1,3" or "3,1,2^4"')
    p.add_argument("--circular", action="store_true", help="circular fence (even length)")
    p.add_argument("--oracle", action="store_true", help="cross-check by enumerating ideals")
    p.add_argument("--max-nodes", type=int, default=None, help="node bound for --oracle")
    output_flags(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("qrat", help="continued fractions and q-deformation of r/t >= 1")
    p.add_argument("fraction", help='e.g. "32/9"')
    p.add_argument("--oracle", action="store_true", help="also compare traces with enumeration")
    output_flags(p)
    p.set_defaults(func=cmd_qrat)

    p = sub.add_parser("markov", help="q-Markov number of a Christoffel word, or a table")
    p.add_argument("word", nargs="?", help='word over a,b such as "aabab" or "a^2bab"')
    p.add_argument("--depth", type=int, default=None, help="table of all words up to this depth")
    p.add_argument("--trace", action="store_true", help="also print the q-Cohn trace")
    p.add_argument("--kogiso", action="store_true", help="use the q^-1 A, q^-2 B normalization")
    p.add_argument("--csv", default=None, help="write the --depth table to this file")
    output_flags(p)
    p.set_defaults(func=cmd_markov)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(harness.SUITES))
    p.add_argument("--rmax", type=int, default=None, help="traces: largest numerator")
    p.add_argument("--max-size", type=int, default=None, help="largest composition size")
    p.add_argument("--depth", type=int, default=None, help="Christoffel tree depth")
    p.add_argument("--count", type=int, default=None, help="number of random instances")
    p.add_argument("--seed", type=int, default=None, help="random seed")
    p.add_argument("--oracle", action="store_true", default=None, help="traces: brute-force too")
    p.add_argument("--csv", default=None, help="write the suite's table rows to this file")
    output_flags(p, latex=False)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
