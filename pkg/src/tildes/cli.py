"""Command-line interface.

Exit status: 0 on success, 1 when a yes/no command (sat, member, equiv)
answers no, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import automaton as au
from . import bench
from . import expr as ex
from . import formula as fm
from .derivative import derive_word, derived_term_automaton, member
from .errors import AtomOutOfRange, ParseError
from .glushkov import glushkov_automaton
from .syntax import parse, parse_formula


def _word_text(word) -> str:
    return "".join(map(str, word)) if word else '""'


def _describe(automaton: au.Nfa, out) -> None:
    ids = {s: f"q{k}" for k, s in enumerate(automaton.states)}
    print(
        f"states={len(automaton.states)} finals={len(automaton.finals)} "
        f"transitions={automaton.num_transitions}",
        file=out,
    )
    for s in automaton.states:
        marks = [m for m, on in (("initial", s in automaton.initial), ("final", s in automaton.finals)) if on]
        print(" ".join([ids[s]] + marks + [str(s)]), file=out)
    for s, a, t in automaton.transitions():
        print(f"{ids[s]} {a} {ids[t]}", file=out)


def _automaton_command(build, args, out) -> int:
    automaton = build(parse(args.expr))
    if args.dot:
        out.write(au.to_dot(automaton))
    else:
        _describe(automaton, out)
    return 0


def _sat(args, out) -> int:
    answer = fm.is_satisfiable(parse_formula(args.formula))
    print("true" if answer else "false", file=out)
    return 0 if answer else 1


def _parse(args, out) -> int:
    print(ex.to_text(parse(args.expr)), file=out)
    return 0


def _null(args, out) -> int:
    print("true" if ex.nullable(parse(args.expr)) else "false", file=out)
    return 0


def _member(args, out) -> int:
    answer = member(parse(args.expr), tuple(args.word))
    print("true" if answer else "false", file=out)
    return 0 if answer else 1


def _derive(args, out) -> int:
    for term in derive_word(parse(args.expr), tuple(args.word)):
        print(ex.to_text(term), file=out)
    return 0


def _enum(args, out) -> int:
    for word in ex.language_upto(parse(args.expr), args.bound):
        print(_word_text(word), file=out)
    return 0


def _equiv(args, out) -> int:
    left, right = parse(args.left), parse(args.right)
    alphabet = sorted(ex.symbols(left) | ex.symbols(right))
    answer = au.equivalent(
        derived_term_automaton(left, alphabet), derived_term_automaton(right, alphabet)
    )
    print("true" if answer else "false", file=out)
    return 0 if answer else 1


def _bench(args, out) -> int:
    for line in bench.size_report(args.n).lines():
        print(line, file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tildes", description="Constrained multi-tilde regular expressions."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sat", help="satisfiability of a formula")
    p.add_argument("formula")
    p.set_defaults(func=_sat)

    p = sub.add_parser("parse", help="parse and pretty-print an expression")
    p.add_argument("expr")
    p.set_defaults(func=_parse)

    p = sub.add_parser("null", help="does the expression accept the empty word")
    p.add_argument("expr")
    p.set_defaults(func=_null)

    p = sub.add_parser("member", help="membership test by partial derivatives")
    p.add_argument("expr")
    p.add_argument("word")
    p.set_defaults(func=_member)

    p = sub.add_parser("derive", help="partial derivative by a word, one term per line")
    p.add_argument("expr")
    p.add_argument("word")
    p.set_defaults(func=_derive)

    p = sub.add_parser("enum", help="words of the language up to a length")
    p.add_argument("expr")
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=_enum)

    for name, build in (("dta", derived_term_automaton), ("glushkov", glushkov_automaton)):
        p = sub.add_parser(name, help=f"{name} automaton")
        p.add_argument("expr")
        p.add_argument("--dot", action="store_true", help="emit Graphviz text")
        p.set_defaults(func=lambda args, out, build=build: _automaton_command(build, args, out))

    p = sub.add_parser("equiv", help="language equivalence of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_equiv)

    p = sub.add_parser("bench", help="size report for the mirror family")
    bench_sub = p.add_subparsers(dest="family", required=True)
    m = bench_sub.add_parser("mirror")
    m.add_argument("n", type=int)
    m.set_defaults(func=_bench)
    return parser


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"error: {exc.message} at position {exc.position}", file=err)
        print(f"  {exc.text}", file=err)
        print("  " + " " * exc.position + "^", file=err)
        return 2
    except AtomOutOfRange as exc:
        print(f"error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
