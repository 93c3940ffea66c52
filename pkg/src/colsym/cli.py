"""Command line interface: ``colsym eval | verify | kostka | cssyt | dual-schur | schur | realize``."""

from __future__ import annotations

import argparse
import json
import string
import sys

from . import dsl, poly, tableaux
from . import sentences as sn
from .algebras import Algebras
from .errors import (AlgebraMismatchError, AlphabetError, BasisError, ColsymError, ConfigError,
                     ParseError)
from .sentences import Alphabet
from .verify import CHECKS, DEFAULT_CAP, run_suite

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
INPUT_ERRORS = (ParseError, AlphabetError, BasisError, AlgebraMismatchError, ConfigError)


def _alphabet(text: str) -> Alphabet:
    try:
        return Alphabet(text)
    except AlphabetError as err:
        raise ConfigError(str(err)) from err


def _shape(text: str, alphabet: Alphabet, canonical: bool) -> tuple[str, ...]:
    try:
        shape = sn.parse_sentence(text, alphabet)
    except (AlphabetError, ParseError, ValueError) as err:
        raise ConfigError(f"bad shape {text!r}: {err}") from err
    if canonical and not sn.is_psentence(shape, alphabet):
        raise ConfigError(f"shape {sn.fmt_sentence(shape)} is not a p-sentence; "
                          f"did you mean {sn.fmt_sentence(sn.sort_sentence(shape, alphabet))}?")
    return shape


def _emit(text: str, obj, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj) + "\n")
    else:
        sys.stdout.write(text + "\n")


def cmd_eval(args) -> int:
    algebras = Algebras(_alphabet(args.alphabet))
    value = dsl.run(args.expression, algebras)
    _emit(dsl.render(value), dsl.to_json_obj(value), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(_alphabet(args.alphabet), args.max_degree, args.checks, cap=args.cap)
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return report.exit_code


def cmd_kostka(args) -> int:
    if args.size < 0:
        raise ConfigError("size must be non-negative")
    alphabet = _alphabet(args.alphabet)
    order, rows = tableaux.kostka_matrix(args.size, alphabet)
    labels = [sn.fmt_sentence(p) for p in order]
    width = max((len(x) for x in labels), default=1)
    lines = [f"{'':>{width}}  " + " ".join(labels)]
    for label, row in zip(labels, rows):
        lines.append(f"{label:>{width}}  " + " ".join(f"{v:>{len(x)}}" for v, x in zip(row, labels)))
    _emit("\n".join(lines), {"alphabet": str(alphabet), "size": args.size, "order": labels, "matrix": rows},
          args.format)
    return EXIT_OK


def cmd_cssyt(args) -> int:
    alphabet = _alphabet(args.alphabet)
    shape = _shape(args.shape, alphabet, canonical=False)
    if args.max_entry < 0:
        raise ConfigError("max entry must be non-negative")
    try:
        found = tableaux.enumerate_cssyt(shape, args.max_entry)
    except ValueError as err:
        raise ConfigError(str(err)) from err
    blocks = [f"{t.render()}\ntype {sn.fmt_sentence(t.type)}" for t in found]
    text = "\n\n".join(blocks + [f"{len(found)} tableaux"])
    obj = [{"entries": [list(r) for r in t.entries], "type": sn.fmt_sentence(t.type)} for t in found]
    _emit(text, obj, args.format)
    return EXIT_OK


def cmd_dual_schur(args) -> int:
    alphabet = _alphabet(args.alphabet)
    f = tableaux.dual_schur_in_m(_shape(args.shape, alphabet, canonical=True), alphabet)
    _emit(f.render(), f.to_json_obj(), args.format)
    return EXIT_OK


def cmd_schur(args) -> int:
    alphabet = _alphabet(args.alphabet)
    f = tableaux.schur_in_h(_shape(args.shape, alphabet, canonical=True), alphabet)
    _emit(f.render(), f.to_json_obj(), args.format)
    return EXIT_OK


def cmd_realize(args) -> int:
    alphabet = _alphabet(args.alphabet)
    index = _shape(args.index, alphabet, canonical=args.symmetric)
    if args.slots < 0:
        raise ConfigError("slot count must be non-negative")
    p = poly.realize_m(index, args.slots) if args.symmetric else poly.realize_M(index, args.slots)
    obj = [{"monomial": [[j, w] for j, w in m], "num": c.numerator, "den": c.denominator}
           for m, c in sorted(p.terms.items())]
    _emit(p.render(), obj, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colsym", description="Colored symmetric and quasisymmetric functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, alphabet: str):
        p.add_argument("--alphabet", default=alphabet, help=f"ordered colors (default {alphabet!r})")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expression")
    common(p, string.ascii_lowercase)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run the exhaustive identity checks")
    common(p, "ab")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--checks", default="all", help="comma-separated subset of: " + ", ".join(CHECKS))
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="refuse configurations with more basis keys")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kostka", help="colored Kostka matrix")
    p.add_argument("--size", type=int, required=True)
    common(p, "ab")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("cssyt", help="list colored semistandard tableaux")
    p.add_argument("--shape", required=True)
    p.add_argument("--max-entry", type=int, required=True)
    common(p, string.ascii_lowercase)
    p.set_defaults(func=cmd_cssyt)

    for name, fn, what in (("dual-schur", cmd_dual_schur, "colored dual Schur function in the m basis"),
                           ("schur", cmd_schur, "colored Schur function in the h basis")):
        p = sub.add_parser(name, help=what)
        p.add_argument("--shape", required=True)
        common(p, string.ascii_lowercase)
        p.set_defaults(func=fn)

    p = sub.add_parser("realize", help="truncated polynomial of M_I (or m_P with --symmetric)")
    p.add_argument("--index", required=True)
    p.add_argument("--slots", type=int, required=True)
    p.add_argument("--symmetric", action="store_true")
    common(p, string.ascii_lowercase)
    p.set_defaults(func=cmd_realize)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_CONFIG
    except ColsymError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
