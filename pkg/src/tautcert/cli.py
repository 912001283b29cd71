"""Command-line front end.

Exit codes: 0 certified (or success), 1 not certified, 2 input error,
3 inconclusive random search, 4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from .algebra import ScalarParseError
from .certifier import (
    GalleryError,
    PresentationError,
    SolvableObstruction,
    certify,
    certify_one_dim_generic,
    certify_random,
    gallery,
    one_dim_obstruction,
    solvable_obstruction,
)
from .fileio import (
    InputFileError,
    format_presentation,
    format_representation,
    read_presentation,
    read_representation,
    write_presentation,
)
from .fox import fox_gradient
from .lcs import (
    DEFAULT_BUDGET,
    ResourceBudget,
    ResourceBudgetExceeded,
    collect,
    hall_basis,
    lcs_weight,
    magnus_expand,
)
from .reports import render_certificate, render_generic, render_obstruction, render_random, to_json
from .representation import RepresentationError
from .words import Alphabet, WordError, format_word, infer_alphabet, parse_word

EXIT_OK = 0
EXIT_NOT_CERTIFIED = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3
EXIT_RESOURCE = 4

INPUT_ERRORS = (
    InputFileError,
    WordError,
    PresentationError,
    RepresentationError,
    ScalarParseError,
    GalleryError,
    ValueError,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def _emit(report: dict, text: str, as_json: bool):
    sys.stdout.write(to_json(report) if as_json else text)


def _word_arg(args) -> tuple[Alphabet, object]:
    alphabet = Alphabet(tuple(args.generators.split())) if args.generators else infer_alphabet(args.word)
    return alphabet, parse_word(args.word, alphabet)


def cmd_certify(args) -> int:
    pres = read_presentation(args.presentation)
    rho = read_representation(args.representation, pres.alphabet)
    cert = certify(pres, rho, args.assume_self_dual)
    _emit(cert.to_dict(), render_certificate(cert), args.json)
    return EXIT_OK if cert.certified else EXIT_NOT_CERTIFIED


def cmd_certify1d(args) -> int:
    pres = read_presentation(args.presentation)
    g = certify_one_dim_generic(pres)
    _emit(g.to_dict(), render_generic(g), args.json)
    return EXIT_OK if g.certified else EXIT_NOT_CERTIFIED


def cmd_random(args) -> int:
    pres = read_presentation(args.presentation)
    r = certify_random(pres, args.dim, args.prime, args.trials, args.seed)
    _emit(r.to_dict(), render_random(r), args.json)
    return EXIT_OK if r.found else EXIT_INCONCLUSIVE


def cmd_obstruct(args) -> int:
    pres = read_presentation(args.presentation)
    budget = ResourceBudget(args.max_word_length, max(args.max_depth, DEFAULT_BUDGET.max_depth))
    partial: list[int] = []
    names = [f"a{j + 1}" for j in range(pres.genus)]
    try:
        report = solvable_obstruction(pres, args.max_depth, budget, partial)
        if args.search_length:
            w = one_dim_obstruction(pres, args.search_length, budget)
            report.one_dim_witness = None if w is None else format_word(w)
        status = EXIT_OK
    except ResourceBudgetExceeded as e:
        print(f"resource budget exceeded: {e}", file=sys.stderr)
        report = SolvableObstruction(pres.label, list(partial), args.max_depth, names, complete=False)
        status = EXIT_RESOURCE
    _emit(report.to_dict(), render_obstruction(report, report.one_dim_witness), args.json)
    return status


def cmd_fox(args) -> int:
    alphabet, w = _word_arg(args)
    parts = [f"d/d{n}: {d.format()}" for n, d in zip(alphabet.names, fox_gradient(w))]
    print(" ; ".join(parts))
    return EXIT_OK


def _series_names(alphabet: Alphabet) -> list[str]:
    if all(len(n) == 1 for n in alphabet.names):
        return [n.upper() for n in alphabet.names]
    return [f"X{i + 1}" for i in range(alphabet.rank)]


def cmd_magnus(args) -> int:
    alphabet, w = _word_arg(args)
    if args.cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    print(magnus_expand(w, args.cutoff).format(_series_names(alphabet)))
    return EXIT_OK


def cmd_lcs_weight(args) -> int:
    _, w = _word_arg(args)
    if args.cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    k = lcs_weight(w, args.cutoff)
    print("inf" if k == math.inf else str(k))
    return EXIT_OK


def cmd_hall(args) -> int:
    basis = hall_basis(args.rank, args.weight)
    for k in range(1, args.weight + 1):
        print(f"k={k}: " + ", ".join(b.format() for b in basis if b.weight == k))
    return EXIT_OK


def cmd_collect(args) -> int:
    alphabet, w = _word_arg(args)
    parts = []
    for b, e in collect(w, args.weight):
        s = b.format(alphabet.names)
        parts.append(s if e == 1 else f"{s}^{e}")
    print(" ".join(parts) if parts else "1")
    return EXIT_OK


def cmd_gallery(args) -> int:
    entry = gallery(args.name)
    if args.out:
        write_presentation(entry.presentation, args.out)
        if entry.representation is not None and args.rep_out:
            with open(args.rep_out, "w", encoding="utf-8") as fh:
                fh.write(format_representation(entry.representation))
    else:
        sys.stdout.write(format_presentation(entry.presentation))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tautcert", description="Certify sutured handlebodies as twisted homology products.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("certify", help="determinant certificate for a given representation")
    s.add_argument("presentation")
    s.add_argument("representation")
    s.add_argument("--assume-self-dual", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("certify1d", help="generic one-dimensional determinant polynomial")
    s.add_argument("presentation")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_certify1d)

    s = sub.add_parser("random", help="random search over a finite field")
    s.add_argument("presentation")
    s.add_argument("--dim", type=int, default=1)
    s.add_argument("--prime", type=int, default=101)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_random)

    s = sub.add_parser("obstruct", help="derived-series obstructions")
    s.add_argument("presentation")
    s.add_argument("--max-depth", type=int, default=4)
    s.add_argument("--search-length", type=int, default=1, help="0 skips the one-dimensional witness search")
    s.add_argument("--max-word-length", type=int, default=DEFAULT_BUDGET.max_word_length)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_obstruct)

    for name, func, extra in (
        ("fox", cmd_fox, ()),
        ("magnus", cmd_magnus, (("--cutoff", 3),)),
        ("lcs-weight", cmd_lcs_weight, (("--cutoff", 8),)),
        ("collect", cmd_collect, (("--weight", 4),)),
    ):
        s = sub.add_parser(name)
        s.add_argument("word")
        s.add_argument("--generators", help="space-separated generator names (default: inferred)")
        for flag, default in extra:
            s.add_argument(flag, type=int, default=default)
        s.set_defaults(func=func)

    s = sub.add_parser("hall", help="Hall basic commutators")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--weight", type=int, required=True)
    s.set_defaults(func=cmd_hall)

    s = sub.add_parser("gallery", help="write a named example presentation")
    s.add_argument("name")
    s.add_argument("--out")
    s.add_argument("--rep-out", help="also write the stored representation, if any")
    s.set_defaults(func=cmd_gallery)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except ResourceBudgetExceeded as e:
        print(f"resource budget exceeded: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
