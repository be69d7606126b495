"""Command-line interface.

Subcommands: ``trace``, ``ideal``, ``verify-borromean``, ``oracle``.
Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import ideal, oracle
from .polyring import format_poly, rem_mod_K, to_terms
from .trace import trace_nf, trace_poly
from .words import WordSyntaxError, format_word, parse_word

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skein3", description="Trace polynomials and skein algebra ideals for 3-generator groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("trace", help="trace polynomial of a word")
    t.add_argument("word")
    t.add_argument("--normal-form", action="store_true", help="reduce modulo K")
    t.add_argument("--format", choices=("text", "json"), default="text")

    i = sub.add_parser("ideal", help="ideal generators of a presentation file")
    i.add_argument("presentation")
    i.add_argument("--normal-form", action="store_true", help="reduce each generator modulo K")
    i.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify-borromean", help="check the Borromean rings generators")
    v.add_argument("--format", choices=("text", "json"), default="text")

    o = sub.add_parser("oracle", help="fuzz trace polynomials against exact SL2 matrices")
    o.add_argument("--trials", type=_positive_int, default=500)
    o.add_argument("--max-len", type=_positive_int, default=12)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--format", choices=("text", "json"), default="text")
    return p


def cmd_trace(args) -> int:
    try:
        w = parse_word(args.word)
    except (WordSyntaxError, OverflowError) as exc:
        print(f"skein3: {exc}", file=sys.stderr)
        return EXIT_USAGE
    p = trace_nf(w) if args.normal_form else trace_poly(w)
    if args.format == "json":
        print(json.dumps({"word": format_word(w), "normal_form": args.normal_form, "terms": to_terms(p)}))
    else:
        print(format_poly(p))
    return EXIT_OK


def cmd_ideal(args) -> int:
    try:
        with open(args.presentation, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"skein3: cannot read {args.presentation}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    try:
        pres = ideal.parse_presentation(text)
    except (ideal.PresentationError, OverflowError) as exc:
        print(f"skein3: {args.presentation}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    gens = ideal.theorem2_generators(pres)
    rows = gens.labeled()
    if args.normal_form:
        rows = [(label, rem_mod_K(poly)) for label, poly in rows]
    if args.format == "json":
        print(json.dumps([{"label": label, "terms": to_terms(poly)} for label, poly in rows], indent=2))
    else:
        for label, poly in rows:
            print(f"{label}: {format_poly(poly)}")
    return EXIT_OK


def cmd_verify_borromean(args) -> int:
    report = ideal.verify_theorem3()
    sym = ideal.check_symmetries()
    ok = report.ok and sym.ok
    if args.format == "json":
        print(json.dumps({"verification": report.to_dict(), "symmetries": sym.to_dict(), "ok": ok}, indent=2))
    else:
        for r in report.results:
            status = "pass" if r.passed else "FAIL"
            target = "0" if r.zero_target else "Q"
            print(f"{ideal.format_label(r.label)}: {status} (target {target}, quotient terms {len(r.quotient)})")
        for a, b, holds in sym.remark:
            print(f"-s23 {ideal.format_label(a)} == {ideal.format_label(b)}: {'pass' if holds else 'FAIL'}")
        for label, found in sym.self_symmetries.items():
            desc = ", ".join(f"{'-' if s < 0 else '+'}{m}" for m, s in found) or "none"
            print(f"self-symmetry {ideal.format_label(label)}: {desc}")
        print("all passed" if ok else "FAILED: " + ", ".join(map(ideal.format_label, report.failures())))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    report = oracle.fuzz(args.trials, args.max_len, args.seed)
    if args.format == "json":
        print(report.to_json())
    else:
        for f in report.failures:
            print(f"trial {f.trial} seed {f.seed} [{f.check}] {f.word}: expected {f.expected}, got {f.got}")
        print(f"{report.trials} trials, {len(report.failures)} failures, {report.elapsed_ms:.0f} ms")
    return EXIT_OK if report.ok else EXIT_FAIL


COMMANDS = {
    "trace": cmd_trace,
    "ideal": cmd_ideal,
    "verify-borromean": cmd_verify_borromean,
    "oracle": cmd_oracle,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
