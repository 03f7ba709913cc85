"""Command-line front end.

Exit codes: 0 when every applicable check holds, 1 when any check fails,
2 on bad input (unreadable or malformed file, invalid flags).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .code import ENUM_MAX
from .codefile import format_code_file, parse_code_file
from .errors import CodeSupportError
from .families import FAMILIES, build_family
from .field import field_new, gf
from .fuzz import FuzzConfig, run_suite
from .report import analyze

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class _InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from exc


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codesupport",
        description="Support distributions and duality identities for small linear codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for a code file")
    p.add_argument("path", help="code file, or - for stdin")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="fmt", action="store_const", const="json")
    mode.add_argument("--text", dest="fmt", action="store_const", const="text")
    p.add_argument("--enum-max", type=_positive, default=ENUM_MAX,
                   help=f"largest code to enumerate (default {ENUM_MAX})")
    p.set_defaults(fmt="text")

    p = sub.add_parser("dual", help="print the dual code's canonical generator")
    p.add_argument("path", help="code file, or - for stdin")

    p = sub.add_parser("families", help="print a generator for a classical code")
    p.add_argument("name", nargs="+", metavar="NAME",
                   help=f"one of {', '.join(FAMILIES)} (optionally preceded by 'generate')")
    p.add_argument("--q", type=int, help="field order (prime power)")
    p.add_argument("--p", type=int, help="field characteristic")
    p.add_argument("--field-degree", type=int, default=1,
                   help="extension degree of the field when --p is given")
    p.add_argument("--m", type=int, help="simplex/Hamming redundancy parameter")
    p.add_argument("--n", type=int, help="repetition code length")

    p = sub.add_parser("fuzz", help="run every identity on seeded random codes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--fields", default="2,3,4", help="comma-separated field orders")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--k-min", type=int, default=0)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--enum-cap", type=_positive, default=1 << 16)
    p.add_argument("--lemma-max", type=_positive, default=1 << 10,
                   help="exhaustive character-sum scan when q^n is at most this")
    p.add_argument("--no-fixtures", action="store_true", help="skip the injected self-dual codes")
    p.add_argument("--json", action="store_true")
    return parser


def cmd_analyze(args) -> int:
    code = parse_code_file(_read(args.path)).code()
    report = analyze(code, args.enum_max)
    sys.stdout.write(report.to_json() + "\n" if args.fmt == "json" else report.to_text())
    return report.exit_code


def cmd_dual(args) -> int:
    code = parse_code_file(_read(args.path)).code()
    d = code.dual
    sys.stdout.write(format_code_file(d, comment=f"dual code [{d.n},{d.k}]"))
    return EXIT_OK


def cmd_families(args) -> int:
    words = list(args.name)
    if words[0] == "generate":
        words = words[1:]
    if len(words) != 1:
        raise _InputError("expected exactly one family name")
    field = None
    if args.q is not None:
        field = gf(args.q)
    elif args.p is not None:
        field = field_new(args.p, args.field_degree)
    code = build_family(words[0], field, m=args.m, n=args.n)
    sys.stdout.write(format_code_file(code, comment=f"{words[0]} [{code.n},{code.k}]"))
    return EXIT_OK


def cmd_fuzz(args) -> int:
    try:
        fields = tuple(gf(int(x)) for x in args.fields.split(",") if x.strip())
    except ValueError as exc:
        raise _InputError(f"bad --fields value {args.fields!r}: {exc}") from exc
    k_max = args.n_max if args.k_max is None else args.k_max
    try:
        cfg = FuzzConfig(
            seed=args.seed,
            trials=args.trials,
            fields=fields,
            n_range=(args.n_min, args.n_max),
            k_range=(args.k_min, k_max),
            enum_cap=args.enum_cap,
            lemma_max=args.lemma_max,
            inject_fixtures=not args.no_fixtures,
        )
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    report = run_suite(cfg)
    sys.stdout.write(report.to_json() + "\n" if args.json else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


COMMANDS = {"analyze": cmd_analyze, "dual": cmd_dual, "families": cmd_families, "fuzz": cmd_fuzz}


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` and dispatch; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except (_InputError, CodeSupportError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
