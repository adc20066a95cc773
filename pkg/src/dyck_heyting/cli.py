"""Command-line interface: ``dyck-heyting <command> ...``.

Exit status is 0 on success, 1 for invalid input and 2 when a verification
sweep finds a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import heyting as H
from .export import export_document, to_dot
from .lattice import enumerate_family, family_tag, join, make_path, meet
from .oracle import ALL_CHECKS, normalize_checks, verify_range
from .paths import (
    DomainError,
    ValidationError,
    format_seq,
    heights_to_word_a,
    heights_to_word_b,
    parse_seq,
    word_to_heights_a,
    word_to_heights_b,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _family(text: str) -> str:
    try:
        return family_tag(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dyck_family(text: str) -> str:
    fam = _family(text)
    if fam == "mono":
        raise argparse.ArgumentTypeError("this command takes family a or b")
    return fam


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dyck-heyting", description="Heyting algebras of Dyck and monotone lattice paths.")
    sub = parser.add_subparsers(dest="command", required=True)

    def sized(p, family_type=_family):
        p.add_argument("--family", type=family_type, required=True)
        p.add_argument("--n", type=_positive, required=True)
        if family_type is _family:
            p.add_argument("--m", type=_nonnegative)

    p = sub.add_parser("enumerate", help="list every path of a lattice")
    sized(p)
    p.add_argument("--format", choices=("count", "list", "json", "dot"), default="count")

    p = sub.add_parser("op", help="meet, join or relative pseudocomplement of two paths")
    sized(p)
    p.add_argument("--which", choices=("meet", "join", "impl"), required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)

    p = sub.add_parser("pseudo", help="pseudocomplement of a path")
    sized(p)
    p.add_argument("--path", required=True)

    p = sub.add_parser("regular", help="regular elements of a Dyck lattice")
    sized(p, _dyck_family)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--count", action="store_true")

    p = sub.add_parser("convert", help="convert between step words and height sequences")
    sized(p, _dyck_family)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--word")
    src.add_argument("--heights")

    p = sub.add_parser("verify", help="exhaustive cross-checks for n = 1..max-n")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--m", type=_nonnegative, help="grid height for mono (default: m = n)")
    p.add_argument("--checks", default="all", help=f"comma list from: {', '.join(ALL_CHECKS)}")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _needs_m(args) -> int | None:
    if args.family == "mono":
        if args.m is None:
            raise ValidationError("family mono needs --m")
        return args.m
    if args.m is not None:
        raise ValidationError(f"--m applies only to family mono, not {args.family}")
    return None


def _path(args, text: str):
    return make_path(args.family, parse_seq(text), n=args.n, m=_needs_m(args))


def _cmd_enumerate(args) -> str:
    snap = enumerate_family(args.family, args.n, _needs_m(args))
    if args.format == "count":
        return f"{len(snap)}\n"
    if args.format == "list":
        return "".join(f"{p}\n" for p in snap)
    if args.format == "json":
        return export_document(snap).to_json()
    return to_dot(snap)


def _cmd_op(args) -> str:
    lhs, rhs = _path(args, args.lhs), _path(args, args.rhs)
    fn = {"meet": meet, "join": join, "impl": H.impl}[args.which]
    return f"{fn(lhs, rhs)}\n"


def _cmd_pseudo(args) -> str:
    return f"{H.pseudo(_path(args, args.path))}\n"


def _cmd_regular(args) -> str:
    elems = H.regulars(args.family, args.n)
    if args.count:
        return f"{len(elems)}\n"
    return "".join(f"{p}\n" for p in sorted(elems, key=lambda p: (-len(p.h), p.h)))


def _cmd_convert(args) -> str:
    if args.word is not None:
        p = word_to_heights_a(args.word) if args.family == "A" else word_to_heights_b(args.word)
        if p.n != args.n:
            raise ValidationError(f"word has semilength {p.n}, expected n={args.n}")
        return f"{format_seq(p.h)}\n"
    p = make_path(args.family, parse_seq(args.heights), n=args.n)
    w = heights_to_word_a(p) if args.family == "A" else heights_to_word_b(p)
    return f"{w}\n"


def _cmd_verify(args) -> tuple[str, bool]:
    checks = normalize_checks([c.strip() for c in args.checks.split(",") if c.strip()] or None)
    if args.family == "mono":
        sizes = [(n, n if args.m is None else args.m) for n in range(1, args.max_n + 1)]
    else:
        if args.m is not None:
            raise ValidationError(f"--m applies only to family mono, not {args.family}")
        sizes = [(n,) for n in range(1, args.max_n + 1)]
    reports = verify_range(args.family, sizes, checks, parallel=args.parallel)
    ok = all(r.ok for r in reports)
    if args.format == "json":
        doc = {"format": "dyck-heyting/1", "ok": ok, "reports": [r.to_dict() for r in reports]}
        return json.dumps(doc, indent=2) + "\n", ok
    return "".join(r.to_text() + "\n" for r in reports), ok


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            text, ok = _cmd_verify(args)
            stdout.write(text)
            return 0 if ok else 2
        handler = {
            "enumerate": _cmd_enumerate,
            "op": _cmd_op,
            "pseudo": _cmd_pseudo,
            "regular": _cmd_regular,
            "convert": _cmd_convert,
        }[args.command]
        stdout.write(handler(args))
        return 0
    except (UsageError, ValidationError, DomainError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
