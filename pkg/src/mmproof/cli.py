"""Command-line entry point: ``mmproof derive | solve | eval | verify``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .document import DocumentError, emit_document, parse_document
from .equations import EvaluationError, derive, eval_system
from .listing import emit_listing
from .pattern import ConcreteMaset, Game
from .solver import expected_questions, solve_concrete
from .suites import SLOW_SUITES, SUITES

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _game(text: str) -> Game:
    try:
        return Game.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _color_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a < 0 or b < a:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mmproof", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="build the pattern queue and the equations")
    p.add_argument("--game", type=_game, required=True, help="mm or ab")
    p.add_argument("--pegs", type=_positive, required=True)
    p.add_argument("--out", type=Path, help="write here instead of stdout")
    p.add_argument("--format", choices=("listing", "doc"), default="listing")

    p = sub.add_parser("solve", help="exact optimum for the full game")
    p.add_argument("--game", type=_game, required=True)
    p.add_argument("--pegs", type=_positive, required=True)
    p.add_argument("--colors", type=_positive, required=True)
    p.add_argument("--no-additional", action="store_true", help="forbid the additional color in questions")

    p = sub.add_parser("eval", help="evaluate the equations of a derivation document")
    p.add_argument("--in", dest="infile", type=Path, required=True)
    p.add_argument("--colors", type=_color_range, required=True, help="A..B")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--slow", action="store_true", help="allow the hours-long suites")
    return parser


def cmd_derive(args: argparse.Namespace) -> int:
    out = derive(args.game, args.pegs)
    data = emit_document(out) if args.format == "doc" else emit_listing(out).encode("utf-8")
    if args.out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        args.out.write_bytes(data)
        print(f"{len(out.queue)} patterns, {len(out.equations)} equations -> {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    maset = ConcreteMaset.full(args.game, args.pegs, args.colors, not args.no_additional)
    if not maset.secrets:
        raise UsageError(f"{args.game.value} with {args.pegs} pegs has no secrets on {args.colors} colors")
    length = solve_concrete(maset)
    print(f"L={length} N={len(maset.secrets)} expected={expected_questions(maset)}")
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        data = args.infile.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {args.infile}: {exc.strerror}") from None
    out = parse_document(data)
    lo, hi = args.colors
    table = eval_system(out, hi)
    print("n " + " ".join(f"A_{{{out.p},{i}}}" for i in range(len(out.queue))))
    for n in range(lo, hi + 1):
        print(f"{n} " + " ".join("-" if v is None else str(v) for v in table[n]))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite in SLOW_SUITES and not args.slow:
        raise UsageError(f"suite {args.suite} takes hours; pass --slow to run it")
    result = SUITES[args.suite]()
    for line in result.lines:
        print(line)
    total = len(result.lines)
    if result.ok:
        print(f"{result.name}: passed {total} checks")
        return EXIT_OK
    print(f"{result.name}: {result.failures} of {total} checks failed")
    return EXIT_FAILED


COMMANDS = {"derive": cmd_derive, "solve": cmd_solve, "eval": cmd_eval, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DocumentError) as exc:
        print(f"mmproof: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EvaluationError as exc:
        print(f"mmproof: evaluation failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
