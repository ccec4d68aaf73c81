"""Command-line front end.

Exit status: 0 success, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import invariant as inv
from .config import get_bounds
from .oracle import OracleLimitError, cabled_bracket
from .singular import (
    WordParseError,
    check_crossing_expansion_color2,
    check_inner_projectors,
    check_relations,
    check_vertex_conjugation,
    check_vertex_crossing,
    parse_word,
)
from .tl_diagram import BoundError
from .tl_element import jones_wenzl

OK, CHECK_FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _even_color(text: str) -> int:
    try:
        c = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"color must be an integer, got {text!r}")
    if c < 2 or c % 2:
        raise argparse.ArgumentTypeError(f"color must be even and at least 2, got {c}")
    return c


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _read_word(arg: str):
    text = sys.stdin.read() if arg == "-" else arg
    return parse_word(text)


def _emit(fmt: str, text_lines, payload) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def _cmd_eval(args) -> int:
    word = _read_word(args.word)
    result = inv.evaluate(word, args.color)
    if args.framing == "zero":
        result = inv.framing_correct(result)
    lines = [str(result.value)] + [f"warning: {w}" for w in result.warnings]
    payload = {"word": word.to_json(), **result.to_json()}
    _emit(args.format, lines, payload)
    return OK


def _cmd_jw(args) -> int:
    f = jones_wenzl(args.n)
    _emit(args.format, [str(f)], {"n": args.n, "projector": f.to_json()})
    return OK


def _cmd_relations(args) -> int:
    report = check_relations(args.strands, args.color)
    lines = report.lines() + [f"{'all relations hold' if report.passed else 'some relations FAIL'}"]
    _emit(args.format, lines, report.to_json())
    return OK if report.passed else CHECK_FAILED


_FORMS = {
    "ex1": inv.closed_form_example1,
    "ex1-trace": inv.closed_form_twist_vertex,
    "ex2": inv.closed_form_example2,
}
_FORM_WORDS = {"ex1": "strands=2 t1 s1", "ex1-trace": "strands=2 t1 s1", "ex2": "strands=2 t1 s1 s1"}


def _cmd_closed_form(args) -> int:
    value = _FORMS[args.example](args.n)
    payload = {"example": args.example, "n": args.n, "value": value.to_json(), "text": str(value)}
    lines = [str(value)]
    status = OK
    if args.check:
        word = parse_word(_FORM_WORDS[args.example])
        got = inv.evaluate(word, 2 * args.n).value
        agree = got == value
        payload["evaluated"] = got.to_json()
        payload["agrees"] = agree
        lines.append(f"{'PASS' if agree else 'FAIL'}  matches evaluate({str(word)!r}, color {2 * args.n})")
        status = OK if agree else CHECK_FAILED
    _emit(args.format, lines, payload)
    return status


def _cmd_integrality(args) -> int:
    report = inv.integrality_check(_read_word(args.word), args.color)
    lines = [
        f"vertices: {report.singular_count}",
        f"raw:      {report.raw}",
        f"scaled:   {report.scaled}",
        f"integral: {'yes' if report.integral else 'no'} ({report.status})",
    ]
    _emit(args.format, lines, report.to_json())
    # a failure at a conjectural instance is evidence, not an error
    return CHECK_FAILED if (not report.integral and report.status == "theorem") else OK


def _cmd_identities(args) -> int:
    n = args.n
    checks = []
    if n == 1:
        checks.append(check_crossing_expansion_color2())
    checks += check_vertex_crossing(n)
    checks += check_vertex_conjugation(n)
    checks.append(check_inner_projectors(n))
    checks += inv.c_expansion_check(n)
    checks += inv.curl_check(2 * n)
    passed = all(c.passed for c in checks)
    _emit(
        args.format,
        [c.line() for c in checks],
        {"n": n, "passed": passed, "checks": [c.to_json() for c in checks]},
    )
    return OK if passed else CHECK_FAILED


def _cmd_oracle(args) -> int:
    word = _read_word(args.word)
    if not word.is_classical():
        raise UsageError("the oracle accepts classical words only (no t letters)")
    res = cabled_bracket(word, args.color)
    payload = {"word": word.to_json(), "color": args.color, **res.to_json()}
    lines = [f"blackboard:  {res.blackboard}", f"zero-framed: {res.zero_framed}"]
    status = OK
    if args.compare:
        got = inv.evaluate(word, args.color).value
        agree = got == res.blackboard
        payload["agrees_with_evaluate"] = agree
        lines.append(f"{'PASS' if agree else 'FAIL'}  blackboard value matches evaluate")
        status = OK if agree else CHECK_FAILED
    _emit(args.format, lines, payload)
    return status


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(
        prog="singular-jones",
        description="Colored Kauffman bracket invariants of closed singular braids.",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    e = sub.add_parser("eval", parents=[fmt], help="evaluate the invariant of a word")
    e.add_argument("word", help="word such as 'strands=2 t1 s1', or - for stdin")
    e.add_argument("--color", type=_even_color, default=2)
    e.add_argument("--framing", choices=("blackboard", "zero"), default="blackboard")
    e.set_defaults(run=_cmd_eval)

    j = sub.add_parser("jw", parents=[fmt], help="print a Jones-Wenzl projector")
    j.add_argument("n", type=_positive)
    j.set_defaults(run=_cmd_jw)

    r = sub.add_parser("relations", parents=[fmt], help="check the singular braid relations")
    r.add_argument("--strands", type=_positive, required=True)
    r.add_argument("--color", type=_even_color, default=2)
    r.set_defaults(run=_cmd_relations)

    c = sub.add_parser("closed-form", parents=[fmt], help="closed-form example values")
    c.add_argument("example", choices=sorted(_FORMS))
    c.add_argument("--n", type=_positive, required=True)
    c.add_argument("--check", action="store_true", help="compare with a direct evaluation")
    c.set_defaults(run=_cmd_closed_form)

    i = sub.add_parser("integrality", parents=[fmt], help="scaled integrality test")
    i.add_argument("word")
    i.add_argument("--color", type=_even_color, default=2)
    i.set_defaults(run=_cmd_integrality)

    d = sub.add_parser("identities", parents=[fmt], help="local skein identities at half-color n")
    d.add_argument("--n", type=_positive, required=True)
    d.set_defaults(run=_cmd_identities)

    o = sub.add_parser("oracle", parents=[fmt], help="brute-force cabled bracket")
    o.add_argument("word")
    o.add_argument("--color", type=_even_color, default=2)
    o.add_argument("--compare", action="store_true", help="also run evaluate and compare")
    o.set_defaults(run=_cmd_oracle)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        get_bounds()
        return args.run(args)
    except (WordParseError, BoundError, OracleLimitError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
