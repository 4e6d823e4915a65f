"""Command-line front end.

Usage::

    rittsolve solve "z^2" "z^3 + z"
    rittsolve cheb 6
    rittsolve divide "z^6 + 1" "z^3" --format text

Reports are JSON by default (``cheb`` defaults to text). Exit codes: 0 when a
witness was produced, 2 for a well-formed "no solution" outcome, 1 for usage,
parse or internal errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable

from ..decomp import full_decompose, left_divide, max_common_right_factor
from ..errors import NotARelation, NotComposable, ParseError, RittError
from ..hfactor import factor_through, lemma_factor, relation_from_rational
from ..poly import Polynomial, RationalFunction, chebyshev, compose, compose_rational, format_scalar
from ..ritt import existence_oracle, solve
from .parser import parse_poly, parse_rational

EXIT_OK, EXIT_ERROR, EXIT_NONE = 0, 1, 2

VERBS = ("solve", "divide", "decompose", "crf", "cheb", "verify", "factor-h", "lemma-h", "rational-relation", "oracle")


class UsageError(Exception):
    pass


@dataclass
class Command:
    verb: str
    args: argparse.Namespace
    format: str = "json"


@dataclass
class Report:
    payload: dict
    exit_code: int = EXIT_OK
    text: str | None = None

    def render(self, fmt: str, indent: int | None = 2) -> str:
        if fmt == "json":
            return json.dumps(self.payload, indent=indent)
        if self.text is not None:
            return self.text
        lines = []
        for key, value in self.payload.items():
            if isinstance(value, list):
                value = ", ".join(map(str, value))
            elif isinstance(value, bool):
                value = "true" if value else "false"
            elif isinstance(value, dict):
                value = json.dumps(value)
            lines.append(f"{key}: {value}")
        return "\n".join(lines)


def _no_solution(case: str = "NoSolution", **extra) -> Report:
    return Report({"case": case, **extra}, EXIT_NONE)


def _cmd_solve(ns) -> Report:
    A, B = parse_poly(ns.A), parse_poly(ns.B)
    res = solve(A, B)
    payload = {"case": res.tag.value}
    if res.solvable:
        payload.update(C=str(res.C), D=str(res.D))
    payload["W"] = str(res.W)
    payload.update(a=res.a, b=res.b, w=res.w, d1=res.d1, d2=res.d2)
    if res.c is not None:
        payload.update(c=res.c, R=str(res.R))
    if not res.solvable:
        return Report(payload, EXIT_NONE)
    payload["verified"] = compose(res.C, A) == compose(res.D, B)
    return Report(payload)


def _cmd_divide(ns) -> Report:
    F, G = parse_poly(ns.F), parse_poly(ns.G)
    try:
        H = left_divide(F, G)
    except NotComposable:
        return _no_solution("NotComposable")
    return Report({"H": str(H), "verified": compose(H, G) == F})


def _cmd_decompose(ns) -> Report:
    F = parse_poly(ns.F)
    chain = full_decompose(F)
    return Report(
        {
            "factors": [str(p) for p in chain.factors],
            "degrees": list(chain.degrees),
            "verified": chain.compose() == F,
        }
    )


def _cmd_crf(ns) -> Report:
    A, B = parse_poly(ns.A), parse_poly(ns.B)
    res = max_common_right_factor(A, B)
    ok = compose(res.A_tilde, res.W) == A and compose(res.B_tilde, res.W) == B
    return Report(
        {
            "W": str(res.W),
            "A_tilde": str(res.A_tilde),
            "B_tilde": str(res.B_tilde),
            "w": res.W.degree,
            "verified": ok,
        }
    )


def _cmd_cheb(ns) -> Report:
    n = ns.n
    T = chebyshev(n)
    # T_n((z^2 + 1)/(2z)) = (z^(2n) + 1)/(2 z^n), independent of the recurrence
    joukowski = RationalFunction(Polynomial((1, 0, 1)), Polynomial((0, 2)))
    expected = RationalFunction(Polynomial.monomial(2 * n) + 1, Polynomial.monomial(n, 2))
    ok = compose_rational(RationalFunction(T), joukowski) == expected
    return Report({"T": str(T), "n": n, "verified": ok}, text=str(T))


def _cmd_verify(ns) -> Report:
    C, A, D, B = (parse_poly(x) for x in (ns.C, ns.A, ns.D, ns.B))
    ok = compose(C, A) == compose(D, B)
    return Report({"verified": ok}, EXIT_OK if ok else EXIT_NONE)


def _cmd_factor_h(ns) -> Report:
    F, G, C, D = (parse_poly(x) for x in (ns.F, ns.G, ns.C, ns.D))
    try:
        H = factor_through(F, G, C, D)
    except NotComposable:
        return _no_solution("NotComposable")
    return Report({"H": str(H), "verified": compose(H, C) == F and compose(H, D) == G})


def _cmd_lemma_h(ns) -> Report:
    U, V = parse_poly(ns.U), parse_poly(ns.V)
    R = parse_poly(ns.R) if ns.R is not None else None
    try:
        H = lemma_factor(ns.case, ns.d1, ns.d2, U, V, R=R, c=ns.c)
    except NotComposable:
        return _no_solution("NotComposable")
    if ns.case == "power":
        outer = Polynomial.monomial(ns.c) * R**ns.d1
        inner = Polynomial.monomial(ns.d1)
    else:
        outer, inner = chebyshev(ns.d2), chebyshev(ns.d1)
    payload = {"H": str(H), "d1": ns.d1, "d2": ns.d2}
    if R is not None:
        payload.update(c=ns.c, R=str(R))
    payload["verified"] = compose(H, outer) == U and compose(H, inner) == V
    return Report(payload)


def _cmd_rational_relation(ns) -> Report:
    F, G = parse_rational(ns.F), parse_rational(ns.G)
    A, B = parse_poly(ns.A), parse_poly(ns.B)
    try:
        rel = relation_from_rational(F, G, A, B)
    except NotARelation:
        return _no_solution("NotARelation")
    return Report(
        {
            "C": str(rel.C),
            "D": str(rel.D),
            "scale": format_scalar(rel.scale),
            "verified": compose(rel.C, A) == compose(rel.D, B),
        }
    )


def _cmd_oracle(ns) -> Report:
    A, B = parse_poly(ns.A), parse_poly(ns.B)
    found = existence_oracle(A, B, ns.nC, ns.nD)
    if found is None:
        return _no_solution()
    C, D = found
    return Report({"C": str(C), "D": str(D), "verified": compose(C, A) == compose(D, B)})


_HANDLERS: dict[str, Callable[[argparse.Namespace], Report]] = {
    "solve": _cmd_solve,
    "divide": _cmd_divide,
    "decompose": _cmd_decompose,
    "crf": _cmd_crf,
    "cheb": _cmd_cheb,
    "verify": _cmd_verify,
    "factor-h": _cmd_factor_h,
    "lemma-h": _cmd_lemma_h,
    "rational-relation": _cmd_rational_relation,
    "oracle": _cmd_oracle,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=None, help="report format")
    common.add_argument("--indent", type=int, default=2, help="JSON indent (0 for compact)")

    parser = _Parser(prog="rittsolve", description="Exact solver for C(A(z)) = D(B(z)).")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="solve C o A = D o B")
    p.add_argument("A")
    p.add_argument("B")

    p = sub.add_parser("divide", parents=[common], help="H with F = H o G")
    p.add_argument("F")
    p.add_argument("G")

    p = sub.add_parser("decompose", parents=[common], help="chain of indecomposables")
    p.add_argument("F")

    p = sub.add_parser("crf", parents=[common], help="maximal common right factor")
    p.add_argument("A")
    p.add_argument("B")

    p = sub.add_parser("cheb", parents=[common], help="Chebyshev polynomial T_n")
    p.add_argument("n", type=_nonneg)

    p = sub.add_parser("verify", parents=[common], help="check C o A = D o B")
    for name in ("C", "A", "D", "B"):
        p.add_argument(name)

    p = sub.add_parser("factor-h", parents=[common], help="H with F = H o C, G = H o D")
    for name in ("F", "G", "C", "D"):
        p.add_argument(name)

    p = sub.add_parser("lemma-h", parents=[common], help="H for the power/Chebyshev identities")
    p.add_argument("--case", choices=("power", "chebyshev"), required=True)
    p.add_argument("--d1", type=_positive, required=True)
    p.add_argument("--d2", type=_positive, required=True)
    p.add_argument("--c", type=_nonneg, default=None)
    p.add_argument("--R", default=None)
    p.add_argument("U")
    p.add_argument("V")

    p = sub.add_parser("rational-relation", parents=[common], help="polynomial relation from F o A = G o B")
    for name in ("F", "G", "A", "B"):
        p.add_argument(name)

    p = sub.add_parser("oracle", parents=[common], help="linear-algebra existence check")
    p.add_argument("A")
    p.add_argument("B")
    p.add_argument("nC", type=_positive)
    p.add_argument("nD", type=_positive)
    return parser


def _default_format(verb: str) -> str:
    return "text" if verb == "cheb" else "json"


def parse_command(argv: list[str]) -> Command:
    ns = build_parser().parse_args(argv)
    return Command(ns.verb, ns, ns.format or _default_format(ns.verb))


def run(command: Command) -> Report:
    """Execute ``command``; domain failures come back as error reports."""
    try:
        return _HANDLERS[command.verb](command.args)
    except ParseError as exc:
        return _error_report("ParseError", str(exc), position=exc.position, expected=list(exc.expected), source=exc.source)
    except (RittError, ValueError, ZeroDivisionError) as exc:
        return _error_report(type(exc).__name__, str(exc))


def _error_report(kind: str, message: str, **extra) -> Report:
    return Report({"error": {"kind": kind, "message": message, **extra}}, EXIT_ERROR, text=f"error: {kind}: {message}")


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        command = parse_command(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report = run(command)
    indent = None if command.args.indent <= 0 else command.args.indent
    stream = sys.stderr if report.exit_code == EXIT_ERROR and command.format == "text" else sys.stdout
    print(report.render(command.format, indent), file=stream)
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
