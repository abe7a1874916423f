"""
Command-line front end.

    origami run SCRIPT [--trace PATH] [--svg PATH] [--viewport a,b,c,d] [--level NAME]
    origami solve-cubic A B            (mu^3 + A mu + B; or four coefficients)
    origami solve-quartic A B C        (x^4 + A x^2 + B x + C)
    origami trisect C
    origami ngon N
    origami classify thalian A BSQ [--rational-b] | root-of-unity M
                     | totally-real P Q R | degree C_n ... C_0
    origami dual a b c d e f
    origami tangents a b c d e f  a b c d e f

Numbers are exact literals: integers, decimals, p/q, sqrt(e), cbrt(e) and
parenthesized arithmetic. Results go to stdout, diagnostics to stderr.

Exit codes come from config.levels.EXIT_CODES: 0 ok, 2 parse error,
3 evaluation or domain error, 4 failed assertion, 5 precision exhausted,
64 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import NoReturn

from origami_engine.cli.render import render
from origami_engine.config.levels import EXIT_CODES, level_names
from origami_engine.config.settings import get_settings, override_settings, parse_viewport
from origami_engine.conics import Conic, common_tangents, conic_from_coefficients, dual
from origami_engine.errors import (
    ConfigError,
    EvalError,
    OrigamiError,
    PrecisionExhausted,
    SourceError,
)
from origami_engine.exactnum import ExactReal, RealRoot, approx, to_expr_string, to_fraction
from origami_engine.fields import (
    format_factors,
    ngon_constructible,
    origami_degree_check,
    root_of_unity_thalian,
    thalian_classify,
    totally_real_quadratic,
)
from origami_engine.geom import LineAtInfinity
from origami_engine.script import evaluate, evaluate_literal, parse
from origami_engine.solvers import cubic_by_fold, quartic_roots, solve_cubic, trisect
from origami_engine.utils.io import read_text, write_json, write_text
from origami_engine.utils.logging import configure_logging, get_logger

logger = get_logger(__name__)

_NEGATIVE_LITERAL = re.compile(r"^-(\d|\.|\(|sqrt\(|cbrt\()")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to the usage exit code."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_CODES["usage"], f"{self.prog}: error: {message}\n")


def protect_negative_literals(argv: Sequence[str]) -> list[str]:
    """Keep "-1/2" or "-sqrt(2)" from being read as option flags."""
    return [" " + arg if _NEGATIVE_LITERAL.match(arg) else arg for arg in argv]


# -----------------------------
# Literals and output
# -----------------------------
def literal(text: str) -> ExactReal:
    try:
        return evaluate_literal(text)
    except SourceError as exc:
        raise UsageError(f"not an exact literal: {text.strip()!r} ({exc.message})") from exc


def rational(text: str) -> Fraction:
    value = to_fraction(literal(text))
    if value is None:
        raise UsageError(f"expected a rational number, got {text.strip()!r}")
    return value


def integer(text: str) -> int:
    value = rational(text)
    if value.denominator != 1:
        raise UsageError(f"expected an integer, got {text.strip()!r}")
    return value.numerator


def print_roots(roots: list[RealRoot], digits: int) -> None:
    if not roots:
        print("no real roots")
    for root in roots:
        suffix = f"  (multiplicity {root.multiplicity})" if root.multiplicity > 1 else ""
        print(f"root: {to_expr_string(root.value)} {approx(root.value, digits)}{suffix}")


# -----------------------------
# Commands
# -----------------------------
def cmd_run(args: argparse.Namespace) -> int:
    path = Path(args.script)
    if not path.is_file():
        raise UsageError(f"script not found: {path}")
    program = parse(read_text(path))
    result = evaluate(program, level=args.level)
    for assertion in result.assertions:
        print(assertion.describe())
        if not assertion.passed:
            print(f"    lhs: {assertion.lhs}")
            print(f"    rhs: {assertion.rhs}")
    if args.trace:
        write_json(result.trace.to_json(), Path(args.trace))
        logger.info("Trace written to %s", args.trace)
    if args.svg:
        viewport = parse_viewport(args.viewport) if args.viewport else None
        write_text(render(result.env, viewport), Path(args.svg))
        logger.info("Figure written to %s", args.svg)
    failed = len(result.failures)
    print(f"{len(result.assertions)} assertions, {failed} failed ({result.level} level)")
    return EXIT_CODES["assert"] if failed else EXIT_CODES["ok"]


def cmd_solve_cubic(args: argparse.Namespace) -> int:
    values = [literal(v) for v in args.coefficients]
    if len(values) == 2:  # noqa: PLR2004
        roots, trace = cubic_by_fold(*values)
        logger.debug("Fold construction used %d O6 step(s)", trace.count("O6"))
    elif len(values) == 4:  # noqa: PLR2004
        roots = solve_cubic(*values)
    else:
        raise UsageError("solve-cubic takes A B (mu^3 + A mu + B) or four coefficients")
    print_roots(roots, args.digits)
    return EXIT_CODES["ok"]


def cmd_solve_quartic(args: argparse.Namespace) -> int:
    print_roots(quartic_roots(literal(args.a), literal(args.b), literal(args.c)), args.digits)
    return EXIT_CODES["ok"]


def cmd_trisect(args: argparse.Namespace) -> int:
    print_roots(trisect(literal(args.c)), args.digits)
    return EXIT_CODES["ok"]


def cmd_ngon(args: argparse.Namespace) -> int:
    verdict = ngon_constructible(integer(args.n))
    print(verdict)
    print(f"factors: {format_factors(list(verdict.factors))}")
    return EXIT_CODES["ok"]


def cmd_classify(args: argparse.Namespace) -> int:
    values = args.values
    if args.mode == "thalian":
        if len(values) != 2:  # noqa: PLR2004
            raise UsageError("classify thalian takes A BSQ")
        result = thalian_classify(rational(values[0]), rational(values[1]), args.rational_b)
        print("\n".join(result.lines()))
    elif args.mode == "root-of-unity":
        if len(values) != 1:
            raise UsageError("classify root-of-unity takes M")
        verdict = root_of_unity_thalian(integer(values[0]))
        print("Thalian" if verdict else "NonThalian")
    elif args.mode == "totally-real":
        if len(values) != 3:  # noqa: PLR2004
            raise UsageError("classify totally-real takes P Q R")
        result = totally_real_quadratic(*(rational(v) for v in values))
        print("\n".join(result.lines()))
    else:
        if len(values) < 2:  # noqa: PLR2004
            raise UsageError("classify degree takes coefficients C_n ... C_0")
        print("\n".join(origami_degree_check([rational(v) for v in values]).lines()))
    return EXIT_CODES["ok"]


def _conic(values: Sequence[str]) -> Conic:
    return conic_from_coefficients(*(literal(v) for v in values))


def cmd_dual(args: argparse.Namespace) -> int:
    if len(args.coefficients) != 6:  # noqa: PLR2004
        raise UsageError("dual takes six conic coefficients a b c d e f")
    result = dual(_conic(args.coefficients))
    print("dual: (" + ", ".join(to_expr_string(v) for v in result.coefficients()) + ")")
    return EXIT_CODES["ok"]


def cmd_tangents(args: argparse.Namespace) -> int:
    if len(args.coefficients) != 12:  # noqa: PLR2004
        raise UsageError("tangents takes two conics of six coefficients each")
    first = _conic(args.coefficients[:6])
    second = _conic(args.coefficients[6:])
    lines = common_tangents(first, second)
    if not lines:
        print("no common tangents")
    for line in lines:
        if isinstance(line, LineAtInfinity):
            print("tangent: line at infinity")
            continue
        slope = line.slope
        shown = "vertical" if slope is None else f"slope {approx(slope, args.digits)}"
        print(f"tangent: {line}  ({shown})")
    return EXIT_CODES["ok"]


COMMANDS = {
    "run": cmd_run,
    "solve-cubic": cmd_solve_cubic,
    "solve-quartic": cmd_solve_quartic,
    "trisect": cmd_trisect,
    "ngon": cmd_ngon,
    "classify": cmd_classify,
    "dual": cmd_dual,
    "tangents": cmd_tangents,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=None, help="decimal digits for approximations")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    parser = _Parser(prog="origami", description="Exact origami constructions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", parents=[common], help="evaluate a .ori script")
    run.add_argument("script")
    run.add_argument("--trace", help="write the construction trace as JSON")
    run.add_argument("--svg", help="write an SVG figure of the bound objects")
    run.add_argument("--viewport", help="xmin,ymin,xmax,ymax for --svg")
    run.add_argument("--level", choices=level_names(), help="override the script's level")

    cubic = sub.add_parser("solve-cubic", parents=[common], help="real roots of a cubic")
    cubic.add_argument("coefficients", nargs="+")

    quartic = sub.add_parser("solve-quartic", parents=[common], help="real roots of x^4 + a x^2 + b x + c")
    for name in ("a", "b", "c"):
        quartic.add_argument(name)

    tri = sub.add_parser("trisect", parents=[common], help="cos(theta) from cos(3 theta)")
    tri.add_argument("c")

    ngon = sub.add_parser("ngon", parents=[common], help="is the regular n-gon foldable")
    ngon.add_argument("n")

    classify = sub.add_parser("classify", parents=[common], help="number-field classifiers")
    classify.add_argument("mode", choices=["thalian", "root-of-unity", "totally-real", "degree"])
    classify.add_argument("values", nargs="+")
    classify.add_argument("--rational-b", action="store_true", help="b itself is rational")

    dual_cmd = sub.add_parser("dual", parents=[common], help="dual of a conic")
    dual_cmd.add_argument("coefficients", nargs="+")

    tangents = sub.add_parser("tangents", parents=[common], help="common tangents of two conics")
    tangents.add_argument("coefficients", nargs="+")
    return parser


def _exit_code(exc: OrigamiError) -> int:
    if isinstance(exc, SourceError):
        return EXIT_CODES["parse"]
    if isinstance(exc, PrecisionExhausted):
        return EXIT_CODES["precision"]
    if isinstance(exc, EvalError):
        if exc.kind == "PrecisionExhausted":
            return EXIT_CODES["precision"]
        if exc.kind == "AssertFailed":
            return EXIT_CODES["assert"]
    return EXIT_CODES["eval"]


def main(argv: Sequence[str] | None = None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(protect_negative_literals(raw))
    configure_logging("debug" if args.verbose else get_settings().log_level)
    if args.digits is None:
        args.digits = get_settings().digits
    if args.digits <= 0:
        print("origami: error: --digits must be positive", file=sys.stderr)
        return EXIT_CODES["usage"]
    try:
        with override_settings(digits=args.digits):
            return COMMANDS[args.command](args)
    except (UsageError, ConfigError) as exc:
        print(f"origami: error: {exc}", file=sys.stderr)
        return EXIT_CODES["usage"]
    except OrigamiError as exc:
        print(f"origami: {type(exc).__name__}: {exc}", file=sys.stderr)
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
