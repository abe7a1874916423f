"""
Cubics by the two-parabola fold.

The common tangents of y = x^2/2 and (y - a/2)^2 = 2bx have slopes mu with
mu^3 + a*mu + b = 0, so one O6 fold per real root solves the depressed
cubic. Trisection, cube duplication and the regular-polygon cosines are
instances of it.
"""

from __future__ import annotations

from fractions import Fraction

from origami_engine.errors import OutOfRange
from origami_engine.exactnum import (
    ExactReal,
    Number,
    RealRoot,
    add,
    compare,
    const,
    cubic_roots,
    div,
    equals,
    mul,
    neg,
    polynomial_roots,
    sign,
    sub,
)
from origami_engine.folds import FoldEngine, Trace
from origami_engine.geom import Line, Point
from origami_engine.solvers.polynomial import multiplicity
from origami_engine.solvers.square import sqrt_by_fold
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)


def _fold_parabolas(engine: FoldEngine, a: ExactReal, b: ExactReal) -> tuple:
    p1 = engine.given_point(Point.of(0, Fraction(1, 2)), "F1")
    l1 = engine.given_line(Line.from_coefficients(0, 1, Fraction(1, 2)), "d1")
    p2 = engine.given_point(Point(div(b, 2), div(a, 2)), "F2")
    l2 = engine.given_line(Line.from_coefficients(1, 0, div(b, 2)), "d2")
    return p1, l1, p2, l2


def _canonical(slope: ExactReal, algebraic: list[RealRoot]) -> ExactReal:
    for root in algebraic:
        if equals(slope, root.value):
            return root.value
    return slope


def cubic_by_fold(
    a: Number, b: Number, engine: FoldEngine | None = None
) -> tuple[list[RealRoot], Trace]:
    """
    Real roots of mu^3 + a*mu + b, ascending, as slopes of O6 folds.

    Each fold slope is checked against the algebraic root it equals, and the
    algebraic form is returned for readable output. For b = 0 the cubic
    factors as mu*(mu^2 + a) and no fold is needed.
    """
    a, b = const(a), const(b)
    engine = engine or FoldEngine()
    coeffs = [1, 0, a, b]
    if sign(b) == 0:
        roots = polynomial_roots(coeffs)
        logger.debug("cubic_by_fold: b = 0, factored into %d roots", len(roots))
        return roots, engine.trace

    result = engine.o6(*_fold_parabolas(engine, a, b))
    algebraic = cubic_roots(a, b)
    roots = []
    for fold in result.lines:
        slope = fold.slope
        if slope is None:
            continue
        value = _canonical(slope, algebraic)
        roots.append(RealRoot(value, multiplicity(coeffs, value)))
    logger.debug("cubic_by_fold: %d fold slopes", len(roots))
    return roots, engine.trace


def solve_cubic(c3: Number, c2: Number, c1: Number, c0: Number) -> list[RealRoot]:
    """Real roots of c3 t^3 + c2 t^2 + c1 t + c0 through the shift t = mu - c2/(3 c3)."""
    c3, c2, c1, c0 = (const(c) for c in (c3, c2, c1, c0))
    if sign(c3) == 0:
        return polynomial_roots([c2, c1, c0])
    a2, a1, a0 = div(c2, c3), div(c1, c3), div(c0, c3)
    shift = div(a2, 3)
    p = sub(a1, div(mul(a2, a2), 3))
    q = add(sub(div(mul(2, mul(a2, mul(a2, a2))), 27), div(mul(a2, a1), 3)), a0)
    roots, _ = cubic_by_fold(p, q)
    return [RealRoot(sub(r.value, shift), r.multiplicity) for r in roots]


def trisect(c: Number) -> list[RealRoot]:
    """cos(theta) for every theta with cos(3 theta) = c: roots of 4x^3 - 3x - c."""
    c = const(c)
    if compare(c, -1) < 0 or compare(c, 1) > 0:
        raise OutOfRange(f"cos(3 theta) must lie in [-1, 1], got {c}")
    roots, _ = cubic_by_fold(Fraction(-3, 4), neg(div(c, 4)))
    return roots


def duplicate_cube() -> ExactReal:
    """The edge of a cube of volume 2."""
    roots, _ = cubic_by_fold(0, -2)
    return roots[0].value


def ninegon_cos() -> ExactReal:
    """cos(2 pi / 9), the largest root of 4x^3 - 3x + 1/2."""
    return trisect(Fraction(-1, 2))[-1].value


POLYGON_MINPOLYS: dict[int, tuple[int, ...]] = {
    3: (2, 1),
    4: (1, 0),
    5: (4, 2, -1),
    6: (2, -1),
    7: (8, 4, -4, -1),
    8: (2, 0, -1),
    9: (8, 0, -6, 1),
    12: (4, 0, -3),
}


def polygon_cosine(n: int) -> tuple[ExactReal, tuple[int, ...]]:
    """cos(2 pi / n) and its minimal polynomial (integer coefficients, highest first)."""
    if n not in POLYGON_MINPOLYS:
        raise OutOfRange(f"no construction for n = {n}; choose from {sorted(POLYGON_MINPOLYS)}")
    minpoly = POLYGON_MINPOLYS[n]
    if n == 3:  # noqa: PLR2004
        value = const(Fraction(-1, 2))
    elif n == 4:  # noqa: PLR2004
        value = const(0)
    elif n == 5:  # noqa: PLR2004
        value = div(sub(sqrt_by_fold(5)[0], 1), 4)
    elif n == 6:  # noqa: PLR2004
        value = const(Fraction(1, 2))
    elif n == 7:  # noqa: PLR2004
        value = solve_cubic(*minpoly)[-1].value
    elif n == 8:  # noqa: PLR2004
        value = div(sqrt_by_fold(2)[0], 2)
    elif n == 9:  # noqa: PLR2004
        value = ninegon_cos()
    else:
        value = div(sqrt_by_fold(3)[0], 2)
    return value, minpoly
