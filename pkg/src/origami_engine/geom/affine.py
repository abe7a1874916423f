"""
Exact affine points and lines.

Lines are stored implicitly as a*x + b*y + c = 0, normalized so the first
nonzero coefficient among (a, b) is 1. Two constructions of the same locus
therefore carry field-equal coefficients.

Squared distance is the primitive metric; distance() takes a square root only
when a length is asked for.
"""

from __future__ import annotations

from dataclasses import dataclass

from origami_engine.errors import CoincidentLines, CoincidentPoints, DegenerateLine, ParallelLines
from origami_engine.exactnum import (
    ONE,
    ZERO,
    ExactReal,
    Number,
    add,
    const,
    div,
    equals,
    mul,
    neg,
    sign,
    sqrt,
    sub,
)


@dataclass(frozen=True, eq=False)
class Point:
    x: ExactReal
    y: ExactReal

    @classmethod
    def of(cls, x: Number, y: Number) -> Point:
        return cls(const(x), const(y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True, eq=False)
class Line:
    a: ExactReal
    b: ExactReal
    c: ExactReal

    @classmethod
    def from_coefficients(cls, a: Number, b: Number, c: Number) -> Line:
        """Normalized line a*x + b*y + c = 0."""
        a, b, c = const(a), const(b), const(c)
        if sign(a) != 0:
            return cls(ONE, div(b, a), div(c, a))
        if sign(b) != 0:
            return cls(ZERO, ONE, div(c, b))
        raise DegenerateLine("a line needs (a, b) != (0, 0)")

    @property
    def is_vertical(self) -> bool:
        return sign(self.b) == 0

    @property
    def slope(self) -> ExactReal | None:
        """dy/dx, or None for a vertical line."""
        if self.is_vertical:
            return None
        return neg(div(self.a, self.b))

    def direction(self) -> tuple[ExactReal, ExactReal]:
        return (neg(self.b), self.a)

    def value_at(self, p: Point) -> ExactReal:
        return add(add(mul(self.a, p.x), mul(self.b, p.y)), self.c)

    def __str__(self) -> str:
        return f"<{self.a}, {self.b}, {self.c}>"


def _norm2(a: ExactReal, b: ExactReal) -> ExactReal:
    return add(mul(a, a), mul(b, b))


# -----------------------------
# Predicates
# -----------------------------
def same_point(p: Point, q: Point) -> bool:
    return p is q or (equals(p.x, q.x) and equals(p.y, q.y))


def same_line(l: Line, m: Line) -> bool:
    return l is m or (equals(l.a, m.a) and equals(l.b, m.b) and equals(l.c, m.c))


def incident(p: Point, l: Line) -> bool:
    return sign(l.value_at(p)) == 0


def is_parallel(l: Line, m: Line) -> bool:
    return sign(sub(mul(l.a, m.b), mul(m.a, l.b))) == 0


def is_perpendicular(l: Line, m: Line) -> bool:
    return sign(add(mul(l.a, m.a), mul(l.b, m.b))) == 0


# -----------------------------
# Metric
# -----------------------------
def squared_distance(p: Point, q: Point) -> ExactReal:
    dx = sub(q.x, p.x)
    dy = sub(q.y, p.y)
    return _norm2(dx, dy)


def distance(p: Point, q: Point) -> ExactReal:
    return sqrt(squared_distance(p, q))


def point_line_distance2(p: Point, l: Line) -> ExactReal:
    value = l.value_at(p)
    return div(mul(value, value), _norm2(l.a, l.b))


# -----------------------------
# Constructions
# -----------------------------
def line_through(p: Point, q: Point) -> Line:
    if same_point(p, q):
        raise CoincidentPoints(f"no unique line through {p} and {q}")
    a = sub(p.y, q.y)
    b = sub(q.x, p.x)
    c = sub(mul(p.x, q.y), mul(q.x, p.y))
    return Line.from_coefficients(a, b, c)


def intersect(l: Line, m: Line) -> Point:
    det = sub(mul(l.a, m.b), mul(m.a, l.b))
    if sign(det) == 0:
        if same_line(l, m):
            raise CoincidentLines(f"{l} and {m} are the same line")
        raise ParallelLines(f"{l} and {m} are parallel")
    x = div(sub(mul(l.b, m.c), mul(m.b, l.c)), det)
    y = div(sub(mul(l.c, m.a), mul(m.c, l.a)), det)
    return Point(x, y)


def perp_bisector(p: Point, q: Point) -> Line:
    if same_point(p, q):
        raise CoincidentPoints(f"{p} and {q} have no perpendicular bisector")
    a = sub(q.x, p.x)
    b = sub(q.y, p.y)
    c = neg(div(sub(_norm2(q.x, q.y), _norm2(p.x, p.y)), 2))
    return Line.from_coefficients(a, b, c)


def reflect_point(p: Point, l: Line) -> Point:
    d = div(l.value_at(p), _norm2(l.a, l.b))
    twice = mul(2, d)
    return Point(sub(p.x, mul(twice, l.a)), sub(p.y, mul(twice, l.b)))


def perpendicular_through(p: Point, l: Line) -> Line:
    return Line.from_coefficients(l.b, neg(l.a), sub(mul(l.a, p.y), mul(l.b, p.x)))


def parallel_through(p: Point, l: Line) -> Line:
    return Line.from_coefficients(l.a, l.b, neg(add(mul(l.a, p.x), mul(l.b, p.y))))


def midpoint(p: Point, q: Point) -> Point:
    return Point(div(add(p.x, q.x), 2), div(add(p.y, q.y), 2))


def foot(p: Point, l: Line) -> Point:
    """Orthogonal projection of p onto l."""
    d = div(l.value_at(p), _norm2(l.a, l.b))
    return Point(sub(p.x, mul(d, l.a)), sub(p.y, mul(d, l.b)))


def points_on(l: Line) -> tuple[Point, Point]:
    """Two distinct points of l."""
    if l.is_vertical:
        x = neg(div(l.c, l.a))
        return (Point(x, ZERO), Point(x, ONE))
    return (
        Point(ZERO, neg(div(l.c, l.b))),
        Point(ONE, neg(div(add(l.a, l.c), l.b))),
    )


def reflect_line(l: Line, f: Line) -> Line:
    """Image of l under the reflection across f."""
    p, q = points_on(l)
    return line_through(reflect_point(p, f), reflect_point(q, f))
