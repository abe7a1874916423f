"""
Homogeneous coordinates and point/line duality.

A ProjPoint (x, y, z) is defined up to nonzero scale. Duality exchanges the
line a*x + b*y + c*z = 0 with the point (a, b, c); the point (0, 0, 1)
corresponds to the line at infinity z = 0, which has no affine form and is
represented by the LINE_AT_INFINITY marker.
"""

from __future__ import annotations

from dataclasses import dataclass

from origami_engine.errors import GeometryError, PointAtInfinity
from origami_engine.exactnum import (
    ONE,
    ExactReal,
    Number,
    const,
    div,
    first_nonzero,
    mul,
    provably_nonzero,
    sign,
    sub,
)
from origami_engine.geom.affine import Line, Point


@dataclass(frozen=True, eq=False)
class ProjPoint:
    x: ExactReal
    y: ExactReal
    z: ExactReal

    def __post_init__(self) -> None:
        if first_nonzero(self.coordinates()) is None:
            raise GeometryError("(0, 0, 0) is not a projective point")

    @classmethod
    def of(cls, x: Number, y: Number, z: Number) -> ProjPoint:
        return cls(const(x), const(y), const(z))

    @property
    def at_infinity(self) -> bool:
        return sign(self.z) == 0

    def coordinates(self) -> tuple[ExactReal, ExactReal, ExactReal]:
        return (self.x, self.y, self.z)

    def __str__(self) -> str:
        return f"({self.x} : {self.y} : {self.z})"


class LineAtInfinity:
    """The projective line z = 0."""

    _instance: LineAtInfinity | None = None

    def __new__(cls) -> LineAtInfinity:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "LINE_AT_INFINITY"

    def __str__(self) -> str:
        return "line at infinity"


LINE_AT_INFINITY = LineAtInfinity()


def embed(p: Point) -> ProjPoint:
    return ProjPoint(p.x, p.y, ONE)


def to_affine(p: ProjPoint) -> Point:
    if p.at_infinity:
        raise PointAtInfinity(f"{p} has no affine coordinates")
    return Point(div(p.x, p.z), div(p.y, p.z))


def same_projective_point(p: ProjPoint, q: ProjPoint) -> bool:
    crosses = (
        sub(mul(p.x, q.y), mul(q.x, p.y)),
        sub(mul(p.x, q.z), mul(q.x, p.z)),
        sub(mul(p.y, q.z), mul(q.y, p.z)),
    )
    # distinct points usually separate at low precision
    if any(provably_nonzero(c) for c in crosses):
        return False
    return all(sign(c) == 0 for c in crosses)


def dual_exchange(obj: ProjPoint | Line | LineAtInfinity) -> ProjPoint | Line | LineAtInfinity:
    """Point (a, b, c) <-> line a*x + b*y + c = 0."""
    if isinstance(obj, LineAtInfinity):
        return ProjPoint.of(0, 0, 1)
    if isinstance(obj, Line):
        return ProjPoint(obj.a, obj.b, obj.c)
    if first_nonzero((obj.x, obj.y)) is None:
        return LINE_AT_INFINITY
    return Line.from_coefficients(obj.x, obj.y, obj.z)
