"""
Projective conics as symmetric 3x3 matrices.

A point (x, y, z) lies on the conic when (x, y, z) M (x, y, z)^T = 0. The
matrix is kept up to scale: the first nonzero entry in row-major order is
normalized to 1, so equal conics compare entry by entry.

The dual conic (the conic of tangent lines) is given by the adjugate.
"""

from __future__ import annotations

from dataclasses import dataclass

from origami_engine.conics.matrix import (
    Matrix,
    Vector,
    adjugate,
    det,
    is_zero_matrix,
    matrix,
    quadratic_form,
)
from origami_engine.errors import ConicError, DegenerateConic, DegenerateParabola
from origami_engine.exactnum import ONE, ExactReal, Number, add, div, equals, mul, sign, sub
from origami_engine.geom import Line, Point, ProjPoint, incident


def normalize(m: Matrix) -> Matrix:
    for row in m:
        for pivot in row:
            if sign(pivot) != 0:
                return tuple(tuple(div(v, pivot) for v in r) for r in m)  # type: ignore[return-value]
    raise ConicError("the zero matrix is not a conic")


@dataclass(frozen=True, eq=False)
class Conic:
    m: Matrix

    @classmethod
    def from_matrix(cls, m: Matrix) -> Conic:
        for i in range(3):
            for j in range(i + 1, 3):
                if not equals(m[i][j], m[j][i]):
                    raise ConicError("conic matrices must be symmetric")
        return cls(normalize(m))

    def coefficients(self) -> tuple:
        """(a, b, c, d, e, f) of a x^2 + b xy + c y^2 + d x + e y + f."""
        m = self.m
        return (m[0][0], mul(2, m[0][1]), m[1][1], mul(2, m[0][2]), mul(2, m[1][2]), m[2][2])

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(v) for v in row) for row in self.m) + "]"


def conic_from_coefficients(a: Number, b: Number, c: Number, d: Number, e: Number, f: Number) -> Conic:
    """a x^2 + b xy + c y^2 + d x + e y + f = 0."""
    half_b, half_d, half_e = div(b, 2), div(d, 2), div(e, 2)
    return Conic.from_matrix(
        matrix([[a, half_b, half_d], [half_b, c, half_e], [half_d, half_e, f]])
    )


def conic_from_parabola(focus: Point, directrix: Line) -> Conic:
    """Points equidistant from the focus and the directrix."""
    if incident(focus, directrix):
        raise DegenerateParabola(f"focus {focus} lies on the directrix {directrix}")
    a, b, c = directrix.a, directrix.b, directrix.c
    n = add(mul(a, a), mul(b, b))
    fx, fy = focus.x, focus.y
    return conic_from_coefficients(
        mul(b, b),
        mul(-2, mul(a, b)),
        mul(a, a),
        sub(mul(mul(-2, n), fx), mul(2, mul(a, c))),
        sub(mul(mul(-2, n), fy), mul(2, mul(b, c))),
        sub(mul(n, add(mul(fx, fx), mul(fy, fy))), mul(c, c)),
    )


def same_conic(a: Conic, b: Conic) -> bool:
    return all(equals(a.m[i][j], b.m[i][j]) for i in range(3) for j in range(3))


def determinant(c: Conic) -> ExactReal:
    return det(c.m)


def rank(c: Conic) -> int:
    if sign(det(c.m)) != 0:
        return 3
    if is_zero_matrix(adjugate(c.m)):
        return 1
    return 2


def dual(c: Conic) -> Conic:
    if sign(det(c.m)) == 0:
        raise DegenerateConic("a degenerate conic has no dual conic")
    return Conic(normalize(adjugate(c.m)))


def evaluate(c: Conic, p: Point | ProjPoint) -> ExactReal:
    if isinstance(p, Point):
        return quadratic_form(c.m, (p.x, p.y, ONE))
    return quadratic_form(c.m, p.coordinates())


def on_conic(p: Point | ProjPoint, c: Conic) -> bool:
    return sign(evaluate(c, p)) == 0


def line_vector(l: Line) -> Vector:
    return (l.a, l.b, l.c)


def tangent_to(l: Line, c: Conic) -> bool:
    """True when l touches the non-degenerate conic c."""
    return sign(quadratic_form(adjugate(c.m), line_vector(l))) == 0

