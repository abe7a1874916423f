"""
Closed forms for common points of two rational conics.

Points read off a split pencil member are deep expressions in the pencil
parameter. When both conics have rational matrices, every affine common
point has an x-coordinate that is a root of the resultant Res_y(A, B) and a
y-coordinate that is a root of Res_x(A, B); the common points on z = 0 are
the common roots of the two quadratic parts. Matching each pencil point
against those rational polynomials swaps its coordinates for closed forms
and checks the pencil at the same time.

Notes:
- Matching only rules candidates out by enclosures, so no coordinate is
  ever tested for zero exactly unless the chart of a point stays undecided.
- Coordinates that are roots of an irreducible quartic have no closed form
  and stay as computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from origami_engine.config.settings import get_settings
from origami_engine.conics.conic import Conic
from origami_engine.conics.matrix import Matrix
from origami_engine.errors import ConicError, DegeneratePencil
from origami_engine.exactnum import (
    ONE,
    ZERO,
    DyadicInterval,
    div,
    match_root,
    mul,
    polynomial_roots,
    provably_nonzero,
    refine,
    sign,
    sub,
    to_fraction,
)
from origami_engine.geom import ProjPoint
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)

_X, _Y, _T = sympy.symbols("x y t")


def _rational_matrix(m: Matrix) -> list[list[Fraction]] | None:
    rows = []
    for row in m:
        values = [to_fraction(v) for v in row]
        if any(v is None for v in values):
            return None
        rows.append(values)
    return rows  # type: ignore[return-value]


def _rat(v: Fraction) -> sympy.Rational:
    return sympy.Rational(v.numerator, v.denominator)


def _affine_poly(m: list[list[Fraction]]) -> sympy.Expr:
    return (
        _rat(m[0][0]) * _X**2 + 2 * _rat(m[0][1]) * _X * _Y + _rat(m[1][1]) * _Y**2
        + 2 * _rat(m[0][2]) * _X + 2 * _rat(m[1][2]) * _Y + _rat(m[2][2])
    )


def _coefficients(poly: sympy.Poly) -> list[Fraction]:
    out = []
    for c in poly.all_coeffs():
        r = sympy.Rational(c)
        out.append(Fraction(int(r.p), int(r.q)))
    return out


def _cauchy_bound(coeffs: list[Fraction]) -> Fraction:
    lead = abs(coeffs[0])
    return 1 + max((abs(c) / lead for c in coeffs[1:]), default=Fraction(0))


def _magnitude_floor(interval: DyadicInterval) -> Fraction:
    if interval.strict_sign() == 0:
        return Fraction(0)
    return min(abs(interval.lower), abs(interval.upper))


def _points_at_infinity(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[ProjPoint]:
    """Common points of the two conics on z = 0, in closed form."""
    points: list[ProjPoint] = []
    if a[1][1] == 0 and b[1][1] == 0:
        points.append(ProjPoint.of(0, 1, 0))
    # directions (1 : t : 0)
    ga = sympy.Poly(_rat(a[1][1]) * _T**2 + 2 * _rat(a[0][1]) * _T + _rat(a[0][0]), _T)
    gb = sympy.Poly(_rat(b[1][1]) * _T**2 + 2 * _rat(b[0][1]) * _T + _rat(b[0][0]), _T)
    common = sympy.gcd(ga, gb)
    if common.degree() > 0:
        for root in polynomial_roots(_coefficients(common)):
            points.append(ProjPoint(ONE, root.value, ZERO))
    return points


@dataclass(frozen=True)
class Resultants:
    x_poly: list[Fraction]
    y_poly: list[Fraction]
    at_infinity: list[ProjPoint]

    @property
    def has_affine(self) -> bool:
        return len(self.x_poly) > 1 and len(self.y_poly) > 1

    def _beyond_bounds(self, p: ProjPoint) -> bool:
        """True once |x/z| or |y/z| provably exceeds every affine common point."""
        x_bound, y_bound = _cauchy_bound(self.x_poly), _cauchy_bound(self.y_poly)
        cap = get_settings().precision_cap
        bits = 64
        while bits <= cap:
            z = refine(p.z, bits)
            z_max = max(abs(z.lower), abs(z.upper))
            if (_magnitude_floor(refine(p.x, bits)) > x_bound * z_max
                    or _magnitude_floor(refine(p.y, bits)) > y_bound * z_max):
                return True
            bits *= 2
        return False

    def is_affine(self, p: ProjPoint) -> bool:
        if provably_nonzero(p.z):
            return True
        if not self.at_infinity:
            return True
        if not self.has_affine or self._beyond_bounds(p):
            return False
        return sign(p.z) != 0

    def _direction(self, p: ProjPoint) -> ProjPoint:
        alive = list(self.at_infinity)
        cap = get_settings().precision_cap
        bits = 64
        while len(alive) > 1 and bits <= cap:
            alive = [q for q in alive if not provably_nonzero(sub(mul(q.y, p.x), mul(q.x, p.y)), bits)]
            bits *= 2
        if len(alive) != 1:
            raise ConicError(f"{p} matches {len(alive)} common points at infinity")
        return alive[0]

    def closed_form(self, p: ProjPoint) -> ProjPoint:
        """The common point p with closed-form coordinates."""
        if not self.is_affine(p):
            return self._direction(p)
        if not self.has_affine:
            raise ConicError(f"{p} is not a common point of the conics")
        x = match_root(div(p.x, p.z), self.x_poly).value
        y = match_root(div(p.y, p.z), self.y_poly).value
        return ProjPoint(x, y, ONE)


def resultants(a: Conic, b: Conic) -> Resultants | None:
    """Resultant data for two rational conics, None when an entry is irrational."""
    ma, mb = _rational_matrix(a.m), _rational_matrix(b.m)
    if ma is None or mb is None:
        return None
    fa, fb = _affine_poly(ma), _affine_poly(mb)
    rx = sympy.Poly(sympy.resultant(fa, fb, _Y), _X)
    ry = sympy.Poly(sympy.resultant(fa, fb, _X), _Y)
    if rx.is_zero or ry.is_zero:
        raise DegeneratePencil("the conics share a component")
    data = Resultants(_coefficients(rx), _coefficients(ry), _points_at_infinity(ma, mb))
    logger.debug(
        "Resultants of degree %d and %d, %d common points at infinity",
        rx.degree(), ry.degree(), len(data.at_infinity),
    )
    return data
