"""
Quartics x^4 + a x^2 + b x + c through two parabolas.

With y = x^2 the quartic becomes (y + a/2)^2 = -b (x + (4c - a^2)/(4b)),
which expands to y^2 + b x + a y + c = 0. The real roots are the
x-coordinates of the common points of that parabola and y = x^2; the
pencil's determinant is the resolvent cubic.

For rational coefficients each root found on the pencil is matched against
the sympy factorization of the quartic, which gives its closed form and
multiplicity, and the total is checked against sympy's real root count.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

import sympy

from origami_engine.conics import common_points, conic_from_coefficients
from origami_engine.errors import SolverError
from origami_engine.exactnum import (
    ONE,
    ZERO,
    ExactReal,
    Number,
    RealRoot,
    compare,
    const,
    equals,
    match_root,
    neg,
    polynomial_roots,
    sign,
    sqrt,
)
from origami_engine.geom import to_affine
from origami_engine.solvers.polynomial import multiplicity, rational_coefficients
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)

_X = sympy.Symbol("x")


def _ascending(roots: list[RealRoot]) -> list[RealRoot]:
    return sorted(roots, key=cmp_to_key(lambda r, s: compare(r.value, s.value)))


def _merge(roots: list[RealRoot]) -> list[RealRoot]:
    merged: list[RealRoot] = []
    for root in _ascending(roots):
        if merged and equals(merged[-1].value, root.value):
            last = merged.pop()
            root = RealRoot(last.value, last.multiplicity + root.multiplicity)
        merged.append(root)
    return merged


def _biquadratic(a: ExactReal, c: ExactReal) -> list[RealRoot]:
    roots: list[RealRoot] = []
    for u in polynomial_roots([1, a, c]):
        s = sign(u.value)
        if s == 0:
            roots.append(RealRoot(u.value, 2 * u.multiplicity))
        elif s > 0:
            r = sqrt(u.value)
            roots.extend([RealRoot(neg(r), u.multiplicity), RealRoot(r, u.multiplicity)])
    return roots


def _by_pencil(a: ExactReal, b: ExactReal, c: ExactReal) -> list[RealRoot]:
    upper = conic_from_coefficients(1, 0, 0, 0, -1, 0)
    lower = conic_from_coefficients(0, 0, 1, b, a, c)
    coeffs = [ONE, ZERO, a, b, c]
    rational = rational_coefficients(coeffs)
    roots = []
    for point in common_points(upper, lower):
        if point.at_infinity:
            continue
        x = to_affine(point).x
        if rational is not None:
            roots.append(match_root(x, rational))
        else:
            roots.append(RealRoot(x, multiplicity(coeffs, x)))
    logger.debug("Quartic: %d common points on the pencil", len(roots))
    if rational is not None:
        _cross_check(rational, roots)
    return _ascending(roots)


def _cross_check(rational: list[Fraction], roots: list[RealRoot]) -> None:
    """The pencil must find every real root sympy counts."""
    poly = sympy.Poly([sympy.Rational(v.numerator, v.denominator) for v in rational], _X)
    expected = poly.count_roots()
    found = sum(r.multiplicity for r in roots)
    if found != expected:
        raise SolverError(f"pencil found {found} real roots of {poly.as_expr()}, sympy counts {expected}")


def quartic_roots(a: Number, b: Number, c: Number) -> list[RealRoot]:
    """Real roots of x^4 + a x^2 + b x + c, ascending, with multiplicities."""
    a, b, c = const(a), const(b), const(c)
    if sign(b) == 0:
        return _merge(_biquadratic(a, c))
    return _by_pencil(a, b, c)
