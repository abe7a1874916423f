"""
Degree conditions and the totally-real test for nested square roots.

A number reachable by folding lies in a tower of square and cube root
extensions, so its degree over Q is 2^a 3^b. The check is necessary, not
sufficient.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

import sympy

from origami_engine.errors import NegativeRadicand, ReduciblePolynomial
from origami_engine.exactnum import add, const, mul, sign, sqrt, sub
from origami_engine.fields.primes import factorize, format_factors, is_smooth_23
from origami_engine.fields.thalian import rational_sqrt
from origami_engine.fields.verdict import FieldClass, Verdict

_X = sympy.Symbol("x")


def origami_degree_check(coeffs: Sequence[Fraction | int]) -> FieldClass:
    """Coefficients of an irreducible polynomial over Q, highest degree first."""
    rationals = [Fraction(c) for c in coeffs]
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in rationals], _X, domain="QQ")
    if poly.degree() < 1:
        raise ReduciblePolynomial("a constant polynomial has no roots to classify")
    if not poly.is_irreducible:
        raise ReduciblePolynomial(f"{poly.as_expr()} factors over Q: {sympy.factor(poly.as_expr())}")
    degree = poly.degree()
    certificate = {
        "polynomial": str(poly.as_expr()),
        "degree": degree,
        "factorization": format_factors(factorize(degree)),
        "note": "necessary only",
    }
    verdict = Verdict.DEGREE_PASS if is_smooth_23(degree) else Verdict.DEGREE_FAIL
    return FieldClass(verdict, certificate)


def totally_real_quadratic(p: Fraction | int, q: Fraction | int, r: Fraction | int) -> FieldClass:
    """Is sqrt(p + q sqrt(r)) totally real? Both conjugates p +- q sqrt(r) must be >= 0."""
    p, q, r = Fraction(p), Fraction(q), Fraction(r)
    if r < 0:
        raise NegativeRadicand(f"r must be nonnegative, got {r}")
    root = rational_sqrt(r)
    radical = const(root) if root is not None else sqrt(r)
    value = add(p, mul(q, radical))
    if sign(value) < 0:
        raise NegativeRadicand(f"{p} + {q}·sqrt({r}) is negative")
    conjugate = sub(p, mul(q, radical))
    conjugate_sign = sign(conjugate)
    certificate = {
        "number": f"sqrt({p} + {q}·sqrt({r}))",
        "conjugate": f"sqrt({p} - {q}·sqrt({r}))",
        "conjugate_radicand_sign": conjugate_sign,
    }
    if conjugate_sign >= 0:
        return FieldClass(Verdict.TOTALLY_REAL, certificate)
    certificate["conjugate_real"] = False
    return FieldClass(Verdict.NOT_TOTALLY_REAL, certificate)
