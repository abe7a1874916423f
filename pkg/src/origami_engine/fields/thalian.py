"""
Thalian membership for z = a + b i with rational a and b^2.

z is Thalian exactly when b lies in Q(a, b^2). With a and b^2 rational that
field is Q, so the question is whether b itself is rational.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from origami_engine.errors import OutOfRange, UnsupportedTower
from origami_engine.fields.verdict import FieldClass, Verdict


def rational_sqrt(value: Fraction) -> Fraction | None:
    """The rational square root of value, None when there is none."""
    if value < 0:
        return None
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def thalian_classify(a: Fraction | int, bsq: Fraction | int, b_is_rational: bool = False) -> FieldClass:
    a, bsq = Fraction(a), Fraction(bsq)
    if bsq <= 0:
        raise UnsupportedTower(f"b^2 must be a positive rational, got {bsq}")
    root = rational_sqrt(bsq)
    if b_is_rational and root is None:
        raise UnsupportedTower(f"b was declared rational but b^2 = {bsq} is not a rational square")

    z = f"{a} + sqrt({bsq})·i"
    if root is not None:
        return FieldClass(
            Verdict.THALIAN,
            {"z": f"{a} + {root}·i", "b": str(root), "field": "Q(a, b^2) = Q", "Pi[z]": "Q(i)"},
        )
    return FieldClass(
        Verdict.NON_THALIAN,
        {
            "z": z,
            "b": f"sqrt({bsq}) is irrational",
            "field": "Q(a, b^2) = Q",
            "Pi[z]": f"Q + Q·sqrt({bsq})·i",
        },
    )


def root_of_unity_thalian(m: int) -> bool:
    """exp(2 pi i / m) is Thalian iff 4 divides m."""
    if m < 3:  # noqa: PLR2004
        raise OutOfRange(f"root of unity order must be at least 3, got {m}")
    return m % 4 == 0
