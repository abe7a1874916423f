"""Exact polynomial helpers shared by the solvers (coefficients highest first)."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from origami_engine.exactnum import ZERO, ExactReal, Number, add, const, mul, sign, to_fraction


def horner(coeffs: Sequence[Number], x: ExactReal) -> ExactReal:
    total: ExactReal = ZERO
    for c in coeffs:
        total = add(mul(total, x), c)
    return total


def derivative(coeffs: Sequence[Number]) -> list[ExactReal]:
    degree = len(coeffs) - 1
    return [mul(degree - i, const(c)) for i, c in enumerate(coeffs[:-1])]


def multiplicity(coeffs: Sequence[Number], root: ExactReal) -> int:
    """How many successive derivatives vanish at a known root."""
    count = 1
    current = derivative(coeffs)
    while current and sign(horner(current, root)) == 0:
        count += 1
        current = derivative(current)
    return count


def rational_coefficients(coeffs: Sequence[Number]) -> list[Fraction] | None:
    out = []
    for c in coeffs:
        value = to_fraction(const(c))
        if value is None:
            return None
        out.append(value)
    return out
