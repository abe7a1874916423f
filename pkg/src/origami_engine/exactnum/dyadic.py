"""
Dyadic fixed-point intervals.

A DyadicInterval [lo, hi] * 2**exp encloses a real number. Operations take a
working precision `prec` and return intervals with exp == -prec, rounded
outward so the enclosure is never lost.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def floor_div(a: int, b: int) -> int:
    return a // b


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def icbrt(n: int) -> int:
    """Floor of the real cube root of an integer."""
    if n < 0:
        return -icbrt_ceil(-n)
    if n < 2:  # noqa: PLR2004
        return n
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            return x
        x = y


def icbrt_ceil(n: int) -> int:
    if n < 0:
        return -icbrt(-n)
    r = icbrt(n)
    return r if r * r * r == n else r + 1


def isqrt_ceil(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


@dataclass(frozen=True, slots=True)
class DyadicInterval:
    lo: int
    hi: int
    exp: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty dyadic interval [{self.lo}, {self.hi}] * 2^{self.exp}")

    # -----------------------------
    # Constructors
    # -----------------------------
    @classmethod
    def from_fraction(cls, value: Fraction, prec: int) -> DyadicInterval:
        num = value.numerator << prec if prec >= 0 else value.numerator
        den = value.denominator if prec >= 0 else value.denominator << -prec
        return cls(floor_div(num, den), ceil_div(num, den), -prec)

    @classmethod
    def from_bounds(cls, lo: Fraction, hi: Fraction, prec: int) -> DyadicInterval:
        scale = 1 << prec
        lo_num = lo.numerator * scale
        hi_num = hi.numerator * scale
        return cls(
            floor_div(lo_num, lo.denominator),
            ceil_div(hi_num, hi.denominator),
            -prec,
        )

    # -----------------------------
    # Queries
    # -----------------------------
    @property
    def lower(self) -> Fraction:
        return Fraction(self.lo) * Fraction(2) ** self.exp

    @property
    def upper(self) -> Fraction:
        return Fraction(self.hi) * Fraction(2) ** self.exp

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    @property
    def width(self) -> Fraction:
        return Fraction(self.hi - self.lo) * Fraction(2) ** self.exp

    def width_at_most(self, bits: int) -> bool:
        """True when hi - lo <= 2**-bits."""
        shift = -bits - self.exp
        if shift >= 0:
            return self.hi - self.lo <= (1 << shift)
        return (self.hi - self.lo) << (-shift) <= 1

    def magnitude_below(self, bits: int) -> bool:
        """True when every point of the interval has absolute value < 2**-bits."""
        mag = max(abs(self.lo), abs(self.hi))
        shift = -bits - self.exp
        if shift >= 0:
            return mag < (1 << shift)
        return mag == 0

    def strict_sign(self) -> int:
        """+1 or -1 when the interval excludes zero, 0 when it is exactly [0, 0] or straddles."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def is_zero(self) -> bool:
        return self.lo == 0 and self.hi == 0

    def contains(self, value: Fraction) -> bool:
        return self.lower <= value <= self.upper

    def to_float(self) -> float:
        return float(self.midpoint)

    # -----------------------------
    # Alignment
    # -----------------------------
    def rescale(self, prec: int) -> DyadicInterval:
        """Same enclosure expressed with exp == -prec (outward when coarsening)."""
        target = -prec
        if self.exp == target:
            return self
        if self.exp > target:
            shift = self.exp - target
            return DyadicInterval(self.lo << shift, self.hi << shift, target)
        shift = target - self.exp
        return DyadicInterval(self.lo >> shift, -((-self.hi) >> shift), target)

    def intersect(self, other: DyadicInterval) -> DyadicInterval:
        exp = min(self.exp, other.exp)
        a = self.rescale(-exp)
        b = other.rescale(-exp)
        return DyadicInterval(max(a.lo, b.lo), min(a.hi, b.hi), exp)

    def is_subset_of(self, other: DyadicInterval) -> bool:
        return other.lower <= self.lower and self.upper <= other.upper

    # -----------------------------
    # Arithmetic (operands already at exp == -prec)
    # -----------------------------
    def add(self, other: DyadicInterval) -> DyadicInterval:
        return DyadicInterval(self.lo + other.lo, self.hi + other.hi, self.exp)

    def sub(self, other: DyadicInterval) -> DyadicInterval:
        return DyadicInterval(self.lo - other.hi, self.hi - other.lo, self.exp)

    def neg(self) -> DyadicInterval:
        return DyadicInterval(-self.hi, -self.lo, self.exp)

    def mul(self, other: DyadicInterval, prec: int) -> DyadicInterval:
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        lo = min(products) >> prec
        hi = -((-max(products)) >> prec)
        return DyadicInterval(lo, hi, -prec)

    def div(self, other: DyadicInterval, prec: int) -> DyadicInterval | None:
        """Quotient, or None when the divisor interval still contains zero."""
        if other.lo <= 0 <= other.hi:
            return None
        lows = []
        highs = []
        for a in (self.lo, self.hi):
            for b in (other.lo, other.hi):
                lows.append(floor_div(a << prec, b))
                highs.append(ceil_div(a << prec, b))
        return DyadicInterval(min(lows), max(highs), -prec)

    def sqrt(self, prec: int) -> DyadicInterval:
        lo = math.isqrt(max(self.lo, 0) << prec)
        hi = isqrt_ceil(max(self.hi, 0) << prec)
        return DyadicInterval(lo, hi, -prec)

    def cbrt(self, prec: int) -> DyadicInterval:
        lo = icbrt(self.lo << (2 * prec))
        hi = icbrt_ceil(self.hi << (2 * prec))
        return DyadicInterval(lo, hi, -prec)

    def __str__(self) -> str:
        return f"[{float(self.lower)!r}, {float(self.upper)!r}]"
