"""
Real roots of cubics.

CubicRoot is the one node kind that is not a radical: a root of
t**3 + p*t + q given by a rational isolating bracket. It is needed for the
three-real-root case, which has no expression in real radicals.

Notes:
- A bracket is certified at construction by a strict sign change and, for
  p != 0, by the closed-form Sturm chain of the depressed cubic.
- Brackets narrow by a verified Newton step when it lands, else by bisection.
- cubic_roots() factors rational cubics over Q with sympy first, so roots
  that are rational or quadratic surds come back as plain radicals.
- match_root() swaps a deep value for the closed form of the polynomial root
  it equals, ruling the other roots out by enclosures alone.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache

import sympy

from origami_engine.config.settings import get_settings
from origami_engine.errors import ExactArithmeticError, IsolationError, PrecisionExhausted
from origami_engine.exactnum.dyadic import DyadicInterval
from origami_engine.exactnum.real import (
    REFINE_LOCK,
    ZERO,
    Const,
    ExactReal,
    Number,
    add,
    cbrt,
    compare,
    const,
    div,
    mul,
    neg,
    refine,
    sign,
    sqrt,
    sub,
    try_sign,
)
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class RealRoot:
    value: ExactReal
    multiplicity: int = 1


def _fsign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _eval_depressed(p: ExactReal, q: ExactReal, t: Fraction) -> ExactReal:
    return add(add(const(t**3), mul(p, const(t))), q)


def _sign_exact(p: ExactReal, q: ExactReal, t: Fraction) -> int:
    if isinstance(p, Const) and isinstance(q, Const):
        return _fsign(t**3 + p.value * t + q.value)
    return sign(_eval_depressed(p, q, t))


def _sign_bounded(p: ExactReal, q: ExactReal, t: Fraction, max_bits: int) -> int | None:
    """Sign of t**3 + p*t + q from coefficient enclosures; None when undecided."""
    if isinstance(p, Const) and isinstance(q, Const):
        return _fsign(t**3 + p.value * t + q.value)
    bits = 64
    while True:
        pi = refine(p, bits)
        qi = refine(q, bits)
        pt = (pi.lower * t, pi.upper * t)
        low = t**3 + min(pt) + qi.lower
        high = t**3 + max(pt) + qi.upper
        if low > 0:
            return 1
        if high < 0:
            return -1
        if bits >= max_bits:
            return None
        bits = min(bits * 2, max_bits)


def sturm_count(p: Number, q: Number, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of t**3 + p*t + q in (lo, hi]."""
    pe, qe = const(p), const(q)
    if sign(pe) == 0:
        # t**3 + q is strictly increasing
        return int(_sign_exact(pe, qe, lo) < 0 <= _sign_exact(pe, qe, hi))
    disc_sign = sign(add(mul(27, mul(qe, qe)), mul(4, mul(pe, mul(pe, pe)))))

    def variations(t: Fraction) -> int:
        signs = [
            _sign_exact(pe, qe, t),
            sign(add(const(3 * t * t), pe)),
            sign(sub(mul(mul(Fraction(-2, 3), pe), const(t)), qe)),
            -disc_sign,
        ]
        nonzero = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)

    return variations(lo) - variations(hi)


class CubicRoot(ExactReal):
    __slots__ = ("p", "q", "lo", "hi", "_lo", "_hi", "_sign_lo")
    op = "root"
    radical_degree = 3

    def __init__(self, p: ExactReal, q: ExactReal, lo: Fraction, hi: Fraction) -> None:
        super().__init__()
        if lo >= hi:
            raise IsolationError(f"empty bracket [{lo}, {hi}]")
        sign_lo = _sign_exact(p, q, lo)
        sign_hi = _sign_exact(p, q, hi)
        if sign_lo * sign_hi >= 0:
            raise IsolationError(f"no strict sign change of the cubic on [{lo}, {hi}]")
        if sign(p) != 0 and sturm_count(p, q, lo, hi) != 1:
            raise IsolationError(f"[{lo}, {hi}] does not isolate a single root")
        self.p = p
        self.q = q
        # construction bracket, kept for printing
        self.lo = lo
        self.hi = hi
        self._lo = lo
        self._hi = hi
        self._sign_lo = sign_lo

    def children(self) -> tuple[ExactReal, ...]:
        return (self.p, self.q)

    def operands(self) -> tuple[ExactReal, ...]:
        return ()

    def bracket(self) -> tuple[Fraction, Fraction]:
        with REFINE_LOCK:
            return (self._lo, self._hi)

    def _compute(self, memo: dict[int, DyadicInterval], prec: int) -> DyadicInterval:
        self.narrow(prec + 2)
        return DyadicInterval.from_bounds(self._lo, self._hi, prec)

    # -----------------------------
    # Bracket refinement
    # -----------------------------
    def narrow(self, bits: int) -> None:
        """Shrink the bracket to width <= 2**-bits."""
        target = Fraction(1, 1 << bits)
        with REFINE_LOCK:
            while self._hi - self._lo > target:
                if not self._newton_step(bits):
                    self._bisect_step(bits)

    def _take(self, t: Fraction, s: int) -> None:
        if s == self._sign_lo:
            self._lo = t
        else:
            self._hi = t

    def _newton_step(self, bits: int) -> bool:
        lo, hi = self._lo, self._hi
        width = hi - lo
        mid = (lo + hi) / 2
        guard = get_settings().guard_bits
        p_approx = refine(self.p, bits + guard).midpoint
        q_approx = refine(self.q, bits + guard).midpoint
        slope = 3 * mid * mid + p_approx
        if slope == 0:
            return False
        guess = mid - (mid**3 + p_approx * mid + q_approx) / slope
        scale = 1 << (bits + 8)
        guess = Fraction(round(guess * scale), scale)
        width_exp = width.denominator.bit_length() - width.numerator.bit_length() - 1
        eps = Fraction(1, 1 << max(min(2 * width_exp, bits + 1), 1))
        if 2 * eps > width / 4:
            return False
        left, right = guess - eps, guess + eps
        if left <= lo or right >= hi:
            return False
        s_left = _sign_bounded(self.p, self.q, left, bits + 64)
        s_right = _sign_bounded(self.p, self.q, right, bits + 64)
        if s_left != self._sign_lo or s_right != -self._sign_lo:
            return False
        self._lo, self._hi = left, right
        return True

    def _bisect_step(self, bits: int) -> None:
        lo, hi = self._lo, self._hi
        width = hi - lo
        mid = lo + width / 2
        for t in (mid, lo + width / 4, lo + 3 * width / 4):
            s = _sign_bounded(self.p, self.q, t, bits + 64)
            if s:
                self._take(t, s)
                return
            if s == 0:
                self._lo = self._hi = t
                return
        s = _sign_exact(self.p, self.q, mid)
        if s == 0:
            logger.debug("Cubic root is the rational %s", mid)
            self._lo = self._hi = mid
        else:
            self._take(mid, s)


# -----------------------------
# Root finding
# -----------------------------
def _sorted(roots: list[RealRoot]) -> list[RealRoot]:
    return sorted(roots, key=cmp_to_key(lambda a, b: compare(a.value, b.value)))


def _to_fraction(value: sympy.Basic) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _integer_bound(x: ExactReal) -> Fraction:
    interval = refine(x, 8)
    return Fraction(int(max(abs(interval.lower), abs(interval.upper))) + 1)


def _critical_approx(p: ExactReal, q: ExactReal, side: int) -> Fraction:
    """Rational near side*sqrt(-p/3) where the cubic has sign -side."""
    critical = sqrt(div(neg(p), 3))
    bits = 32
    while True:
        t = side * refine(critical, bits).midpoint
        if _sign_exact(p, q, t) == -side:
            return t
        bits *= 2


def _generic_roots(p: ExactReal, q: ExactReal) -> list[RealRoot]:
    if sign(p) == 0:
        if sign(q) == 0:
            return [RealRoot(ZERO, 3)]
        return [RealRoot(cbrt(neg(q)), 1)]
    disc = add(mul(27, mul(q, q)), mul(4, mul(p, mul(p, p))))
    disc_sign = sign(disc)
    if disc_sign == 0:
        double = div(mul(-3, q), mul(2, p))
        simple = div(mul(3, q), p)
        return _sorted([RealRoot(double, 2), RealRoot(simple, 1)])
    bound = max(_integer_bound(p), _integer_bound(q)) + 1
    if disc_sign > 0:
        return [RealRoot(CubicRoot(p, q, -bound, bound), 1)]
    s1 = _critical_approx(p, q, -1)
    s2 = _critical_approx(p, q, 1)
    logger.debug("Three real roots separated at %s and %s", s1, s2)
    return [
        RealRoot(CubicRoot(p, q, -bound, s1), 1),
        RealRoot(CubicRoot(p, q, s1, s2), 1),
        RealRoot(CubicRoot(p, q, s2, bound), 1),
    ]


def _factor_roots(coeffs: list[Fraction], multiplicity: int) -> list[RealRoot]:
    """Real roots of an irreducible rational factor of degree <= 3."""
    degree = len(coeffs) - 1
    if degree == 1:
        return [RealRoot(Const(-coeffs[1] / coeffs[0]), multiplicity)]
    if degree == 2:  # noqa: PLR2004
        a, b, c = coeffs
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        root = sqrt(disc)
        return [
            RealRoot(div(sub(Fraction(-b), root), 2 * a), multiplicity),
            RealRoot(div(add(Fraction(-b), root), 2 * a), multiplicity),
        ]
    a, b, c, d = (x / coeffs[0] for x in coeffs)
    shift = b / 3
    p = c - b * b / 3
    q = 2 * b**3 / 27 - b * c / 3 + d
    return [
        RealRoot(sub(r.value, Const(shift)), multiplicity * r.multiplicity)
        for r in _generic_roots(Const(p), Const(q))
    ]


def _rational_roots(p: Fraction, q: Fraction) -> list[RealRoot]:
    if p == 0:
        if q == 0:
            return [RealRoot(ZERO, 3)]
        return [RealRoot(cbrt(-q), 1)]
    t = sympy.Symbol("t")
    poly = sympy.Poly(t**3 + sympy.Rational(p.numerator, p.denominator) * t
                      + sympy.Rational(q.numerator, q.denominator), t, domain="QQ")
    _, factors = poly.factor_list()
    roots: list[RealRoot] = []
    for factor, multiplicity in factors:
        coeffs = [_to_fraction(c) for c in factor.all_coeffs()]
        roots.extend(_factor_roots(coeffs, multiplicity))
    return _sorted(roots)


def cubic_roots(p: Number, q: Number) -> list[RealRoot]:
    """Distinct real roots of t**3 + p*t + q, ascending, with multiplicities."""
    pe, qe = const(p), const(q)
    if isinstance(pe, Const) and isinstance(qe, Const):
        return _rational_roots(pe.value, qe.value)
    return _generic_roots(pe, qe)


def _strip(coeffs: Sequence[Number]) -> list[ExactReal]:
    exact = [const(c) for c in coeffs]
    while exact and sign(exact[0]) == 0:
        exact.pop(0)
    return exact


def polynomial_roots(coeffs: Sequence[Number]) -> list[RealRoot]:
    """
    Real roots of a polynomial of degree <= 3.

    Coefficients run from the highest degree down. Leading coefficients that
    are exactly zero are dropped first.
    """
    exact = _strip(coeffs)
    if not exact:
        raise ExactArithmeticError("the zero polynomial has no isolated roots")
    degree = len(exact) - 1
    if degree == 0:
        return []
    if degree == 1:
        return [RealRoot(neg(div(exact[1], exact[0])), 1)]
    if degree == 2:  # noqa: PLR2004
        a, b, c = exact
        disc = sub(mul(b, b), mul(4, mul(a, c)))
        s = sign(disc)
        if s < 0:
            return []
        if s == 0:
            return [RealRoot(div(neg(b), mul(2, a)), 2)]
        root = sqrt(disc)
        two_a = mul(2, a)
        return _sorted(
            [
                RealRoot(div(sub(neg(b), root), two_a), 1),
                RealRoot(div(add(neg(b), root), two_a), 1),
            ]
        )
    if degree > 3:  # noqa: PLR2004
        raise ExactArithmeticError(f"degree {degree} is above the supported cubic case")
    lead = exact[0]
    a, b, c = (div(x, lead) for x in exact[1:])
    shift = div(a, 3)
    p = sub(b, div(mul(a, a), 3))
    q = add(sub(div(mul(2, mul(a, mul(a, a))), 27), div(mul(a, b), 3)), c)
    return [RealRoot(sub(r.value, shift), r.multiplicity) for r in cubic_roots(p, q)]


# -----------------------------
# Closed forms for known roots
# -----------------------------
Candidate = tuple[ExactReal | None, tuple[Fraction, ...], int]


def rational_factors(coeffs: Sequence[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Irreducible factors over Q of a rational polynomial, with their powers."""
    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in map(Fraction, coeffs)],
                      t, domain="QQ")
    _, factors = poly.factor_list()
    return [([_to_fraction(c) for c in f.all_coeffs()], power) for f, power in factors]


def _horner(coeffs: Sequence[Fraction], x: ExactReal) -> ExactReal:
    total: ExactReal = ZERO
    for c in coeffs:
        total = add(mul(total, x), Const(c))
    return total


@lru_cache(maxsize=256)
def _candidates(coeffs: tuple[Fraction, ...]) -> tuple[Candidate, ...]:
    """Closed-form roots per factor; a factor above degree 3 stands for its roots."""
    out: list[Candidate] = []
    for factor, power in rational_factors(coeffs):
        if len(factor) <= 4:  # noqa: PLR2004
            out.extend((r.value, tuple(factor), power) for r in _factor_roots(factor, 1))
        else:
            out.append((None, tuple(factor), power))
    return tuple(out)


def _ruled_out(x: ExactReal, candidate: Candidate, bits: int) -> bool:
    value, factor, _ = candidate
    gap = _horner(factor, x) if value is None else sub(x, value)
    s = try_sign(gap, bits)
    return s is not None and s != 0


def match_root(x: ExactReal, coeffs: Sequence[Fraction], max_bits: int | None = None) -> RealRoot:
    """
    Closed form of x, which must be a real root of the rational polynomial coeffs.

    Roots of the factors of degree <= 3 are candidates in closed form; a
    factor of higher degree stands for all of its roots. Candidates are ruled
    out by enclosures until one is left, so x is never tested for zero
    exactly. When the survivor is a factor without closed-form roots, x itself
    is returned. The multiplicity is the power of the matching factor.
    """
    if max_bits is None:
        max_bits = get_settings().precision_cap
    candidates = list(_candidates(tuple(map(Fraction, coeffs))))
    bits = min(64, max_bits)
    while True:
        candidates = [c for c in candidates if not _ruled_out(x, c, bits)]
        if len(candidates) <= 1 or bits >= max_bits:
            break
        bits = min(2 * bits, max_bits)
    if not candidates:
        raise IsolationError(f"{x} is not a root of the given polynomial")
    if len(candidates) > 1:
        raise PrecisionExhausted(f"{len(candidates)} roots stay within 2^-{max_bits} of {x}")
    value, _, power = candidates[0]
    return RealRoot(x if value is None else value, power)
