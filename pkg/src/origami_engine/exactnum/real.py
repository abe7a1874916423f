"""
Lazy exact real numbers.

An ExactReal is a node in an immutable expression DAG over the rationals.
Values are never approximated once and for all; instead every node keeps a
cached DyadicInterval that refine() narrows on demand.

Notes:
- Factories (add, mul, sqrt, ...) fold rational constants and the trivial
  identities with 0 and 1. Nothing else is rewritten; equalities are decided
  by sign().
- sign() refines until the enclosure excludes zero, or until its width is
  below the separation bound, in which case the value is exactly zero.
- Refinement is guarded by one re-entrant lock, so shared values can be
  refined from several threads. Caches only ever narrow.
"""

from __future__ import annotations

import math
import threading
from collections.abc import Callable, Sequence
from fractions import Fraction
from operator import methodcaller
from typing import Union

from origami_engine.config.settings import get_settings
from origami_engine.errors import DivisionByZero, NegativeRadicand, PrecisionExhausted
from origami_engine.exactnum.dyadic import DyadicInterval, icbrt
from origami_engine.exactnum.separation import degree_bound, separation_bits
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)

REFINE_LOCK = threading.RLock()

# Working precision beyond which refine() gives up. Far above any cap a
# caller can configure through settings.
_PREC_LIMIT = 1 << 22

Number = Union["ExactReal", int, Fraction]


class _NeedMorePrecision(Exception):
    """A divisor enclosure still contains zero at the current precision."""


class ExactReal:
    __slots__ = ("_enclosure",)

    op = ""
    radical_degree = 1

    def __init__(self) -> None:
        self._enclosure: DyadicInterval | None = None

    # -----------------------------
    # Structure
    # -----------------------------
    def children(self) -> tuple[ExactReal, ...]:
        return ()

    def operands(self) -> tuple[ExactReal, ...]:
        """Nodes whose enclosures this node needs during evaluation."""
        return self.children()

    @property
    def is_const(self) -> bool:
        return False

    def _compute(self, memo: dict[int, DyadicInterval], prec: int) -> DyadicInterval:
        raise NotImplementedError

    # -----------------------------
    # Operators
    # -----------------------------
    def __add__(self, other: Number) -> ExactReal:
        return add(self, other)

    def __radd__(self, other: Number) -> ExactReal:
        return add(other, self)

    def __sub__(self, other: Number) -> ExactReal:
        return sub(self, other)

    def __rsub__(self, other: Number) -> ExactReal:
        return sub(other, self)

    def __mul__(self, other: Number) -> ExactReal:
        return mul(self, other)

    def __rmul__(self, other: Number) -> ExactReal:
        return mul(other, self)

    def __truediv__(self, other: Number) -> ExactReal:
        return div(self, other)

    def __rtruediv__(self, other: Number) -> ExactReal:
        return div(other, self)

    def __neg__(self) -> ExactReal:
        return neg(self)

    def __pos__(self) -> ExactReal:
        return self

    def __pow__(self, exponent: int) -> ExactReal:
        return power(self, exponent)

    def __float__(self) -> float:
        return refine(self, 64).to_float()

    def __str__(self) -> str:
        from origami_engine.exactnum.format import to_expr_string

        return to_expr_string(self)

    def __repr__(self) -> str:
        return f"ExactReal({self})"


class Const(ExactReal):
    __slots__ = ("value",)
    op = "const"

    def __init__(self, value: Fraction) -> None:
        super().__init__()
        self.value = value

    @property
    def is_const(self) -> bool:
        return True

    def _compute(self, memo: dict[int, DyadicInterval], prec: int) -> DyadicInterval:
        return DyadicInterval.from_fraction(self.value, prec)


class _Binary(ExactReal):
    __slots__ = ("left", "right")

    def __init__(self, left: ExactReal, right: ExactReal) -> None:
        super().__init__()
        self.left = left
        self.right = right

    def children(self) -> tuple[ExactReal, ...]:
        return (self.left, self.right)


class _Unary(ExactReal):
    __slots__ = ("child",)

    def __init__(self, child: ExactReal) -> None:
        super().__init__()
        self.child = child

    def children(self) -> tuple[ExactReal, ...]:
        return (self.child,)


class Add(_Binary):
    __slots__ = ()
    op = "add"

    def _compute(self, memo: dict[int, DyadicInterval], prec: int) -> DyadicInterval:
        return memo[id(self.left)].add(memo[id(self.right)])


class Sub(_Binary):
    __slots__ = ()
    op = "sub"

    def _compute(self, memo: dict[int, DyadicInterval], prec: int) -> DyadicInterval:
        return memo[id(self.left)].sub(memo[id(self.right)])


class Mul(_Binary):
    __slots__ = ()
    op = "mul"

    def _compute(self, memo: dict[int, DyadicInterval], prec: int) -> DyadicInterval:
        return memo[id(self.left)].mul(memo[id(self.right)], prec)


class Div(_Binary):
    __slots__ = ()
    op = "div"

    def _compute(self, memo: dict[int, DyadicInterval], prec: int) -> DyadicInterval:
        quotient = memo[id(self.left)].div(memo[id(self.right)], prec)
        if quotient is None:
            raise _NeedMorePrecision
        return quotient


class Neg(_Unary):
    __slots__ = ()
    op = "neg"

    def _compute(self, memo: dict[int, DyadicInterval], prec: int) -> DyadicInterval:
        return memo[id(self.child)].neg()


class Sqrt(_Unary):
    __slots__ = ()
    op = "sqrt"
    radical_degree = 2

    def _compute(self, memo: dict[int, DyadicInterval], prec: int) -> DyadicInterval:
        return memo[id(self.child)].sqrt(prec)


class Cbrt(_Unary):
    __slots__ = ()
    op = "cbrt"
    radical_degree = 3

    def _compute(self, memo: dict[int, DyadicInterval], prec: int) -> DyadicInterval:
        return memo[id(self.child)].cbrt(prec)


# -----------------------------
# Construction
# -----------------------------
ZERO = Const(Fraction(0))
ONE = Const(Fraction(1))


def const(value: Number | str) -> ExactReal:
    if isinstance(value, ExactReal):
        return value
    if isinstance(value, (bool, float)):
        raise TypeError(f"exact numbers are built from ints, Fractions or 'p/q' strings, got {value!r}")
    return Const(Fraction(value))


def _as_exact(value: Number) -> ExactReal:
    return const(value)


def add(a: Number, b: Number) -> ExactReal:
    x, y = _as_exact(a), _as_exact(b)
    if isinstance(x, Const) and isinstance(y, Const):
        return Const(x.value + y.value)
    if isinstance(x, Const) and x.value == 0:
        return y
    if isinstance(y, Const) and y.value == 0:
        return x
    return Add(x, y)


def sub(a: Number, b: Number) -> ExactReal:
    x, y = _as_exact(a), _as_exact(b)
    if isinstance(x, Const) and isinstance(y, Const):
        return Const(x.value - y.value)
    if x is y:
        return ZERO
    if isinstance(y, Const) and y.value == 0:
        return x
    if isinstance(x, Const) and x.value == 0:
        return neg(y)
    return Sub(x, y)


def mul(a: Number, b: Number) -> ExactReal:
    x, y = _as_exact(a), _as_exact(b)
    if isinstance(x, Const) and isinstance(y, Const):
        return Const(x.value * y.value)
    for k, other in ((x, y), (y, x)):
        if isinstance(k, Const):
            if k.value == 0:
                return ZERO
            if k.value == 1:
                return other
            if k.value == -1:
                return neg(other)
    return Mul(x, y)


def div(a: Number, b: Number) -> ExactReal:
    x, y = _as_exact(a), _as_exact(b)
    if isinstance(y, Const):
        if y.value == 0:
            raise DivisionByZero("division by the exact rational 0")
        if isinstance(x, Const):
            return Const(x.value / y.value)
        if y.value == 1:
            return x
    elif sign(y) == 0:
        raise DivisionByZero(f"divisor is exactly zero: {y}")
    if x is y:
        return ONE
    if isinstance(x, Const) and x.value == 0:
        return ZERO
    return Div(x, y)


def neg(a: Number) -> ExactReal:
    x = _as_exact(a)
    if isinstance(x, Const):
        return Const(-x.value)
    if isinstance(x, Neg):
        return x.child
    return Neg(x)


def _exact_root(n: int, k: int) -> int | None:
    """Integer k-th root of a nonnegative integer when it is exact."""
    if k == 2:  # noqa: PLR2004
        r = math.isqrt(n)
        return r if r * r == n else None
    r = icbrt(n)
    return r if r**3 == n else None


def sqrt(a: Number) -> ExactReal:
    x = _as_exact(a)
    if isinstance(x, Const):
        if x.value < 0:
            raise NegativeRadicand(f"square root of negative rational {x.value}")
        num = _exact_root(x.value.numerator, 2)
        den = _exact_root(x.value.denominator, 2)
        if num is not None and den is not None:
            return Const(Fraction(num, den))
        return Sqrt(x)
    s = sign(x)
    if s < 0:
        raise NegativeRadicand(f"square root of a negative value: {x}")
    if s == 0:
        return ZERO
    return Sqrt(x)


def cbrt(a: Number) -> ExactReal:
    x = _as_exact(a)
    if isinstance(x, Const):
        v = x.value
        num = _exact_root(abs(v.numerator), 3)
        den = _exact_root(v.denominator, 3)
        if num is not None and den is not None:
            return Const(Fraction(num if v >= 0 else -num, den))
    return Cbrt(x)


def power(a: Number, exponent: int) -> ExactReal:
    if not isinstance(exponent, int):
        raise TypeError("only integer exponents are supported")
    x = _as_exact(a)
    if exponent < 0:
        return div(ONE, power(x, -exponent))
    result: ExactReal = ONE
    base = x
    while exponent:
        if exponent & 1:
            result = mul(result, base)
        exponent >>= 1
        if exponent:
            base = mul(base, base)
    return result


_FIELD_OPS: dict[str, Callable[..., ExactReal]] = {
    "add": add,
    "sub": sub,
    "mul": mul,
    "div": div,
}


def field_op(op: str, a: Number, b: Number | None = None) -> ExactReal:
    if op == "neg":
        return neg(a)
    if op not in _FIELD_OPS:
        raise ValueError(f"unknown field operation {op!r}")
    if b is None:
        raise ValueError(f"{op} needs two operands")
    return _FIELD_OPS[op](a, b)


# -----------------------------
# Refinement
# -----------------------------
children_of = methodcaller("children")
operands_of = methodcaller("operands")


def postorder(root: ExactReal, edges: Callable[[ExactReal], tuple[ExactReal, ...]]) -> list[ExactReal]:
    """Distinct nodes reachable from root, children before parents."""
    order: list[ExactReal] = []
    seen: set[int] = set()
    stack: list[tuple[ExactReal, bool]] = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        for child in reversed(edges(node)):
            if id(child) not in seen:
                stack.append((child, False))
    return order


def _evaluate(root: ExactReal, prec: int) -> DyadicInterval:
    memo: dict[int, DyadicInterval] = {}
    narrowed = DyadicInterval(0, 0, 0)
    for node in postorder(root, operands_of):
        narrowed = node._compute(memo, prec)
        cached = node._enclosure
        if cached is not None:
            narrowed = narrowed.intersect(cached)
        if not isinstance(node, Const):
            node._enclosure = narrowed
        memo[id(node)] = narrowed.rescale(prec)
    return narrowed


def refine(x: ExactReal, bits: int) -> DyadicInterval:
    """Enclosure of x with width at most 2**-bits."""
    if bits <= 0:
        raise ValueError("bits must be positive")
    if isinstance(x, Const):
        return DyadicInterval.from_fraction(x.value, bits + 1)
    with REFINE_LOCK:
        cached = x._enclosure
        if cached is not None and cached.width_at_most(bits):
            return cached
        guard = get_settings().guard_bits
        prec = bits + guard
        while True:
            try:
                interval = _evaluate(x, prec)
            except _NeedMorePrecision:
                interval = None
            if interval is not None and interval.width_at_most(bits):
                return interval
            prec += max(prec // 2, guard)
            if prec > _PREC_LIMIT:
                raise PrecisionExhausted(f"could not reach {bits} bits for {x}")
            logger.debug("Refining to %d working bits for a %d-bit target", prec, bits)


def try_sign(x: ExactReal, max_bits: int = 256) -> int | None:
    """Sign from enclosures alone, or None when undecided at max_bits."""
    if isinstance(x, Const):
        return (x.value > 0) - (x.value < 0)
    bits = min(64, max_bits)
    while True:
        interval = refine(x, bits)
        s = interval.strict_sign()
        if s:
            return s
        if interval.is_zero():
            return 0
        if bits >= max_bits:
            return None
        bits = min(bits * 2, max_bits)


def sign(x: ExactReal) -> int:
    """Exact sign of x: -1, 0 or +1."""
    if isinstance(x, Const):
        return (x.value > 0) - (x.value < 0)
    settings = get_settings()
    with REFINE_LOCK:
        s = try_sign(x, 64)
        if s is not None:
            return s
        nodes = postorder(x, children_of)
        target = math.ceil(separation_bits(nodes, settings.degree_cap)) + 2
        cap = settings.precision_cap
        bits = 64
        while bits < min(target, cap):
            bits = min(bits * 2, target, cap)
            interval = refine(x, bits)
            s = interval.strict_sign()
            if s:
                return s
            if interval.is_zero():
                return 0
        if target > cap:
            raise PrecisionExhausted(
                f"zero test needs {target} bits, above the precision cap {cap}"
            )
        logger.debug("Declared zero after refining to %d bits", target)
        return 0


def provably_nonzero(x: Number, max_bits: int = 256) -> bool:
    """True when enclosures up to max_bits already exclude zero."""
    s = try_sign(_as_exact(x), max_bits)
    return s is not None and s != 0


def first_nonzero(values: Sequence[Number]) -> int | None:
    """
    Index of a nonzero entry, or None when every entry is zero.

    Entries whose enclosures exclude zero are taken first; the exact test
    only runs on entries when none of them does.
    """
    exact = [_as_exact(v) for v in values]
    for i, v in enumerate(exact):
        if provably_nonzero(v):
            return i
    for i, v in enumerate(exact):
        if sign(v) != 0:
            return i
    return None


def algebraic_degree(x: ExactReal) -> int:
    """Product of the radical degrees in x, an upper bound on its degree over Q."""
    return degree_bound(postorder(x, children_of))


def compare(a: Number, b: Number) -> int:
    x, y = _as_exact(a), _as_exact(b)
    if x is y:
        return 0
    return sign(sub(x, y))


def equals(a: Number, b: Number) -> bool:
    return compare(a, b) == 0


def is_zero(x: Number) -> bool:
    return sign(_as_exact(x)) == 0


def to_fraction(x: ExactReal) -> Fraction | None:
    """The rational value of a constant node, None for anything else."""
    return x.value if isinstance(x, Const) else None
