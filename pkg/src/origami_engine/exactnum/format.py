"""
Text forms of exact reals: expression strings and rounded decimals.
"""

from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from origami_engine.config.settings import get_settings
from origami_engine.exactnum.real import Const, ExactReal, children_of, postorder, refine, sign

_PRECEDENCE = {"add": 1, "sub": 1, "mul": 2, "div": 2, "neg": 3}
_SYMBOL = {"add": " + ", "sub": " - ", "mul": "*", "div": "/"}
_ATOM = 4


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _const_precedence(value: Fraction) -> int:
    if value < 0:
        return _PRECEDENCE["neg"]
    return _ATOM if value.denominator == 1 else _PRECEDENCE["div"]


def _abbreviate(text: str, limit: int) -> str:
    if len(text) <= limit:
        return text
    keep = max(limit // 2 - 2, 1)
    return f"{text[:keep]} … {text[-keep:]}"


def _wrap(text: str, child_prec: int, parent_prec: int, right: bool) -> str:
    if child_prec < parent_prec:
        return f"({text})"
    if right and child_prec == parent_prec:
        return f"({text})"
    if right and child_prec == _PRECEDENCE["neg"]:
        return f"({text})"
    return text


def _root_text(p: str, q: str, lo: Fraction, hi: Fraction) -> str:
    return f"root(t^3 + ({p})*t + ({q}); [{format_fraction(lo)}, {format_fraction(hi)}])"


def to_expr_string(x: ExactReal, max_chars: int | None = None) -> str:
    """
    Exact infix form of an expression.

    Shared subexpressions are printed at every use. Any subexpression longer
    than `max_chars` is shortened around a "…" so output stays bounded.
    """
    limit = max_chars if max_chars is not None else get_settings().max_expr_chars
    texts: dict[int, tuple[str, int]] = {}
    for node in postorder(x, children_of):
        op = node.op
        if isinstance(node, Const):
            entry = (format_fraction(node.value), _const_precedence(node.value))
        elif op in _SYMBOL:
            left_text, left_prec = texts[id(node.left)]  # type: ignore[attr-defined]
            right_text, right_prec = texts[id(node.right)]  # type: ignore[attr-defined]
            prec = _PRECEDENCE[op]
            strict_right = op in ("sub", "div")
            entry = (
                _wrap(left_text, left_prec, prec, False)
                + _SYMBOL[op]
                + _wrap(right_text, right_prec, prec + (0 if strict_right else 1), True),
                prec,
            )
        elif op == "neg":
            child_text, child_prec = texts[id(node.child)]  # type: ignore[attr-defined]
            inner = child_text if child_prec == _ATOM else f"({child_text})"
            entry = ("-" + inner, _PRECEDENCE["neg"])
        elif op in ("sqrt", "cbrt"):
            child_text, _ = texts[id(node.child)]  # type: ignore[attr-defined]
            entry = (f"{op}({child_text})", _ATOM)
        elif op == "root":
            p_text, _ = texts[id(node.p)]  # type: ignore[attr-defined]
            q_text, _ = texts[id(node.q)]  # type: ignore[attr-defined]
            entry = (_root_text(p_text, q_text, node.lo, node.hi), _ATOM)  # type: ignore[attr-defined]
        else:
            raise TypeError(f"unknown expression node {op!r}")
        texts[id(node)] = (_abbreviate(entry[0], limit), entry[1])
    return texts[id(x)][0]


def _round_fraction(value: Fraction, digits: int) -> str:
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        rounded = Decimal(value.numerator) / Decimal(value.denominator)
    return format(rounded, "f")


def to_decimal(x: ExactReal, digits: int | None = None) -> str:
    """Decimal rendering to `digits` significant digits, round-half-even."""
    digits = digits if digits is not None else get_settings().digits
    if isinstance(x, Const):
        return _round_fraction(x.value, digits)
    bits = 4 * digits + 16
    limit = 16 * digits + 512
    while True:
        interval = refine(x, bits)
        if interval.strict_sign() == 0:
            if interval.is_zero() or sign(x) == 0:
                return "0"
        else:
            low = _round_fraction(interval.lower, digits)
            high = _round_fraction(interval.upper, digits)
            if low == high or bits >= limit:
                return low if low == high else _round_fraction(interval.midpoint, digits)
        bits *= 2


def approx(x: ExactReal, digits: int | None = None) -> str:
    return "≈ " + to_decimal(x, digits)
