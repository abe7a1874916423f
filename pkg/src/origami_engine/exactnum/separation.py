"""
Separation bound for the exact zero test.

Every node gets a pair (log2 u, log2 l) such that its value is U/L with U, L
algebraic integers whose conjugates are bounded by u and l. A nonzero value
then satisfies |x| >= 1 / (u**(D-1) * l), where D is the product of the
radical degrees in the expression.

Notes:
- Heights are upper bounds in log2 space; integers use bit_length, which
  never underestimates.
- A cubic root node t**3 + p*t + q is scaled to a monic integral cubic; its
  height comes from the Cauchy root bound of that cubic.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

from origami_engine.errors import PrecisionExhausted
from origami_engine.utils.logging import get_logger

if TYPE_CHECKING:
    from origami_engine.exactnum.real import ExactReal

logger = get_logger(__name__)


def _log2_int(n: int) -> float:
    return float(max(abs(n), 1).bit_length())


def node_heights(nodes: Sequence[ExactReal]) -> dict[int, tuple[float, float]]:
    """(log2 u, log2 l) for every node, children listed before parents."""
    heights: dict[int, tuple[float, float]] = {}
    for node in nodes:
        op = node.op
        if op == "const":
            value = node.value  # type: ignore[attr-defined]
            heights[id(node)] = (_log2_int(value.numerator), _log2_int(value.denominator))
        elif op in ("add", "sub"):
            u1, l1 = heights[id(node.left)]  # type: ignore[attr-defined]
            u2, l2 = heights[id(node.right)]  # type: ignore[attr-defined]
            heights[id(node)] = (max(u1 + l2, l1 + u2) + 1.0, l1 + l2)
        elif op == "mul":
            u1, l1 = heights[id(node.left)]  # type: ignore[attr-defined]
            u2, l2 = heights[id(node.right)]  # type: ignore[attr-defined]
            heights[id(node)] = (u1 + u2, l1 + l2)
        elif op == "div":
            u1, l1 = heights[id(node.left)]  # type: ignore[attr-defined]
            u2, l2 = heights[id(node.right)]  # type: ignore[attr-defined]
            heights[id(node)] = (u1 + l2, l1 + u2)
        elif op == "neg":
            heights[id(node)] = heights[id(node.child)]  # type: ignore[attr-defined]
        elif op in ("sqrt", "cbrt"):
            u, l = heights[id(node.child)]  # type: ignore[attr-defined]
            k = node.radical_degree
            # (U/L)^(1/k) = (U L^(k-1))^(1/k) / L
            heights[id(node)] = ((u + (k - 1) * l) / k, l)
        elif op == "root":
            up, lp = heights[id(node.p)]  # type: ignore[attr-defined]
            uq, lq = heights[id(node.q)]  # type: ignore[attr-defined]
            u = max(up + lp + 2 * lq, uq + 3 * lp + 2 * lq) + 1.0
            heights[id(node)] = (u, lp + lq)
        else:
            raise TypeError(f"unknown expression node {op!r}")
    return heights


def degree_bound(nodes: Sequence[ExactReal]) -> int:
    degree = 1
    for node in nodes:
        degree *= node.radical_degree
    return degree


def separation_bits(nodes: Sequence[ExactReal], degree_cap: int) -> float:
    """
    Bits below which a nonzero value cannot hide.

    `nodes` is the expression in post-order (root last). Raises
    PrecisionExhausted when the degree product exceeds `degree_cap`.
    """
    degree = degree_bound(nodes)
    if degree > degree_cap:
        raise PrecisionExhausted(
            f"degree bound {degree} exceeds the configured cap {degree_cap}"
        )
    log_u, log_l = node_heights(nodes)[id(nodes[-1])]
    bits = (degree - 1) * log_u + log_l
    logger.debug("Separation bound: degree=%d, bits=%.1f", degree, bits)
    return bits
