"""Exact real arithmetic: lazy expression DAG, exact sign, cubic roots."""

from origami_engine.exactnum.cubic import (
    CubicRoot,
    RealRoot,
    cubic_roots,
    match_root,
    polynomial_roots,
    rational_factors,
    sturm_count,
)
from origami_engine.exactnum.dyadic import DyadicInterval
from origami_engine.exactnum.format import approx, format_fraction, to_decimal, to_expr_string
from origami_engine.exactnum.real import (
    ONE,
    ZERO,
    Const,
    ExactReal,
    Number,
    add,
    algebraic_degree,
    cbrt,
    compare,
    const,
    div,
    equals,
    field_op,
    first_nonzero,
    is_zero,
    mul,
    neg,
    power,
    provably_nonzero,
    refine,
    sign,
    sqrt,
    sub,
    to_fraction,
    try_sign,
)

__all__ = [
    "ONE",
    "ZERO",
    "Const",
    "CubicRoot",
    "DyadicInterval",
    "ExactReal",
    "Number",
    "RealRoot",
    "add",
    "algebraic_degree",
    "approx",
    "cbrt",
    "compare",
    "const",
    "cubic_roots",
    "div",
    "equals",
    "field_op",
    "first_nonzero",
    "format_fraction",
    "is_zero",
    "match_root",
    "mul",
    "neg",
    "polynomial_roots",
    "power",
    "provably_nonzero",
    "rational_factors",
    "refine",
    "sign",
    "sqrt",
    "sturm_count",
    "sub",
    "to_decimal",
    "to_expr_string",
    "to_fraction",
    "try_sign",
]
