"""Projective conics: duality, pencils and common points or tangents."""

from origami_engine.conics.conic import (
    Conic,
    conic_from_coefficients,
    conic_from_parabola,
    determinant,
    dual,
    evaluate,
    on_conic,
    rank,
    same_conic,
    tangent_to,
)
from origami_engine.conics.matrix import adjoint, matrix
from origami_engine.conics.pencil import (
    DoubleLine,
    NoRealLines,
    Pencil,
    TwoLines,
    common_points,
    common_tangents,
    degenerate_params,
    determinant_coefficients,
    intersect_line_conic,
    split_degenerate,
)

__all__ = [
    "Conic",
    "DoubleLine",
    "NoRealLines",
    "Pencil",
    "TwoLines",
    "adjoint",
    "common_points",
    "common_tangents",
    "conic_from_coefficients",
    "conic_from_parabola",
    "degenerate_params",
    "determinant",
    "determinant_coefficients",
    "dual",
    "evaluate",
    "intersect_line_conic",
    "matrix",
    "on_conic",
    "rank",
    "same_conic",
    "split_degenerate",
    "tangent_to",
]
