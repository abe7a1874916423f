"""End-to-end fold constructions: square roots, cubics, trisection, quartics."""

from origami_engine.solvers.cubic import (
    POLYGON_MINPOLYS,
    cubic_by_fold,
    duplicate_cube,
    ninegon_cos,
    polygon_cosine,
    solve_cubic,
    trisect,
)
from origami_engine.solvers.quartic import quartic_roots
from origami_engine.solvers.square import hypot_by_fold, sqrt_by_fold

__all__ = [
    "POLYGON_MINPOLYS",
    "cubic_by_fold",
    "duplicate_cube",
    "hypot_by_fold",
    "ninegon_cos",
    "polygon_cosine",
    "quartic_roots",
    "solve_cubic",
    "sqrt_by_fold",
    "trisect",
]
