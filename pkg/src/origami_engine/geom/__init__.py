"""Exact affine and projective primitives."""

from origami_engine.geom.affine import (
    Line,
    Point,
    distance,
    foot,
    incident,
    intersect,
    is_parallel,
    is_perpendicular,
    line_through,
    midpoint,
    parallel_through,
    perp_bisector,
    perpendicular_through,
    point_line_distance2,
    points_on,
    reflect_line,
    reflect_point,
    same_line,
    same_point,
    squared_distance,
)
from origami_engine.geom.projective import (
    LINE_AT_INFINITY,
    LineAtInfinity,
    ProjPoint,
    dual_exchange,
    embed,
    same_projective_point,
    to_affine,
)

__all__ = [
    "LINE_AT_INFINITY",
    "Line",
    "LineAtInfinity",
    "Point",
    "ProjPoint",
    "distance",
    "dual_exchange",
    "embed",
    "foot",
    "incident",
    "intersect",
    "is_parallel",
    "is_perpendicular",
    "line_through",
    "midpoint",
    "parallel_through",
    "perp_bisector",
    "perpendicular_through",
    "point_line_distance2",
    "points_on",
    "reflect_line",
    "reflect_point",
    "same_line",
    "same_point",
    "same_projective_point",
    "squared_distance",
    "to_affine",
]
