"""Fold axioms, the level-gated fold engine, macros and construction traces."""

from origami_engine.folds.axioms import FoldResult, fold_image, o1, o2, o3, o4, o5, o6, sort_lines
from origami_engine.folds.engine import FoldEngine
from origami_engine.folds.trace import Trace, TraceStep, replay

__all__ = [
    "FoldEngine",
    "FoldResult",
    "Trace",
    "TraceStep",
    "fold_image",
    "o1",
    "o2",
    "o3",
    "o4",
    "o5",
    "o6",
    "replay",
    "sort_lines",
]
