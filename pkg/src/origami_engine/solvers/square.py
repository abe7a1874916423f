"""
Square roots by a single O5 fold.

The folds through Q = (0, -r/4) that carry the focus (0, 1) onto the
directrix y = -1 are the tangents from Q to y = x^2/4. They touch at
x = +-sqrt(r), and the focus lands on the directrix right below.
"""

from __future__ import annotations

from origami_engine.errors import NonPositiveInput
from origami_engine.exactnum import ExactReal, Number, const, div, neg, sign
from origami_engine.folds import FoldEngine, Trace
from origami_engine.folds.macros import marklen
from origami_engine.geom import Line, Point
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)


def sqrt_by_fold(r: Number, engine: FoldEngine | None = None) -> tuple[ExactReal, Trace]:
    r = const(r)
    if sign(r) <= 0:
        raise NonPositiveInput(f"sqrt_by_fold needs r > 0, got {r}")
    engine = engine or FoldEngine()
    focus = engine.given_point(Point.of(0, 1), "F")
    directrix = engine.given_line(Line.from_coefficients(0, 1, 1), "d")
    q = engine.given_point(Point(const(0), neg(div(r, 4))), "Q")

    folds = engine.o5(focus, directrix, q).lines
    # sorted by slope: the last fold touches at +sqrt(r)
    image = engine.reflect(focus, folds[-1])
    engine.trace.name("S", image)
    logger.debug("sqrt_by_fold(%s): %d folds", r, len(folds))
    return image.x, engine.trace


def hypot_by_fold(x: Number, engine: FoldEngine | None = None) -> tuple[ExactReal, Trace]:
    """sqrt(1 + x^2), marked off along the unit axis."""
    engine = engine or FoldEngine()
    origin = engine.given_point(Point.of(0, 0), "O")
    unit = engine.given_point(Point.of(1, 0), "E")
    top = engine.given_point(Point(const(0), const(x)), "T")
    marked = marklen(engine, unit, top, origin, unit)
    engine.trace.name("H", marked)
    return marked.x, engine.trace
