"""
Derived constructions built from engine steps.

Every macro takes a FoldEngine and leaves its work in the engine's trace.
translate, scale, midpoint, perpendicular and reciprocal use O1-O3 only;
marklen also needs O4. The complex macros read points as complex numbers
with a given origin and unit point and stay within O1-O3.
"""

from __future__ import annotations

from origami_engine.errors import (
    CoincidentPoints,
    DegenerateRatio,
    MissingAuxiliaryPoint,
    NotCollinear,
)
from origami_engine.exactnum import add, mul, sign, sub
from origami_engine.folds.engine import FoldEngine
from origami_engine.geom import (
    Line,
    Point,
    incident,
    is_perpendicular,
    line_through,
    same_point,
)
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)


def _auxiliary(engine: FoldEngine, l: Line) -> Point:
    point = engine.known_point_off(l)
    if point is None:
        raise MissingAuxiliaryPoint(f"no known point off {l} to detour through")
    return point


def midpoint(engine: FoldEngine, a: Point, b: Point) -> Point:
    engine.require_macro("midpoint")
    if same_point(a, b):
        return a
    return engine.o2(engine.o1(a, b), engine.o3(a, b))


def translate(engine: FoldEngine, p: Point, a: Point, b: Point) -> Point:
    """p + (b - a), carried by midlines of the triangle p, a, b."""
    engine.require_macro("translate")
    if same_point(a, b):
        return p
    ab = line_through(a, b)
    if incident(p, ab):
        x = _auxiliary(engine, ab)
        logger.debug("translate: collinear case, detour through %s", x)
        y = translate(engine, x, a, b)
        return translate(engine, p, x, y)
    mid_pb = midpoint(engine, p, b)
    mid_pa = midpoint(engine, p, a)
    mid_ab = midpoint(engine, a, b)
    quarter = midpoint(engine, p, mid_pb)
    d = engine.o2(engine.o1(mid_ab, mid_pb), engine.o1(mid_pa, quarter))
    return engine.o2(engine.o1(a, mid_pb), engine.o1(p, d))


def scale(engine: FoldEngine, a: Point, b: Point, c: Point, p: Point) -> Point:
    """D with D - A = k (P - A), where B - A = k (C - A) along one line."""
    engine.require_macro("scale")
    if same_point(a, c):
        raise DegenerateRatio("ratio AB:AC needs A != C")
    ac = line_through(a, c)
    if not incident(b, ac):
        raise NotCollinear(f"{b} is not on the line through {a} and {c}")
    if same_point(b, c):
        return p
    if same_point(b, a):
        return a
    if incident(p, ac):
        q = _auxiliary(engine, ac)
        r = translate(engine, q, a, p)
        return translate(engine, a, scale(engine, a, b, c, q), scale(engine, a, b, c, r))
    shifted = translate(engine, b, c, p)
    return engine.o2(engine.o1(b, shifted), engine.o1(a, p))


def _dot(o: Point, u: Point, v: Point) -> int:
    return sign(add(mul(sub(u.x, o.x), sub(v.x, o.x)), mul(sub(u.y, o.y), sub(v.y, o.y))))


def marklen(engine: FoldEngine, a: Point, b: Point, o: Point, d: Point) -> Point:
    """The point on the ray from o through d at distance |ab| from o."""
    engine.require_macro("marklen")
    if same_point(a, b):
        raise CoincidentPoints("length to mark is zero")
    if same_point(o, d):
        raise CoincidentPoints("the ray needs a direction point distinct from its origin")
    moved = translate(engine, o, a, b)
    ray = line_through(o, d)
    if incident(moved, ray):
        if _dot(o, moved, d) > 0:
            return moved
        return translate(engine, o, moved, o)
    for fold in engine.o4(engine.o1(o, moved), ray).lines:
        image = engine.reflect(moved, fold)
        if _dot(o, image, d) > 0:
            return image
    raise DegenerateRatio("no bisector carries the length onto the ray")


def reflect(engine: FoldEngine, p: Point, l: Line) -> Point:
    engine.require_macro("reflect")
    return engine.reflect(p, l)


def perpendicular(engine: FoldEngine, p: Point, l: Line) -> Line:
    """The line through p perpendicular to l."""
    engine.require_macro("perpendicular")
    if not incident(p, l):
        return engine.o1(p, engine.reflect(p, l))
    x = _auxiliary(engine, l)
    x_image = engine.reflect(x, l)
    normal = line_through(x, x_image)
    if incident(p, normal):
        return engine.o1(x, x_image)
    return engine.o1(p, translate(engine, p, x, x_image))


def reciprocal(engine: FoldEngine, o: Point, e: Point, t: Point) -> Point:
    """
    The point at 1/t on the axis through o and t.

    o is the origin, e the unit point of one axis and t sits at distance t on
    the perpendicular axis.
    """
    engine.require_macro("reciprocal")
    if same_point(t, o):
        raise DegenerateRatio("reciprocal of zero")
    if same_point(e, o) or not is_perpendicular(line_through(o, e), line_through(o, t)):
        raise NotCollinear("the unit point and t must lie on perpendicular axes through o")
    corner = translate(engine, t, o, e)
    doubled = translate(engine, corner, o, corner)
    apex = engine.o2(engine.o3(o, doubled), engine.o1(o, t))
    return translate(engine, o, t, apex)


# -----------------------------
# Points as complex numbers
# -----------------------------
def _frame(o: Point, e: Point) -> Line:
    if same_point(o, e):
        raise DegenerateRatio("the unit point must differ from the origin")
    return line_through(o, e)


def _foot(engine: FoldEngine, p: Point, l: Line) -> Point:
    return engine.o2(l, perpendicular(engine, p, l))


def complex_square(engine: FoldEngine, o: Point, e: Point, w: Point) -> Point:
    """
    w^2, reading points as complex numbers with o at 0 and e at 1.

    Reflecting e about the line ow gives u, the unit point in the direction
    of w^2. The square is where the line ou meets the perpendicular to ow
    through a w, a being the real part of w.
    """
    engine.require_macro("complex_square")
    axis = _frame(o, e)
    if same_point(w, o):
        return o
    if incident(w, axis):
        return scale(engine, o, w, e, w)
    real = _foot(engine, w, axis)
    if same_point(real, o):
        # (w + 1)^2 - 2w - 1
        shifted = complex_square(engine, o, e, translate(engine, w, o, e))
        once = translate(engine, shifted, w, o)
        return translate(engine, translate(engine, once, w, o), e, o)
    u = engine.reflect(e, line_through(o, w))
    aw = scale(engine, o, real, e, w)
    if incident(aw, line_through(e, u)):
        normal = engine.o1(e, u)
    else:
        normal = engine.o1(aw, translate(engine, aw, e, u))
    return engine.o2(normal, engine.o1(o, u))


def complex_product(engine: FoldEngine, o: Point, e: Point, w: Point, z: Point) -> Point:
    """w z = ((w + z)^2 - w^2 - z^2) / 2."""
    engine.require_macro("complex_product")
    _frame(o, e)
    total = complex_square(engine, o, e, translate(engine, w, o, z))
    rest = translate(engine, total, complex_square(engine, o, e, w), o)
    doubled = translate(engine, rest, complex_square(engine, o, e, z), o)
    return midpoint(engine, o, doubled)


def complex_inverse(engine: FoldEngine, o: Point, e: Point, w: Point) -> Point:
    """1/w: the conjugate of w divided by |w|^2."""
    engine.require_macro("complex_inverse")
    axis = _frame(o, e)
    if same_point(w, o):
        raise DegenerateRatio("inverse of zero")
    if incident(w, axis):
        return scale(engine, o, e, w, e)
    conjugate = engine.reflect(w, axis)
    real = _foot(engine, w, axis)
    if same_point(real, o):
        # w = bi, so |w|^2 = -w^2
        norm = translate(engine, o, complex_square(engine, o, e, w), o)
        return scale(engine, o, e, norm, conjugate)
    # the foot of e on the line through the conjugate is a / w
    return scale(engine, o, e, real, _foot(engine, e, line_through(o, conjugate)))
