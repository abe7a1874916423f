import random
from fractions import Fraction

import pytest

from origami_engine.errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateLine,
    GeometryError,
    ParallelLines,
    PointAtInfinity,
)
from origami_engine.exactnum import const, equals, sqrt, to_fraction
from origami_engine.geom import (
    LINE_AT_INFINITY,
    Line,
    LineAtInfinity,
    Point,
    ProjPoint,
    distance,
    dual_exchange,
    embed,
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
    reflect_line,
    reflect_point,
    same_line,
    same_point,
    same_projective_point,
    to_affine,
)


@pytest.fixture
def unit_square():
    return Point.of(0, 0), Point.of(1, 0), Point.of(1, 1), Point.of(0, 1)


# test lines are normalized so equal lines compare entry by entry
def test_line_normalization():
    l = Line.from_coefficients(2, -4, 6)
    assert to_fraction(l.a) == 1
    assert to_fraction(l.b) == -2  # noqa: PLR2004
    assert to_fraction(l.c) == 3  # noqa: PLR2004
    horizontal = Line.from_coefficients(0, 5, -10)
    assert to_fraction(horizontal.b) == 1
    assert horizontal.slope is not None and to_fraction(horizontal.slope) == 0
    with pytest.raises(DegenerateLine):
        Line.from_coefficients(0, 0, 1)


# test line through two points and its predicates
def test_line_through(unit_square):
    o, e, c, _ = unit_square
    diagonal = line_through(o, c)
    assert incident(o, diagonal)
    assert incident(c, diagonal)
    assert not incident(e, diagonal)
    assert to_fraction(diagonal.slope) == 1
    assert line_through(e, Point.of(1, 5)).slope is None
    with pytest.raises(CoincidentPoints):
        line_through(o, Point.of(0, 0))


# test intersections and their failure modes
def test_intersect(unit_square):
    o, e, c, t = unit_square
    p = intersect(line_through(o, c), line_through(e, t))
    assert same_point(p, Point.of(Fraction(1, 2), Fraction(1, 2)))
    with pytest.raises(ParallelLines):
        intersect(line_through(o, e), line_through(t, c))
    with pytest.raises(CoincidentLines):
        intersect(line_through(o, e), Line.from_coefficients(0, 3, 0))


# test perpendicular bisector is equidistant and perpendicular
def test_perp_bisector(unit_square):
    o, _, c, _ = unit_square
    bisector = perp_bisector(o, c)
    assert incident(midpoint(o, c), bisector)
    assert is_perpendicular(bisector, line_through(o, c))
    assert incident(Point.of(1, 0), bisector)
    with pytest.raises(CoincidentPoints):
        perp_bisector(o, o)


# test reflection and foot of the perpendicular
def test_reflect_and_foot():
    l = Line.from_coefficients(1, -1, 0)  # y = x
    image = reflect_point(Point.of(3, 1), l)
    assert same_point(image, Point.of(1, 3))
    f = foot(Point.of(3, 1), l)
    assert same_point(f, Point.of(2, 2))
    assert to_fraction(point_line_distance2(Point.of(3, 1), l)) == 2  # noqa: PLR2004


# test reflecting twice is the identity on random rational points
def test_reflection_involution():
    rng = random.Random(11)
    for _ in range(20):
        l = Line.from_coefficients(rng.randint(-5, 5) or 1, rng.randint(-5, 5), rng.randint(-5, 5))
        p = Point.of(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), rng.randint(-9, 9))
        assert same_point(reflect_point(reflect_point(p, l), l), p)


# test reflecting a line across a fold
def test_reflect_line():
    x_axis = Line.from_coefficients(0, 1, 0)
    fold = Line.from_coefficients(1, -1, 0)
    assert same_line(reflect_line(x_axis, fold), Line.from_coefficients(1, 0, 0))


# test perpendicular and parallel lines through a point
def test_perpendicular_and_parallel():
    l = Line.from_coefficients(1, 2, -3)
    p = Point.of(4, -1)
    perp = perpendicular_through(p, l)
    par = parallel_through(p, l)
    assert incident(p, perp) and is_perpendicular(perp, l)
    assert incident(p, par) and is_parallel(par, l)


# test surd coordinates keep exact incidence
def test_surd_geometry():
    s = sqrt(2)
    p = Point(s, s)
    assert incident(p, Line.from_coefficients(1, -1, 0))
    assert equals(distance(Point.of(0, 0), p), 2)
    assert same_point(reflect_point(p, Line.from_coefficients(0, 1, 0)), Point(s, -s))


# test projective embedding and point/line duality
def test_projective_duality():
    p = ProjPoint.of(2, 4, 2)
    assert same_projective_point(p, embed(Point.of(1, 2)))
    assert same_point(to_affine(p), Point.of(1, 2))
    with pytest.raises(PointAtInfinity):
        to_affine(ProjPoint.of(1, 1, 0))
    with pytest.raises(GeometryError):
        ProjPoint.of(0, 0, 0)

    l = dual_exchange(ProjPoint.of(1, -1, 3))
    assert isinstance(l, Line)
    assert same_line(l, Line.from_coefficients(1, -1, 3))
    back = dual_exchange(l)
    assert same_projective_point(back, ProjPoint.of(1, -1, 3))


# test the line at infinity is a singleton marker
def test_line_at_infinity():
    assert LineAtInfinity() is LINE_AT_INFINITY
    assert dual_exchange(ProjPoint(const(0), const(0), const(5))) is LINE_AT_INFINITY
    assert same_projective_point(dual_exchange(LINE_AT_INFINITY), ProjPoint.of(0, 0, 1))
    assert str(LINE_AT_INFINITY) == "line at infinity"
