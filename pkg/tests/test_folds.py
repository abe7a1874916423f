import json
import random
from fractions import Fraction

import pytest

from origami_engine.errors import (
    AxiomNotAvailable,
    CoincidentLines,
    CoincidentPoints,
    ConfigError,
    DegenerateParabola,
    DegenerateRatio,
    IdenticalParabolas,
    NotCollinear,
)
from origami_engine.exactnum import cbrt, equals, mul, power, sign, sqrt, sub, to_fraction
from origami_engine.folds import FoldEngine, FoldResult, fold_image, macros, o1, o3, o4, o5, o6, replay
from origami_engine.geom import (
    Line,
    Point,
    incident,
    is_perpendicular,
    line_through,
    same_line,
    same_point,
    squared_distance,
)


def _same_lines(first, second) -> bool:
    return len(first) == len(second) and all(same_line(a, b) for a, b in zip(first, second))


def _random_point(rng: random.Random) -> Point:
    return Point.of(Fraction(rng.randint(-12, 12), rng.randint(1, 6)), Fraction(rng.randint(-12, 12), rng.randint(1, 6)))


# test O1 and O3 on simple points
def test_o1_o3():
    p, q = Point.of(0, 0), Point.of(2, 2)
    assert to_fraction(o1(p, q).slope) == 1
    bisector = o3(p, q)
    assert incident(Point.of(1, 1), bisector)
    assert to_fraction(bisector.slope) == -1


# test O4 returns both bisectors sorted by slope, one for parallel lines
def test_o4():
    x_axis = Line.from_coefficients(0, 1, 0)
    y_axis = Line.from_coefficients(1, 0, 0)
    result = o4(x_axis, y_axis)
    assert [to_fraction(l.slope) for l in result.lines] == [-1, 1]

    parallel = o4(x_axis, Line.from_coefficients(0, 1, -2))
    assert len(parallel) == 1
    assert same_line(parallel.lines[0], Line.from_coefficients(0, 1, -1))
    with pytest.raises(CoincidentLines):
        o4(x_axis, x_axis)


# test O5 square root construction: tangents from (0, -r/4) to x^2 = 4y
@pytest.mark.parametrize("r", [2, 3, 5, 7, 10])
def test_o5_square_root(r):
    focus, directrix = Point.of(0, 1), Line.from_coefficients(0, 1, 1)
    result = o5(focus, directrix, Point.of(0, Fraction(-r, 4)))
    assert len(result) == 2  # noqa: PLR2004
    image = fold_image(focus, result.lines[-1])
    assert incident(image, directrix)
    assert sign(sub(mul(image.x, image.x), r)) == 0
    assert sign(image.x) == 1


# test O5 tangent, empty and incident cases
def test_o5_edge_cases():
    focus, directrix = Point.of(0, 1), Line.from_coefficients(0, 1, 1)
    single = o5(focus, directrix, Point.of(2, 1))
    assert len(single) == 1
    assert to_fraction(single.lines[0].slope) == 1
    assert o5(focus, directrix, Point.of(0, 3)) == FoldResult()
    on_line = Point.of(0, -1)
    with pytest.raises(DegenerateParabola):
        o5(on_line, directrix, Point.of(1, 1))
    assert len(o5(on_line, directrix, Point.of(1, 1), allow_incident=True)) == 2  # noqa: PLR2004


# test O6 doubles the cube with a single fold
def test_o6_delian():
    result = o6(
        Point.of(0, Fraction(1, 2)),
        Line.from_coefficients(0, 1, Fraction(1, 2)),
        Point.of(-1, 0),
        Line.from_coefficients(1, 0, -1),
    )
    assert len(result) == 1
    assert result.at_infinity
    assert result.degenerate
    assert equals(result.lines[0].slope, cbrt(2))


# test O6 fold carries both points onto their lines
def test_o6_trisection_images():
    p, l = Point.of(0, Fraction(1, 2)), Line.from_coefficients(0, 1, Fraction(1, 2))
    q, m = Point.of(Fraction(-1, 16), Fraction(-3, 8)), Line.from_coefficients(1, 0, Fraction(-1, 16))
    result = o6(p, l, q, m)
    assert len(result) == 3  # noqa: PLR2004
    for fold in result.lines:
        assert incident(fold_image(p, fold), l)
        assert incident(fold_image(q, fold), m)
        mu = fold.slope
        assert sign(sub(sub(mul(4, power(mu, 3)), mul(3, mu)), Fraction(1, 2))) == 0


# test O6 rejects degenerate inputs
def test_o6_errors():
    p, l = Point.of(0, 1), Line.from_coefficients(0, 1, 1)
    with pytest.raises(IdenticalParabolas):
        o6(p, l, Point.of(0, 1), Line.from_coefficients(0, 1, 1))
    with pytest.raises(DegenerateParabola):
        o6(Point.of(0, -1), l, p, Line.from_coefficients(1, 0, 0))


# test the engine gates axioms by level
def test_engine_level_gate():
    engine = FoldEngine("euclidean")
    p, l = Point.of(0, 1), Line.from_coefficients(0, 1, 1)
    with pytest.raises(AxiomNotAvailable):
        engine.o6(p, l, Point.of(1, 0), Line.from_coefficients(1, 0, 1))
    with pytest.raises(AxiomNotAvailable):
        FoldEngine("thalian").o4(l, Line.from_coefficients(1, 0, 0))
    with pytest.raises(ConfigError):
        FoldEngine("hyperbolic")


# test derived O1 equals O1 on random rational point pairs
def test_derived_o1_matches_direct():
    rng = random.Random(42)
    for _ in range(50):
        p, q = _random_point(rng), _random_point(rng)
        if same_point(p, q):
            continue
        engine = FoldEngine("reduced")
        assert same_line(engine.o1(p, q), o1(p, q))
        assert engine.trace.count("O1") == 0
        assert engine.trace.count("O5") >= 2  # noqa: PLR2004


# test derived O4 equals O4 on random rational line pairs
def test_derived_o4_matches_direct():
    rng = random.Random(43)
    checked = 0
    while checked < 50:  # noqa: PLR2004
        a, b, c, d = (_random_point(rng) for _ in range(4))
        if same_point(a, b) or same_point(c, d):
            continue
        l, m = line_through(a, b), line_through(c, d)
        if same_line(l, m):
            continue
        engine = FoldEngine("reduced")
        for point in (a, b, c, d):
            engine.given_point(point)
        assert _same_lines(engine.o4(l, m).lines, o4(l, m).lines)
        checked += 1
    for l, m in [
        (Line.from_coefficients(0, 1, 0), Line.from_coefficients(0, 1, -2)),
        (Line.from_coefficients(1, 0, -1), Line.from_coefficients(2, 0, 3)),
        (Line.from_coefficients(1, -1, 0), Line.from_coefficients(1, -1, -4)),
    ]:
        engine = FoldEngine("reduced")
        derived = engine.o4(l, m).lines
        assert _same_lines(derived, o4(l, m).lines)
        assert json.dumps(replay(engine.trace).to_json()) == json.dumps(engine.trace.to_json())
    (midline,) = FoldEngine("reduced").o4(Line.from_coefficients(0, 1, 0), Line.from_coefficients(0, 1, -2)).lines
    assert same_line(midline, Line.from_coefficients(0, 1, -1))


# test macros from O1-O3
def test_translate_and_midpoint():
    engine = FoldEngine("thalian")
    origin = engine.given_point(Point.of(0, 0))
    a, b = engine.given_point(Point.of(1, 0)), engine.given_point(Point.of(3, 1))
    moved = macros.translate(engine, Point.of(0, 2), a, b)
    assert same_point(moved, Point.of(2, 3))
    collinear = macros.translate(engine, Point.of(5, 2), a, b)
    assert same_point(collinear, Point.of(7, 3))
    assert same_point(macros.midpoint(engine, a, b), Point.of(2, Fraction(1, 2)))
    assert same_point(macros.translate(engine, origin, a, a), origin)


# test scale and its preconditions
def test_scale():
    engine = FoldEngine("thalian")
    a, b, c = Point.of(0, 0), Point.of(3, 0), Point.of(2, 0)
    assert same_point(macros.scale(engine, a, b, c, Point.of(2, 4)), Point.of(3, 6))
    with pytest.raises(DegenerateRatio):
        macros.scale(engine, a, b, a, Point.of(1, 1))
    with pytest.raises(NotCollinear):
        macros.scale(engine, a, Point.of(1, 1), c, Point.of(2, 4))


# test marklen lays a length on a ray, with O4 required
def test_marklen():
    engine = FoldEngine("pythagorean")
    o, e = engine.given_point(Point.of(0, 0)), engine.given_point(Point.of(1, 0))
    engine.given_point(Point.of(0, 1))
    diagonal = macros.marklen(engine, o, e, o, Point.of(1, 1))
    assert equals(diagonal.x, sqrt(Fraction(1, 2)))
    assert equals(diagonal.x, diagonal.y)
    with pytest.raises(AxiomNotAvailable):
        macros.marklen(FoldEngine("thalian"), o, e, o, Point.of(1, 1))
    with pytest.raises(CoincidentPoints):
        macros.marklen(engine, o, o, o, e)


# test reflect, perpendicular and reciprocal macros
def test_reflect_perpendicular_reciprocal():
    engine = FoldEngine("thalian")
    o, e = engine.given_point(Point.of(0, 0)), engine.given_point(Point.of(1, 0))
    x_axis = engine.o1(o, e)
    a = Point.of(1, 2)
    assert same_point(macros.reflect(engine, a, x_axis), Point.of(1, -2))
    perp = macros.perpendicular(engine, a, x_axis)
    assert is_perpendicular(perp, x_axis) and incident(a, perp)
    on_line = macros.perpendicular(engine, Point.of(3, 0), x_axis)
    assert same_line(on_line, Line.from_coefficients(1, 0, -3))
    t = engine.given_point(Point.of(0, 4))
    assert same_point(macros.reciprocal(engine, o, e, t), Point.of(0, Fraction(1, 4)))


# test complex square, product and inverse on points
@pytest.mark.parametrize(
    ("w", "square", "inverse"),
    [
        ((1, 2), (-3, 4), (Fraction(1, 5), Fraction(-2, 5))),
        ((0, 3), (-9, 0), (0, Fraction(-1, 3))),
        ((3, 0), (9, 0), (Fraction(1, 3), 0)),
        ((Fraction(3, 5), Fraction(4, 5)), (Fraction(-7, 25), Fraction(24, 25)), (Fraction(3, 5), Fraction(-4, 5))),
    ],
)
def test_complex_macros(w, square, inverse):
    engine = FoldEngine("thalian")
    o, e = engine.given_point(Point.of(0, 0)), engine.given_point(Point.of(1, 0))
    engine.given_point(Point.of(1, 2))
    point = engine.given_point(Point.of(*w))
    assert same_point(macros.complex_square(engine, o, e, point), Point.of(*square))
    assert same_point(macros.complex_inverse(engine, o, e, point), Point.of(*inverse))


def test_complex_product_and_frames():
    engine = FoldEngine("thalian")
    o, e = engine.given_point(Point.of(0, 0)), engine.given_point(Point.of(1, 0))
    w, z = engine.given_point(Point.of(1, 2)), engine.given_point(Point.of(2, -1))
    assert same_point(macros.complex_product(engine, o, e, w, z), Point.of(4, 3))
    # frame with origin (1, 1) and unit 2i, where w = 1 + i sits at (-1, 3)
    shifted = FoldEngine("thalian")
    o2, e2 = shifted.given_point(Point.of(1, 1)), shifted.given_point(Point.of(1, 3))
    w2 = shifted.given_point(Point.of(-1, 3))
    assert same_point(macros.complex_square(shifted, o2, e2, w2), Point.of(-3, 1))
    with pytest.raises(DegenerateRatio):
        macros.complex_inverse(engine, o, e, o)
    with pytest.raises(DegenerateRatio):
        macros.complex_square(engine, o, o, w)


# test traces record ids in order and replay identically
def test_trace_and_replay():
    engine = FoldEngine()
    p = engine.given_point(Point.of(0, Fraction(1, 2)), "P")
    l = engine.given_line(Line.from_coefficients(0, 1, Fraction(1, 2)), "l")
    q = engine.given_point(Point.of(-1, 0), "Q")
    m = engine.given_line(Line.from_coefficients(1, 0, -1), "m")
    fold = engine.o6(p, l, q, m).lines[0]
    engine.trace.name("f", fold)
    engine.reflect(p, fold)

    trace = engine.trace
    assert trace.count("O6") == 1
    for step in trace.steps:
        assert all(arg < min(step.out, default=len(trace.objects)) for arg in step.args)
    data = trace.to_json()
    assert data["names"] == {"P": 0, "Q": 2, "f": 4, "l": 1, "m": 3}
    assert json.dumps(replay(trace).to_json(), sort_keys=True) == json.dumps(data, sort_keys=True)


# test two identical constructions serialize identically
def test_trace_deterministic():
    def build():
        engine = FoldEngine("euclidean")
        focus = engine.given_point(Point.of(0, 1))
        directrix = engine.given_line(Line.from_coefficients(0, 1, 1))
        folds = engine.o5(focus, directrix, engine.given_point(Point.of(0, Fraction(-3, 4)))).lines
        engine.reflect(focus, folds[-1])
        return json.dumps(engine.trace.to_json())

    assert build() == build()


# test squared distances survive the fold images
def test_fold_is_isometry():
    fold = Line.from_coefficients(1, -2, 3)
    a, b = Point.of(1, 5), Point.of(-2, 7)
    assert equals(squared_distance(fold_image(a, fold), fold_image(b, fold)), squared_distance(a, b))
