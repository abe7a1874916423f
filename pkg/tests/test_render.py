import re
from fractions import Fraction

import pytest

from origami_engine.cli.render import SVG, clip_line, render, sample_conic
from origami_engine.conics import conic_from_coefficients
from origami_engine.errors import EmptyViewport
from origami_engine.exactnum import sqrt
from origami_engine.geom import LINE_AT_INFINITY, Line, Point, same_point

UNIT = (-1.0, -1.0, 1.0, 1.0)


# test a point maps through the affine viewport transform
def test_point_at_center():
    svg = render({"O": Point.of(0, 0)}, UNIT, size=400)
    assert '<circle cx="200.000" cy="200.000" r="3"' in svg
    assert ">O</text>" in svg


def test_y_axis_points_up():
    svg = render({"": Point.of(Fraction(1, 2), Fraction(1, 2))}, UNIT, size=400)
    assert 'cx="300.000" cy="100.000"' in svg
    assert "<text" not in svg


# test the diagonal is clipped exactly at the corners
def test_clip_diagonal():
    start, end = clip_line(Line.from_coefficients(1, -1, 0), UNIT)
    corners = {(float(p.x), float(p.y)) for p in (start, end)}
    assert corners == {(-1.0, -1.0), (1.0, 1.0)}


def test_clip_misses_and_surds():
    assert clip_line(Line.from_coefficients(0, 1, -5), UNIT) is None
    start, end = clip_line(Line.from_coefficients(1, 0, sqrt(2) / 2), UNIT)
    assert same_point(start, Point(-sqrt(2) / 2, -1)) or same_point(end, Point(-sqrt(2) / 2, -1))


# test empty viewports are rejected
@pytest.mark.parametrize("viewport", [(0.0, 0.0, 0.0, 1.0), (1.0, -1.0, -1.0, 1.0)])
def test_empty_viewport(viewport):
    with pytest.raises(EmptyViewport):
        SVG(viewport, 400)


# test sampled parabola pixels stay on y = x^2
def test_parabola_sampling():
    conic = conic_from_coefficients(1, 0, 0, 0, -1, 0)
    branches = sample_conic(conic, UNIT, 64)
    assert len(branches) == 1
    svg = SVG(UNIT, 400)
    for x, y in branches[0]:
        px, py = svg.to_pixels(x, y)
        _, expected = svg.to_pixels(x, x * x)
        assert abs(py - expected) < 0.5  # noqa: PLR2004
        assert 0 <= px <= 400  # noqa: PLR2004


# test a circle splits into two branches
def test_circle_branches():
    circle = conic_from_coefficients(1, 0, 1, 0, 0, Fraction(-1, 4))
    assert len(sample_conic(circle, UNIT, 100)) == 2  # noqa: PLR2004


# test drawing order and skipped objects
def test_render_order_and_skips():
    objects = {
        "P": Point.of(0, 0),
        "l": Line.from_coefficients(0, 1, 0),
        "A": conic_from_coefficients(1, 0, 0, 0, -1, 0),
        "far": Point.of(9, 9),
        "inf": LINE_AT_INFINITY,
        "x": sqrt(2),
    }
    svg = render(objects, UNIT, size=100, samples=32)
    body = [line for line in svg.splitlines() if re.match(r"<(polyline|circle|text)", line)]
    tags = [re.match(r"<(\w+)", line).group(1) for line in body]
    assert tags == ["polyline", "polyline", "circle", "text"]
    assert "far" not in svg


# test identical input renders identical bytes
def test_render_deterministic():
    objects = {"P": Point.of(Fraction(1, 3), 0), "A": conic_from_coefficients(1, 0, 1, 0, 0, -1)}
    assert render(objects, UNIT) == render(objects, UNIT)
