import random
from fractions import Fraction

import pytest

from origami_engine.conics import (
    Conic,
    DoubleLine,
    NoRealLines,
    Pencil,
    TwoLines,
    adjoint,
    common_points,
    common_tangents,
    conic_from_coefficients,
    conic_from_parabola,
    degenerate_params,
    determinant,
    determinant_coefficients,
    dual,
    intersect_line_conic,
    matrix,
    on_conic,
    rank,
    same_conic,
    split_degenerate,
    tangent_to,
)
from origami_engine.conics.matrix import det, scale
from origami_engine.conics.pencil import split_order
from origami_engine.errors import (
    ConicError,
    DegenerateConic,
    DegenerateParabola,
    DegeneratePencil,
    NotDegenerate,
)
from origami_engine.exactnum import (
    add,
    algebraic_degree,
    const,
    equals,
    mul,
    neg,
    power,
    sign,
    sqrt,
    sub,
    to_fraction,
)
from origami_engine.geom import LINE_AT_INFINITY, Line, Point, ProjPoint, same_line, same_point, to_affine


@pytest.fixture
def parabola():
    """y = x^2 / 2."""
    return conic_from_coefficients(Fraction(1, 2), 0, 0, 0, -1, 0)


@pytest.fixture
def sideways():
    """(y + 3/8)^2 = x / 4."""
    return conic_from_coefficients(0, 0, 1, Fraction(-1, 4), Fraction(3, 4), Fraction(9, 64))


def _affine(points):
    return sorted(((float(p.x), float(p.y)) for p in map(to_affine, points)))


def _matrices_equal(a, b) -> bool:
    return all(equals(a[i][j], b[i][j]) for i in range(3) for j in range(3))


# test matrices are normalized and checked for symmetry
def test_conic_construction():
    c = conic_from_coefficients(2, 0, 2, 0, 0, -2)  # x^2 + y^2 = 1, scaled
    assert equals(c.m[0][0], 1)
    assert equals(c.m[2][2], -1)
    assert on_conic(Point.of(0, 1), c)
    assert not on_conic(Point.of(1, 1), c)
    with pytest.raises(ConicError):
        Conic.from_matrix(matrix([[1, 2, 0], [0, 1, 0], [0, 0, 1]]))
    with pytest.raises(ConicError):
        conic_from_coefficients(0, 0, 0, 0, 0, 0)


# test the focus-directrix conic
def test_conic_from_parabola():
    c = conic_from_parabola(Point.of(0, 1), Line.from_coefficients(0, 1, 1))
    assert same_conic(c, conic_from_coefficients(1, 0, 0, 0, -4, 0))
    with pytest.raises(DegenerateParabola):
        conic_from_parabola(Point.of(0, -1), Line.from_coefficients(0, 1, 1))


# test the dual conic of y = x^2/2 is v = u^2/2
def test_dual_of_parabola(parabola):
    assert same_conic(dual(parabola), conic_from_coefficients(Fraction(1, 2), 0, 0, 0, -1, 0))


# test the dual of the second 9-gon parabola is v^2 + 6uv - 16u = 0
def test_dual_of_sideways_parabola(sideways):
    assert same_conic(dual(sideways), conic_from_coefficients(0, 6, 1, -16, 0, 0))


# test dual of dual is the conic again, and degenerate conics have none
def test_dual_involution():
    ellipse = conic_from_coefficients(1, 1, 3, -2, 5, -7)
    assert same_conic(dual(dual(ellipse)), ellipse)
    with pytest.raises(DegenerateConic):
        dual(conic_from_coefficients(1, 0, -1, 0, 0, 0))


# test adj(adj(M)) = det(M) M on random symmetric surd matrices
def test_adjoint_twice():
    rng = random.Random(5)
    surds = [Fraction(1), Fraction(-2, 3), sqrt(2), sqrt(3), add(1, sqrt(5))]
    for _ in range(100):
        entries = [rng.choice(surds) if rng.random() < 0.3 else Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(6)]
        a, b, c, d, e, f = entries
        m = matrix([[a, b, c], [b, d, e], [c, e, f]])
        assert _matrices_equal(adjoint(adjoint(m)), scale(det(m), m))


# test rank classification
def test_rank():
    assert rank(conic_from_coefficients(1, 0, 1, 0, 0, -1)) == 3  # noqa: PLR2004
    assert rank(conic_from_coefficients(1, 0, -1, 0, 0, 0)) == 2  # noqa: PLR2004
    assert rank(conic_from_coefficients(1, 0, 0, 0, 0, 0)) == 1


# test splitting degenerate conics into lines
def test_split_degenerate():
    split = split_degenerate(conic_from_coefficients(1, 0, -1, 0, 0, 0))
    assert isinstance(split, TwoLines)
    slopes = sorted(float(l.slope) for l in (split.first, split.second))
    assert slopes == [-1.0, 1.0]

    double = split_degenerate(conic_from_coefficients(1, -2, 1, 0, 0, 0))  # (x - y)^2
    assert isinstance(double, DoubleLine)
    assert same_line(double.line, Line.from_coefficients(1, -1, 0))

    complex_pair = split_degenerate(conic_from_coefficients(1, 0, 1, -2, 0, 1))  # (x-1)^2 + y^2
    assert isinstance(complex_pair, NoRealLines)
    assert same_point(to_affine(complex_pair.vertex), Point.of(1, 0))

    with pytest.raises(NotDegenerate):
        split_degenerate(conic_from_coefficients(1, 0, 1, 0, 0, -1))


# test a pair with a surd vertex splits exactly
def test_split_with_surds():
    # (y - sqrt(2) x)(y + x - 1)
    s = sqrt(2)
    a = mul(-1, s)
    b = sub(1, s)
    c = conic_from_coefficients(a, b, 1, s, -1, 0)
    assert sign(determinant(c)) == 0
    split = split_degenerate(c)
    assert isinstance(split, TwoLines)
    expected = [Line.from_coefficients(s, -1, 0), Line.from_coefficients(1, 1, -1)]
    for line in expected:
        assert any(same_line(line, got) for got in (split.first, split.second))


# test line-conic intersections, including the point at infinity
def test_intersect_line_conic():
    c = conic_from_coefficients(1, 0, 0, 0, -1, 0)  # y = x^2
    assert _affine(intersect_line_conic(Line.from_coefficients(0, 1, -1), c)) == [(-1.0, 1.0), (1.0, 1.0)]
    assert _affine(intersect_line_conic(Line.from_coefficients(0, 1, 0), c)) == [(0.0, 0.0)]
    assert intersect_line_conic(Line.from_coefficients(0, 1, 1), c) == []
    vertical = intersect_line_conic(Line.from_coefficients(1, 0, 0), c)
    assert len(vertical) == 2  # noqa: PLR2004
    assert sum(1 for p in vertical if p.at_infinity) == 1
    at_infinity = intersect_line_conic(LINE_AT_INFINITY, c)
    assert len(at_infinity) == 1 and at_infinity[0].at_infinity


# test the pencil determinant matches det(A - lambda B)
def test_pencil_determinant(parabola, sideways):
    pen = Pencil(parabola, sideways)
    c0, c1, c2, c3 = determinant_coefficients(pen)
    for lam in (Fraction(-2), Fraction(1, 3), Fraction(5)):
        expected = det(pen.member(lam))
        got = add(add(c0, mul(c1, lam)), add(mul(c2, power(lam, 2)), mul(c3, power(lam, 3))))
        assert equals(got, expected)
    for lam in degenerate_params(pen):
        assert sign(det(pen.member(lam))) == 0
    with pytest.raises(DegeneratePencil):
        Pencil(parabola, parabola)


# test common points of a parabola and a circle
def test_common_points():
    parabola = conic_from_coefficients(1, 0, 0, 0, -1, 0)  # y = x^2
    circle = conic_from_coefficients(1, 0, 1, 0, 0, -2)  # x^2 + y^2 = 2
    assert _affine(common_points(parabola, circle)) == [(-1.0, 1.0), (1.0, 1.0)]
    for p in common_points(parabola, circle):
        assert to_fraction(p.z) == 1
        assert to_fraction(p.y) == 1
        assert abs(to_fraction(p.x)) == 1
    far = conic_from_coefficients(1, 0, 1, 0, 0, -1)
    shifted = conic_from_coefficients(1, 0, 1, -10, 0, 24)  # circle about (5, 0), radius 1
    assert common_points(far, shifted) == []


# test the circle and y = x^2 share the tangent y = 0
def test_common_tangent_circle_parabola():
    parabola = conic_from_coefficients(1, 0, 0, 0, -1, 0)
    circle = conic_from_coefficients(1, 0, 1, -2, -2, 1)
    tangents = common_tangents(parabola, circle)
    x_axis = Line.from_coefficients(0, 1, 0)
    assert any(isinstance(t, Line) and same_line(t, x_axis) for t in tangents)
    for t in tangents:
        assert isinstance(t, Line)
        a, b, c = float(t.a), float(t.b), float(t.c)
        # distance from the centre (1, 1) equals the radius
        assert abs(abs(a + b + c) / (a * a + b * b) ** 0.5 - 1) < 1e-9  # noqa: PLR2004


# test the 9-gon parabolas have three affine common tangents plus infinity
def test_ninegon_tangents(parabola, sideways):
    tangents = common_tangents(parabola, sideways)
    assert tangents[-1] is LINE_AT_INFINITY
    affine = tangents[:-1]
    assert len(affine) == 3  # noqa: PLR2004
    expected = [-0.9396926, 0.1736482, 0.7660444]
    for line, want in zip(affine, expected):
        mu = float(line.slope)
        assert abs(mu - want) < 1e-7  # noqa: PLR2004
        assert abs(4 * mu**3 - 3 * mu + 0.5) < 1e-9  # noqa: PLR2004
        assert algebraic_degree(line.b) <= 9  # noqa: PLR2004
        assert algebraic_degree(line.c) <= 9  # noqa: PLR2004


# test homogeneous points on conics
def test_on_conic_projective(parabola):
    assert on_conic(ProjPoint.of(0, 1, 0), parabola)
    assert on_conic(ProjPoint.of(2, 2, 1), parabola)


# test tangency through the dual conic
def test_tangent_to():
    c = conic_from_coefficients(1, 0, 0, 0, -1, 0)
    assert tangent_to(Line.from_coefficients(0, 1, 0), c)
    assert tangent_to(Line.from_coefficients(2, -1, -1), c)  # y = 2x - 1 touches at (1, 1)
    assert not tangent_to(Line.from_coefficients(0, 1, -1), c)


# test common points need two non-degenerate conics
def test_common_points_rejects_degenerate(parabola):
    line_pair = conic_from_coefficients(1, 0, -1, 0, 0, 0)
    with pytest.raises(DegenerateConic):
        common_points(line_pair, parabola)
    with pytest.raises(DegenerateConic):
        common_points(parabola, line_pair)


# test pencil members are split rational first, then by size
def test_split_order():
    ordered = split_order([sqrt(2), const(5), const(-1), neg(sqrt(3))])
    assert [float(v) for v in ordered] == pytest.approx([-1.0, 5.0, 2**0.5, -(3**0.5)])


# test a tangency comes back once, in closed form
def test_common_points_tangency():
    parabola = conic_from_coefficients(1, 0, 0, 0, -1, 0)  # y = x^2
    circle = conic_from_coefficients(1, 0, 1, 0, -1, 0)  # x^2 + (y - 1/2)^2 = 1/4
    (origin,) = common_points(parabola, circle)
    assert [to_fraction(v) for v in origin.coordinates()] == [0, 0, 1]


# test the common tangents of two circles include the two outer tangents exactly
def test_common_tangents_of_circles():
    left = conic_from_coefficients(1, 0, 1, 0, -2, 0)  # centre (0, 1), radius 1
    right = conic_from_coefficients(1, 0, 1, -8, -2, 16)  # centre (4, 1), radius 1
    tangents = common_tangents(left, right)
    assert len(tangents) == 4  # noqa: PLR2004
    for y in (0, 2):
        assert any(same_line(t, Line.from_coefficients(0, 1, -y)) for t in tangents)
