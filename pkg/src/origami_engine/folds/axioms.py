"""
The six fold axioms as pure solvers.

O1-O3 are the straightedge/compass-like primitives from geom. O4 bisects
angles; O5 and O6 are tangent problems on parabolas:

- O5(P, l, Q): folds through Q that carry P onto l are the tangents from Q to
  the parabola with focus P and directrix l.
- O6(P, l, Q, m): folds carrying P onto l and Q onto m at once are the common
  tangents of two parabolas; the slopes are the real roots of a cubic.

Every solver returns its lines sorted by slope, vertical last. A fold that
does not exist gives an empty FoldResult rather than an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from origami_engine.errors import CoincidentLines, DegenerateParabola, IdenticalParabolas
from origami_engine.exactnum import (
    ONE,
    ZERO,
    ExactReal,
    add,
    compare,
    div,
    mul,
    neg,
    polynomial_roots,
    sign,
    sqrt,
    sub,
)
from origami_engine.geom import (
    Line,
    Point,
    foot,
    incident,
    intersect,
    is_parallel,
    line_through,
    perp_bisector,
    reflect_point,
    same_line,
    same_point,
    squared_distance,
)
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class FoldResult:
    lines: tuple[Line, ...] = ()
    degenerate: bool = False
    # the line at infinity is a further common tangent (every O6 on parabolas);
    # degenerate is set along with it
    at_infinity: bool = False

    def __len__(self) -> int:
        return len(self.lines)


def _compare_lines(l: Line, m: Line) -> int:
    sl, sm = l.slope, m.slope
    if sl is None or sm is None:
        return (sl is None) - (sm is None)
    return compare(sl, sm)


def sort_lines(lines: list[Line]) -> tuple[Line, ...]:
    return tuple(sorted(lines, key=cmp_to_key(_compare_lines)))


# -----------------------------
# O1 - O3
# -----------------------------
def o1(p: Point, q: Point) -> Line:
    return line_through(p, q)


def o2(l: Line, m: Line) -> Point:
    return intersect(l, m)


def o3(p: Point, q: Point) -> Line:
    return perp_bisector(p, q)


# -----------------------------
# O4
# -----------------------------
def o4(l: Line, m: Line) -> FoldResult:
    if is_parallel(l, m):
        if same_line(l, m):
            raise CoincidentLines("angle bisector of a line with itself")
        # normalized parallel lines share (a, b)
        return FoldResult((Line.from_coefficients(l.a, l.b, div(add(l.c, m.c), 2)),))
    n1 = sqrt(add(mul(l.a, l.a), mul(l.b, l.b)))
    n2 = sqrt(add(mul(m.a, m.a), mul(m.b, m.b)))
    lines = []
    for combine in (sub, add):
        lines.append(
            Line.from_coefficients(
                combine(div(l.a, n1), div(m.a, n2)),
                combine(div(l.b, n1), div(m.b, n2)),
                combine(div(l.c, n1), div(m.c, n2)),
            )
        )
    return FoldResult(sort_lines(lines))


# -----------------------------
# O5
# -----------------------------
def _o5_incident(p: Point, l: Line, q: Point) -> FoldResult:
    """Folds through q that keep p (already on l) on l."""
    if same_point(p, q):
        return FoldResult((), degenerate=True)
    lines = [line_through(q, p)]
    f = foot(q, l)
    mirror = Point(sub(mul(2, f.x), p.x), sub(mul(2, f.y), p.y))
    if not same_point(mirror, p):
        lines.append(perp_bisector(p, mirror))
    return FoldResult(sort_lines(lines))


def o5(p: Point, l: Line, q: Point, *, allow_incident: bool = False) -> FoldResult:
    """
    Folds through q that reflect p onto l.

    The image p' of p lies on the circle about q through p and on l; each
    fold is the perpendicular bisector of p and p'. With q on the parabola
    the two images coincide and the single tangent at q is returned.
    """
    if incident(p, l):
        if allow_incident:
            return _o5_incident(p, l, q)
        raise DegenerateParabola(f"focus {p} lies on the directrix {l}")
    f = foot(q, l)
    h2 = sub(squared_distance(q, p), squared_distance(q, f))
    s = sign(h2)
    if s < 0:
        logger.debug("O5: %s is inside the parabola, no fold", q)
        return FoldResult()
    if s == 0:
        return FoldResult((perp_bisector(p, f),))
    t = sqrt(div(h2, add(mul(l.a, l.a), mul(l.b, l.b))))
    images = [
        Point(sub(f.x, mul(t, neg(l.b))), sub(f.y, mul(t, l.a))),
        Point(add(f.x, mul(t, neg(l.b))), add(f.y, mul(t, l.a))),
    ]
    return FoldResult(sort_lines([perp_bisector(p, image) for image in images]))


# -----------------------------
# O6
# -----------------------------
Poly = list[ExactReal]  # coefficients, lowest degree first


def _padd(*polys: Poly) -> Poly:
    size = max(len(p) for p in polys)
    out: Poly = [ZERO] * size
    for p in polys:
        for i, c in enumerate(p):
            out[i] = add(out[i], c)
    return out


def _pmul(p: Poly, q: Poly) -> Poly:
    out: Poly = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = add(out[i + j], mul(a, b))
    return out


def _pscale(k: ExactReal | int, p: Poly) -> Poly:
    return [mul(k, c) for c in p]


def _intercept(mu: ExactReal, p: Point, l: Line, e: ExactReal) -> ExactReal | None:
    """k of the fold y = mu*x + k tangent to parabola (p, l), None if undefined."""
    g = sub(mul(l.a, mu), l.b)
    if sign(g) == 0:
        return None
    one_plus = add(mul(mu, mu), 1)
    return add(sub(div(mul(e, one_plus), mul(2, g)), mul(mu, p.x)), p.y)


def _vertical_fold(p: Point, l: Line) -> ExactReal | None:
    if sign(l.a) == 0:
        return None
    return div(sub(sub(mul(l.a, p.x), mul(l.b, p.y)), l.c), mul(2, l.a))


def slope_polynomial(p: Point, l: Line, q: Point, m: Line) -> tuple[Poly, bool]:
    """
    Polynomial in the fold slope mu whose roots give the common tangents.

    Returns (coefficients lowest first, parallel_directrices). For parallel
    directrices the common factor (a*mu - b) is divided out.
    """
    e1 = l.value_at(p)
    e2 = m.value_at(q)
    dfx = sub(p.x, q.x)
    dfy = sub(p.y, q.y)
    one_plus: Poly = [ONE, ZERO, ONE]
    shift: Poly = [dfy, neg(dfx)]
    g1: Poly = [neg(l.b), l.a]
    g2: Poly = [neg(m.b), m.a]
    if is_parallel(l, m):
        poly = _padd(_pscale(sub(e1, e2), one_plus), _pscale(2, _pmul(g1, shift)))
        return poly, True
    poly = _padd(
        _pscale(e1, _pmul(one_plus, g2)),
        _pscale(neg(e2), _pmul(one_plus, g1)),
        _pscale(2, _pmul(_pmul(g1, g2), shift)),
    )
    return poly, False


def o6(p: Point, l: Line, q: Point, m: Line) -> FoldResult:
    """Folds that reflect p onto l and q onto m simultaneously."""
    if incident(p, l):
        raise DegenerateParabola(f"focus {p} lies on the directrix {l}")
    if incident(q, m):
        raise DegenerateParabola(f"focus {q} lies on the directrix {m}")
    if same_point(p, q) and same_line(l, m):
        raise IdenticalParabolas("both fold conditions describe the same parabola")

    poly, parallel = slope_polynomial(p, l, q, m)
    if all(sign(c) == 0 for c in poly):
        logger.warning("O6: fold conditions agree on a continuum of folds")
        return FoldResult((), degenerate=True, at_infinity=True)

    e1 = l.value_at(p)
    e2 = m.value_at(q)
    lines: list[Line] = []
    for root in polynomial_roots(list(reversed(poly))):
        mu = root.value
        k = _intercept(mu, p, l, e1)
        if k is None:
            k = _intercept(mu, q, m, e2)
        if k is None:
            continue
        lines.append(Line.from_coefficients(mu, -1, k))

    k1 = _vertical_fold(p, l)
    k2 = _vertical_fold(q, m)
    if k1 is not None and k2 is not None and sign(sub(k1, k2)) == 0:
        lines.append(Line.from_coefficients(1, 0, neg(k1)))

    logger.debug("O6: %d affine folds, parallel axes: %s", len(lines), parallel)
    # the line at infinity is always a common tangent of two parabolas
    return FoldResult(sort_lines(lines), degenerate=True, at_infinity=True)


def fold_image(p: Point, f: Line) -> Point:
    """Where folding along f carries p."""
    return reflect_point(p, f)
