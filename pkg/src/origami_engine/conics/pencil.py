"""
Pencils of conics, degenerate splitting, and common points and tangents.

Two distinct conics A and B span the pencil A - lambda*B. Its degenerate
members (det = 0) are line pairs through the common points of A and B, so
splitting one member into lines and cutting those lines with B recovers
every real common point. Common tangents are the same problem for the
dual conics.

Notes:
- Members are tried by algebraic degree of lambda first, so a rational
  member is split whenever the determinant cubic has a rational root.
- Zero questions on pencil output go through enclosures first; see
  resultant.py for how rational conics avoid them altogether.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from origami_engine.conics.conic import Conic, determinant, dual, line_vector, on_conic, same_conic
from origami_engine.conics.matrix import Matrix, Vector, adjugate, combine, det, mat_mul, quadratic_form, trace
from origami_engine.conics.resultant import resultants
from origami_engine.errors import ConicError, DegenerateConic, DegeneratePencil, NotDegenerate
from origami_engine.exactnum import (
    ONE,
    ZERO,
    ExactReal,
    add,
    algebraic_degree,
    compare,
    div,
    first_nonzero,
    mul,
    neg,
    polynomial_roots,
    sign,
    sqrt,
    sub,
)
from origami_engine.geom import (
    LINE_AT_INFINITY,
    Line,
    LineAtInfinity,
    ProjPoint,
    dual_exchange,
    same_projective_point,
)
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)

AnyLine = Line | LineAtInfinity


@dataclass(frozen=True)
class Pencil:
    a: Conic
    b: Conic

    def __post_init__(self) -> None:
        if same_conic(self.a, self.b):
            raise DegeneratePencil("a pencil needs two independent conics")

    def member(self, lam: ExactReal) -> Matrix:
        return combine(self.a.m, lam, self.b.m)


@dataclass(frozen=True)
class TwoLines:
    first: AnyLine
    second: AnyLine


@dataclass(frozen=True)
class DoubleLine:
    line: AnyLine


@dataclass(frozen=True)
class NoRealLines:
    """Complex-conjugate line pair; vertex is its only real point."""

    vertex: ProjPoint


Splitting = TwoLines | DoubleLine | NoRealLines


# -----------------------------
# Degenerate members
# -----------------------------
def determinant_coefficients(pen: Pencil) -> tuple[ExactReal, ExactReal, ExactReal, ExactReal]:
    """(c0, c1, c2, c3) with det(A - lambda*B) = c0 + c1*lambda + c2*lambda^2 + c3*lambda^3."""
    a, b = pen.a.m, pen.b.m
    return (
        det(a),
        neg(trace(mat_mul(adjugate(a), b))),
        trace(mat_mul(a, adjugate(b))),
        neg(det(b)),
    )


def degenerate_params(pen: Pencil) -> list[ExactReal]:
    c0, c1, c2, c3 = determinant_coefficients(pen)
    if first_nonzero((c0, c1, c2, c3)) is None:
        raise DegeneratePencil("every member of the pencil is degenerate")
    roots = polynomial_roots([c3, c2, c1, c0])
    logger.debug("Pencil has %d real degenerate members", len(roots))
    return [r.value for r in roots]


def _abs(x: ExactReal) -> ExactReal:
    return neg(x) if sign(x) < 0 else x


def _by_size(x: ExactReal, y: ExactReal) -> int:
    by_abs = compare(_abs(x), _abs(y))
    return by_abs if by_abs != 0 else compare(x, y)


def split_order(params: list[ExactReal]) -> list[ExactReal]:
    """Lowest algebraic degree first (rational before surd before cubic), then by size."""
    return sorted(sorted(params, key=cmp_to_key(_by_size)), key=algebraic_degree)


# -----------------------------
# Splitting
# -----------------------------
def _as_line(v: Vector) -> AnyLine:
    if first_nonzero(v[:2]) is None:
        return LINE_AT_INFINITY
    return Line.from_coefficients(*v)


def _split_vectors(m: Matrix) -> list[Vector] | ProjPoint:
    """
    Line vectors of a singular symmetric m, or the vertex of a complex pair.

    The determinant is not checked here; pencil members are singular by
    construction. A double line comes back as a single vector.
    """
    adj = adjugate(m)
    # adj = -p p^T for a real pair meeting at p, +p p^T for a complex pair,
    # and 0 for a double line, so its diagonal decides the rank
    i = first_nonzero([adj[k][k] for k in range(3)])
    if i is None:
        # rank 1: m = s l l^T, the row through a nonzero diagonal entry is a multiple of l
        r = first_nonzero([m[k][k] for k in range(3)])
        if r is None:
            raise DegenerateConic("the zero matrix has no lines")
        return [m[r]]
    column: Vector = (adj[0][i], adj[1][i], adj[2][i])
    if sign(adj[i][i]) > 0:
        return ProjPoint(*column)
    beta = sqrt(neg(adj[i][i]))
    p = tuple(div(c, beta) for c in column)
    cross_p = (
        (ZERO, p[2], neg(p[1])),
        (neg(p[2]), ZERO, p[0]),
        (p[1], neg(p[0]), ZERO),
    )
    rank_one = [add(m[r][c], cross_p[r][c]) for r in range(3) for c in range(3)]
    k = first_nonzero(rank_one)
    if k is None:
        raise ConicError("line pair has no nonzero entry")
    r, c = divmod(k, 3)
    row: Vector = tuple(rank_one[3 * r + j] for j in range(3))  # type: ignore[assignment]
    col: Vector = tuple(rank_one[3 * j + c] for j in range(3))  # type: ignore[assignment]
    return [col, row]


def split_matrix(m: Matrix) -> Splitting:
    if sign(det(m)) != 0:
        raise NotDegenerate("only a conic with zero determinant splits into lines")
    split = _split_vectors(m)
    if isinstance(split, ProjPoint):
        return NoRealLines(split)
    if len(split) == 1:
        return DoubleLine(_as_line(split[0]))
    return TwoLines(_as_line(split[0]), _as_line(split[1]))


def split_degenerate(c: Conic) -> Splitting:
    return split_matrix(c.m)


# -----------------------------
# Line against conic
# -----------------------------
def _line_vector(l: AnyLine) -> Vector:
    if isinstance(l, LineAtInfinity):
        return (ZERO, ZERO, ONE)
    return line_vector(l)


def _span(v: Vector) -> tuple[Vector, Vector]:
    """A finite point (or (1, 0, 0)) and the point at infinity of the line v."""
    a, b, c = v
    if first_nonzero((a, b)) is None:
        return (ONE, ZERO, ZERO), (ZERO, ONE, ZERO)
    base = (neg(mul(a, c)), neg(mul(b, c)), add(mul(a, a), mul(b, b)))
    return base, (neg(b), a, ZERO)


def _along(base: Vector, direction: Vector, t: ExactReal) -> ProjPoint:
    return ProjPoint(*(add(base[k], mul(t, direction[k])) for k in range(3)))


def _intersect_vector(v: Vector, m: Matrix) -> list[ProjPoint]:
    base, direction = _span(v)
    alpha = quadratic_form(m, direction)
    beta = quadratic_form(m, base, direction)
    gamma = quadratic_form(m, base)
    if sign(alpha) == 0:
        if sign(beta) == 0:
            if sign(gamma) == 0:
                raise DegenerateConic(f"{_as_line(v)} is a component of the conic")
            return [ProjPoint(*direction)]
        two_beta = mul(2, beta)
        other = ProjPoint(*(sub(mul(two_beta, base[k]), mul(gamma, direction[k])) for k in range(3)))
        return [other, ProjPoint(*direction)]
    disc = sub(mul(beta, beta), mul(alpha, gamma))
    disc_sign = sign(disc)
    if disc_sign < 0:
        return []
    if disc_sign == 0:
        return [_along(base, direction, div(neg(beta), alpha))]
    root = sqrt(disc)
    return [
        _along(base, direction, div(sub(neg(beta), root), alpha)),
        _along(base, direction, div(add(neg(beta), root), alpha)),
    ]


def intersect_line_conic(l: AnyLine, c: Conic) -> list[ProjPoint]:
    """Real points where l meets c, as homogeneous points."""
    return _intersect_vector(_line_vector(l), c.m)


def _unique(points: list[ProjPoint]) -> list[ProjPoint]:
    kept: list[ProjPoint] = []
    for p in points:
        if not any(same_projective_point(p, q) for q in kept):
            kept.append(p)
    return kept


# -----------------------------
# Common points and tangents
# -----------------------------
def _pencil_points(pen: Pencil) -> list[ProjPoint]:
    vertices: list[ProjPoint] = []
    for lam in split_order(degenerate_params(pen)):
        split = _split_vectors(pen.member(lam))
        if isinstance(split, ProjPoint):
            logger.debug("Member at lambda=%s has no real lines, trying the next", lam)
            vertices.append(split)
            continue
        points: list[ProjPoint] = []
        for v in split:
            points.extend(_intersect_vector(v, pen.b.m))
        return points
    # only complex line pairs: their vertices are the sole real candidates
    return [v for v in vertices if on_conic(v, pen.a) and on_conic(v, pen.b)]


def common_points(a: Conic, b: Conic) -> list[ProjPoint]:
    """
    Real common points of two distinct non-degenerate conics.

    For rational conics the points come back with closed-form coordinates
    matched against the resultants of a and b.
    """
    for c in (a, b):
        if sign(determinant(c)) == 0:
            raise DegenerateConic(f"common points need non-degenerate conics, got {c}")
    pen = Pencil(a, b)
    points = _pencil_points(pen)
    check = resultants(a, b)
    if check is not None:
        points = [check.closed_form(p) for p in points]
    return _unique(points)


def _line_order(l: AnyLine, m: AnyLine) -> int:
    if isinstance(l, LineAtInfinity) or isinstance(m, LineAtInfinity):
        return isinstance(l, LineAtInfinity) - isinstance(m, LineAtInfinity)
    l_slope, m_slope = l.slope, m.slope
    if l_slope is None or m_slope is None:
        return (l_slope is None) - (m_slope is None)
    return compare(l_slope, m_slope)


def common_tangents(a: Conic, b: Conic) -> list[AnyLine]:
    """Common tangent lines, affine ones by slope, then LINE_AT_INFINITY if it is one."""
    points = common_points(dual(a), dual(b))
    lines = [dual_exchange(p) for p in points]
    return sorted(lines, key=cmp_to_key(_line_order))  # type: ignore[arg-type]
