"""3x3 matrices of exact reals, stored as tuples of rows."""

from __future__ import annotations

from collections.abc import Sequence

from origami_engine.exactnum import ZERO, ExactReal, Number, add, const, mul, neg, sign, sub

Matrix = tuple[tuple[ExactReal, ExactReal, ExactReal], ...]
Vector = tuple[ExactReal, ExactReal, ExactReal]


def matrix(rows: Sequence[Sequence[Number]]) -> Matrix:
    return tuple(tuple(const(v) for v in row) for row in rows)  # type: ignore[return-value]


def _minor(m: Matrix, r0: int, r1: int, c0: int, c1: int) -> ExactReal:
    return sub(mul(m[r0][c0], m[r1][c1]), mul(m[r0][c1], m[r1][c0]))


def det(m: Matrix) -> ExactReal:
    return add(
        sub(mul(m[0][0], _minor(m, 1, 2, 1, 2)), mul(m[0][1], _minor(m, 1, 2, 0, 2))),
        mul(m[0][2], _minor(m, 1, 2, 0, 1)),
    )


def adjoint(m: Matrix) -> Matrix:
    return adjugate(m)


def adjugate(m: Matrix) -> Matrix:
    """Transpose of the cofactor matrix; m * adjugate(m) = det(m) * I."""
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            # cofactor of entry (j, i)
            r = [k for k in range(3) if k != j]
            c = [k for k in range(3) if k != i]
            minor = _minor(m, r[0], r[1], c[0], c[1])
            row.append(minor if (i + j) % 2 == 0 else neg(minor))
        rows.append(tuple(row))
    return tuple(rows)  # type: ignore[return-value]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(
            add(add(mul(a[i][0], b[0][j]), mul(a[i][1], b[1][j])), mul(a[i][2], b[2][j]))
            for j in range(3)
        )
        for i in range(3)
    )  # type: ignore[return-value]


def trace(m: Matrix) -> ExactReal:
    return add(add(m[0][0], m[1][1]), m[2][2])


def scale(k: Number, m: Matrix) -> Matrix:
    return tuple(tuple(mul(k, v) for v in row) for row in m)  # type: ignore[return-value]


def combine(a: Matrix, lam: ExactReal, b: Matrix) -> Matrix:
    """a - lam * b."""
    return tuple(tuple(sub(a[i][j], mul(lam, b[i][j])) for j in range(3)) for i in range(3))  # type: ignore[return-value]


def is_zero_matrix(m: Matrix) -> bool:
    return all(sign(v) == 0 for row in m for v in row)


def quadratic_form(m: Matrix, u: Vector, v: Vector | None = None) -> ExactReal:
    """u^T m v (v defaults to u)."""
    v = u if v is None else v
    total: ExactReal = ZERO
    for i in range(3):
        for j in range(3):
            total = add(total, mul(mul(u[i], m[i][j]), v[j]))
    return total


def cross(u: Vector, v: Vector) -> Vector:
    return (
        sub(mul(u[1], v[2]), mul(u[2], v[1])),
        sub(mul(u[2], v[0]), mul(u[0], v[2])),
        sub(mul(u[0], v[1]), mul(u[1], v[0])),
    )
