"""
Syntax tree for construction scripts.

Positions (line, column) are carried for diagnostics but excluded from
equality, so a reformatted program compares equal to its source.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

# -----------------------------
# Expressions
# -----------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class Attr:
    name: str
    attr: str  # x, y, a, b, c, slope


@dataclass(frozen=True)
class Unary:
    op: str
    operand: Expr


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * / ^
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call:
    func: str  # sqrt, cbrt, dist2
    args: tuple[Expr, ...]


Expr = Num | Ref | Attr | Unary | BinOp | Call

FUNCTIONS = {"sqrt": 1, "cbrt": 1, "dist2": 2}
ATTRIBUTES = {"point": ("x", "y"), "line": ("a", "b", "c", "slope")}

# -----------------------------
# Statements
# -----------------------------


@dataclass(frozen=True)
class Binder:
    name: str
    optional: bool = False


@dataclass(frozen=True)
class Level:
    name: str
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class LetPoint:
    name: str
    x: Expr
    y: Expr
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class MeetPoint:
    name: str
    first: str
    second: str
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class LetLine:
    """kind is "through", "bisector" (args are point names) or "coeffs" (args are expressions)."""

    name: str
    kind: str
    args: tuple
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class LetScalar:
    name: str
    expr: Expr
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class LetConic:
    """kind is "parabola" (focus, directrix names) or "coeffs" (six expressions)."""

    name: str
    kind: str
    args: tuple
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Fold:
    axiom: str
    args: tuple[str, ...]
    binders: tuple[Binder, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Macro:
    name: str
    args: tuple[str, ...]
    binders: tuple[Binder, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Assert:
    """relation is one of ==, <, >, on."""

    lhs: Expr
    relation: str
    rhs: Expr
    line: int = field(default=0, compare=False)


Statement = Level | LetPoint | MeetPoint | LetLine | LetScalar | LetConic | Fold | Macro | Assert


@dataclass(frozen=True)
class Program:
    statements: tuple[Statement, ...]

    @property
    def level(self) -> str | None:
        first = self.statements[0] if self.statements else None
        return first.name if isinstance(first, Level) else None


# -----------------------------
# Signatures
# -----------------------------
# argument kinds and result kind; "lines" binds up to three lines
AXIOM_SIGNATURES: dict[str, tuple[tuple[str, ...], str]] = {
    "O1": (("point", "point"), "line"),
    "O2": (("line", "line"), "point"),
    "O3": (("point", "point"), "line"),
    "O4": (("line", "line"), "lines"),
    "O5": (("point", "line", "point"), "lines"),
    "O6": (("point", "line", "point", "line"), "lines"),
}

MACRO_SIGNATURES: dict[str, tuple[tuple[str, ...], str]] = {
    "translate": (("point", "point", "point"), "point"),
    "scale": (("point", "point", "point", "point"), "point"),
    "marklen": (("point", "point", "point", "point"), "point"),
    "reflect": (("point", "line"), "point"),
    "perpendicular": (("point", "line"), "line"),
    "midpoint": (("point", "point"), "point"),
    "reciprocal": (("point", "point", "point"), "point"),
    "complex_square": (("point", "point", "point"), "point"),
    "complex_product": (("point", "point", "point", "point"), "point"),
    "complex_inverse": (("point", "point", "point"), "point"),
    "derive_o1": (("point", "point"), "line"),
    "derive_o4": (("line", "line"), "lines"),
}
