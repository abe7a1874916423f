"""
Exception hierarchy for the engine.

Every error raised on purpose derives from OrigamiError, grouped by the
module family that raises it. Leaf classes that have a natural builtin
counterpart also inherit from it (DivisionByZero is a ZeroDivisionError).
"""

from __future__ import annotations


class OrigamiError(Exception):
    """Base class for all engine errors."""


class ConfigError(OrigamiError):
    pass


# -----------------------------
# exactnum
# -----------------------------
class ExactArithmeticError(OrigamiError):
    pass


class DivisionByZero(ExactArithmeticError, ZeroDivisionError):
    pass


class NegativeRadicand(ExactArithmeticError, ValueError):
    pass


class PrecisionExhausted(ExactArithmeticError):
    """The zero test hit the configured degree or precision cap without a decision."""


class IsolationError(ExactArithmeticError):
    """A cubic root bracket does not isolate exactly one simple root."""


# -----------------------------
# geom
# -----------------------------
class GeometryError(OrigamiError):
    pass


class CoincidentPoints(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class PointAtInfinity(GeometryError):
    pass


class DegenerateLine(GeometryError):
    pass


# -----------------------------
# folds
# -----------------------------
class FoldError(OrigamiError):
    pass


class DegenerateParabola(FoldError):
    pass


class IdenticalParabolas(FoldError):
    pass


class AxiomNotAvailable(FoldError):
    pass


class NotCollinear(FoldError):
    pass


class DegenerateRatio(FoldError):
    pass


class MissingAuxiliaryPoint(FoldError):
    pass


class ReplayMismatch(FoldError):
    pass


# -----------------------------
# conics
# -----------------------------
class ConicError(OrigamiError):
    pass


class DegenerateConic(ConicError):
    pass


class DegeneratePencil(ConicError):
    pass


class NotDegenerate(ConicError):
    pass


# -----------------------------
# solvers / fields
# -----------------------------
class SolverError(OrigamiError):
    pass


class NonPositiveInput(SolverError, ValueError):
    pass


class OutOfRange(SolverError, ValueError):
    pass


class FieldClassError(OrigamiError):
    pass


class UnsupportedTower(FieldClassError):
    pass


class ReduciblePolynomial(FieldClassError):
    pass


# -----------------------------
# script / cli
# -----------------------------
class ScriptError(OrigamiError):
    pass


class SourceError(ScriptError):
    """Parse or resolve failure with a position in the source text."""

    def __init__(self, line: int, column: int, message: str, token: str = "") -> None:
        self.line = line
        self.column = column
        self.message = message
        self.token = token
        super().__init__(f"{line}:{column}: {message}" + (f" (at {token!r})" if token else ""))


class EvalError(ScriptError):
    """Evaluation failure; kind is one of AxiomNotAvailable, NoSolution, AssertFailed,
    PrecisionExhausted or Domain."""

    def __init__(self, kind: str, line: int, message: str) -> None:
        self.kind = kind
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {kind}: {message}")


class AssertFailed(EvalError):
    def __init__(self, line: int, lhs: str, rhs: str, message: str) -> None:
        self.lhs = lhs
        self.rhs = rhs
        super().__init__("AssertFailed", line, message)


class RenderError(OrigamiError):
    pass


class EmptyViewport(RenderError):
    pass
