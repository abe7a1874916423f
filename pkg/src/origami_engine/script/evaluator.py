"""
Evaluator for parsed construction programs.

Statements run in order against a FoldEngine at the program's level (or an
override). Fold binders take the solutions in canonical slope order.
Assertions are exact; every one is evaluated and reported, and a failed
assertion does not stop the program.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from origami_engine.config.levels import DEFAULT_LEVEL
from origami_engine.config.settings import get_settings
from origami_engine.conics import Conic, conic_from_coefficients, conic_from_parabola, on_conic
from origami_engine.errors import (
    AssertFailed,
    AxiomNotAvailable,
    EvalError,
    GeometryError,
    OrigamiError,
    PrecisionExhausted,
    ScriptError,
)
from origami_engine.exactnum import (
    ExactReal,
    add,
    cbrt,
    compare,
    const,
    div,
    mul,
    neg,
    power,
    sqrt,
    sub,
    to_decimal,
    to_expr_string,
)
from origami_engine.folds import FoldEngine, FoldResult, Trace, macros
from origami_engine.geom import Line, Point, incident, same_line, same_point, squared_distance
from origami_engine.script.ast import (
    Assert,
    Attr,
    BinOp,
    Binder,
    Call,
    Expr,
    Fold,
    LetConic,
    LetLine,
    LetPoint,
    LetScalar,
    Level,
    Macro,
    MeetPoint,
    Num,
    Program,
    Ref,
    Statement,
    Unary,
)
from origami_engine.script.parser import parse_expression
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)

Value = ExactReal | Point | Line | Conic


@dataclass(frozen=True)
class AssertionResult:
    line: int
    passed: bool
    lhs: str
    rhs: str
    relation: str

    def describe(self) -> str:
        status = "ok" if self.passed else "FAILED"
        return f"line {self.line}: assert {self.lhs} {self.relation} {self.rhs} ... {status}"


@dataclass
class Evaluation:
    level: str
    env: dict[str, Value] = field(default_factory=dict)
    trace: Trace = field(default_factory=Trace)
    assertions: list[AssertionResult] = field(default_factory=list)

    @property
    def failures(self) -> list[AssertionResult]:
        return [a for a in self.assertions if not a.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def raise_for_failures(self) -> None:
        if self.failures:
            first = self.failures[0]
            raise AssertFailed(first.line, first.lhs, first.rhs, first.describe())


def _describe(value: Value, digits: int) -> str:
    """Decimal context plus the exact tree, for assertion reports."""
    if isinstance(value, Point):
        return f"({to_decimal(value.x, digits)}, {to_decimal(value.y, digits)}) = {value}"
    if isinstance(value, Line):
        coeffs = ", ".join(to_decimal(v, digits) for v in (value.a, value.b, value.c))
        return f"<{coeffs}> = {value}"
    if isinstance(value, Conic):
        return str(value)
    return f"≈ {to_decimal(value, digits)} = {to_expr_string(value)}"


class Evaluator:
    def __init__(self, program: Program, level: str | None = None) -> None:
        self.program = program
        self.level = level or program.level or DEFAULT_LEVEL
        self.engine = FoldEngine(self.level)
        self.result = Evaluation(self.level, trace=self.engine.trace)

    @property
    def env(self) -> dict[str, Value]:
        return self.result.env

    def run(self) -> Evaluation:
        logger.debug("Evaluating %d statements at level %s", len(self.program.statements), self.level)
        for stmt in self.program.statements:
            try:
                self.execute(stmt)
            except ScriptError:
                raise
            except PrecisionExhausted as exc:
                raise EvalError("PrecisionExhausted", stmt.line, str(exc)) from exc
            except AxiomNotAvailable as exc:
                raise EvalError("AxiomNotAvailable", stmt.line, str(exc)) from exc
            except OrigamiError as exc:
                raise EvalError("Domain", stmt.line, f"{type(exc).__name__}: {exc}") from exc
        return self.result

    # -----------------------------
    # Binding
    # -----------------------------
    def bind(self, name: str, value: Value) -> None:
        self.env[name] = value
        if isinstance(value, (Point, Line)):
            self.engine.trace.name(name, value)

    def bind_all(self, stmt: Statement, binders: tuple[Binder, ...], values: list[Value]) -> None:
        for index, binder in enumerate(binders):
            if index < len(values):
                self.bind(binder.name, values[index])
            elif not binder.optional:
                raise EvalError(
                    "NoSolution",
                    stmt.line,
                    f"{binder.name!r} has no solution ({len(values)} found); mark it optional with '?'",
                )

    @staticmethod
    def _values(result: Any) -> list[Value]:
        if isinstance(result, FoldResult):
            return list(result.lines)
        return [result]

    # -----------------------------
    # Statements
    # -----------------------------
    def execute(self, stmt: Statement) -> None:
        if isinstance(stmt, Level):
            return
        if isinstance(stmt, LetPoint):
            point = Point(self.scalar(stmt.x), self.scalar(stmt.y))
            self.bind(stmt.name, self.engine.given_point(point))
        elif isinstance(stmt, MeetPoint):
            self.bind(stmt.name, self.engine.o2(self.env[stmt.first], self.env[stmt.second]))
        elif isinstance(stmt, LetLine):
            self.bind(stmt.name, self.make_line(stmt))
        elif isinstance(stmt, LetScalar):
            self.bind(stmt.name, self.scalar(stmt.expr))
        elif isinstance(stmt, LetConic):
            self.bind(stmt.name, self.make_conic(stmt))
        elif isinstance(stmt, Fold):
            args = [self.env[a] for a in stmt.args]
            method = getattr(self.engine, stmt.axiom.lower())
            self.bind_all(stmt, stmt.binders, self._values(method(*args)))
        elif isinstance(stmt, Macro):
            self.bind_all(stmt, stmt.binders, self._values(self.run_macro(stmt)))
        elif isinstance(stmt, Assert):
            self.check(stmt)

    def make_line(self, stmt: LetLine) -> Line:
        if stmt.kind == "coeffs":
            a, b, c = (self.scalar(e) for e in stmt.args)
            return self.engine.given_line(Line.from_coefficients(a, b, c))
        p, q = (self.env[n] for n in stmt.args)
        return self.engine.o1(p, q) if stmt.kind == "through" else self.engine.o3(p, q)

    def make_conic(self, stmt: LetConic) -> Conic:
        if stmt.kind == "parabola":
            focus, directrix = (self.env[n] for n in stmt.args)
            return conic_from_parabola(focus, directrix)
        return conic_from_coefficients(*(self.scalar(e) for e in stmt.args))

    def run_macro(self, stmt: Macro) -> Value | FoldResult:
        args = [self.env[a] for a in stmt.args]
        if stmt.name == "derive_o1":
            return self.engine.derive_o1(*args)
        if stmt.name == "derive_o4":
            return self.engine.derive_o4(*args)
        return getattr(macros, stmt.name)(self.engine, *args)

    # -----------------------------
    # Expressions
    # -----------------------------
    def value(self, node: Expr) -> Value:
        if isinstance(node, Ref):
            return self.env[node.name]
        return self.scalar(node)

    def scalar(self, node: Expr) -> ExactReal:
        if isinstance(node, Num):
            return const(node.value)
        if isinstance(node, Ref):
            return self.env[node.name]  # type: ignore[return-value]
        if isinstance(node, Attr):
            obj = self.env[node.name]
            if node.attr == "slope":
                slope = obj.slope  # type: ignore[union-attr]
                if slope is None:
                    raise GeometryError(f"{node.name} is vertical and has no slope")
                return slope
            return getattr(obj, node.attr)
        if isinstance(node, Unary):
            return neg(self.scalar(node.operand))
        if isinstance(node, Call):
            if node.func == "dist2":
                p, q = (self.env[a.name] for a in node.args)  # type: ignore[union-attr]
                return squared_distance(p, q)
            inner = self.scalar(node.args[0])
            return sqrt(inner) if node.func == "sqrt" else cbrt(inner)
        return self.binop(node)

    def binop(self, node: BinOp) -> ExactReal:
        left = self.scalar(node.left)
        if node.op == "^":
            exponent = node.right
            negative = isinstance(exponent, Unary)
            count = int(exponent.operand.value if negative else exponent.value)  # type: ignore[union-attr]
            return power(left, -count if negative else count)
        right = self.scalar(node.right)
        if node.op == "+":
            return add(left, right)
        if node.op == "-":
            return sub(left, right)
        if node.op == "*":
            return mul(left, right)
        return div(left, right)

    # -----------------------------
    # Assertions
    # -----------------------------
    def check(self, stmt: Assert) -> None:
        lhs, rhs = self.value(stmt.lhs), self.value(stmt.rhs)
        if stmt.relation == "on":
            passed = on_conic(lhs, rhs) if isinstance(rhs, Conic) else incident(lhs, rhs)
        elif isinstance(lhs, Point):
            passed = same_point(lhs, rhs)
        elif isinstance(lhs, Line):
            passed = same_line(lhs, rhs)
        else:
            order = compare(lhs, rhs)
            passed = {"==": order == 0, "<": order < 0, ">": order > 0}[stmt.relation]
        digits = get_settings().digits
        result = AssertionResult(
            stmt.line, passed, _describe(lhs, digits), _describe(rhs, digits), stmt.relation
        )
        self.result.assertions.append(result)
        if passed:
            logger.debug(result.describe())
        else:
            logger.warning(result.describe())


def evaluate(program: Program, level: str | None = None) -> Evaluation:
    return Evaluator(program, level).run()


def evaluate_literal(text: str) -> ExactReal:
    return Evaluator(Program(())).scalar(parse_expression(text))
