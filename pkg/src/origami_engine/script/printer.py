"""Canonical text for construction programs; parse(format_program(p)) == p."""

from __future__ import annotations

from fractions import Fraction

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

_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}
_UNARY = 3
_ATOM = 5


def _literal(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    # literals are read from decimal text, so the denominator is 2^a 5^b
    places = 0
    scaled = value
    while scaled.denominator != 1:
        scaled *= 10
        places += 1
    digits = str(scaled.numerator).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"


def _precedence(node: Expr) -> int:
    if isinstance(node, BinOp):
        return _PRECEDENCE[node.op]
    if isinstance(node, Unary):
        return _UNARY
    return _ATOM


def format_expr(node: Expr) -> str:
    if isinstance(node, Num):
        return _literal(node.value)
    if isinstance(node, Ref):
        return node.name
    if isinstance(node, Attr):
        return f"{node.name}.{node.attr}"
    if isinstance(node, Call):
        return f"{node.func}({', '.join(format_expr(a) for a in node.args)})"
    if isinstance(node, Unary):
        inner = format_expr(node.operand)
        return f"-{inner}" if _precedence(node.operand) >= _UNARY else f"-({inner})"
    if node.op == "^":
        base = format_expr(node.left)
        if _precedence(node.left) < _ATOM:
            base = f"({base})"
        return f"{base}^{format_expr(node.right)}"
    mine = _PRECEDENCE[node.op]
    left = format_expr(node.left)
    if _precedence(node.left) < mine:
        left = f"({left})"
    right = format_expr(node.right)
    if _precedence(node.right) <= mine:
        right = f"({right})"
    return f"{left} {node.op} {right}"


def _binders(binders: tuple[Binder, ...]) -> str:
    return ", ".join(b.name + ("?" if b.optional else "") for b in binders)


def format_statement(stmt: Statement) -> str:
    if isinstance(stmt, Level):
        return f"level {stmt.name}"
    if isinstance(stmt, LetPoint):
        return f"point {stmt.name} = ({format_expr(stmt.x)}, {format_expr(stmt.y)})"
    if isinstance(stmt, MeetPoint):
        return f"point {stmt.name} = meet {stmt.first} {stmt.second}"
    if isinstance(stmt, LetLine):
        if stmt.kind == "coeffs":
            return f"line {stmt.name} = <{', '.join(format_expr(a) for a in stmt.args)}>"
        return f"line {stmt.name} = {stmt.kind} {' '.join(stmt.args)}"
    if isinstance(stmt, LetScalar):
        return f"let {stmt.name} = {format_expr(stmt.expr)}"
    if isinstance(stmt, LetConic):
        if stmt.kind == "parabola":
            return f"conic {stmt.name} = parabola {' '.join(stmt.args)}"
        return f"conic {stmt.name} = ({', '.join(format_expr(a) for a in stmt.args)})"
    if isinstance(stmt, Fold):
        args = stmt.args
        if stmt.axiom == "O5":
            body = f"{args[0]} -> {args[1]} through {args[2]}"
        elif stmt.axiom == "O6":
            body = f"{args[0]} -> {args[1]}, {args[2]} -> {args[3]}"
        else:
            body = " ".join(args)
        return f"fold {stmt.axiom} {body} as {_binders(stmt.binders)}"
    if isinstance(stmt, Macro):
        return f"macro {stmt.name} {' '.join(stmt.args)} as {_binders(stmt.binders)}"
    if isinstance(stmt, Assert):
        return f"assert {format_expr(stmt.lhs)} {stmt.relation} {format_expr(stmt.rhs)}"
    raise TypeError(f"not a statement: {stmt!r}")


def format_program(program: Program) -> str:
    return "".join(format_statement(s) + "\n" for s in program.statements)
