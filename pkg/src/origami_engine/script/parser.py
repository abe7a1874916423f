"""
Line-oriented parser for .ori construction scripts.

Grammar, one statement per line, `#` starts a comment:

    level NAME
    point ID = (expr, expr)
    point ID = meet ID ID
    line ID = through ID ID | bisector ID ID | <expr, expr, expr>
    let ID = expr
    conic ID = parabola ID ID | (expr, expr, expr, expr, expr, expr)
    fold O1 A B as f            fold O2 l m as P
    fold O3 A B as f            fold O4 l m as f1, f2
    fold O5 P -> l through Q as f1, f2
    fold O6 P -> l, Q -> m as f1, f2, f3
    macro NAME ARGS as ID[, ID]
    assert expr (== | < | >) expr
    assert P on l

A binder followed by `?` may stay unbound when the fold has fewer
solutions. Names are resolved while parsing: every identifier must be bound
by an earlier statement, never rebound, and of the kind its position needs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from origami_engine.config.levels import AXIOM_LEVELS
from origami_engine.errors import SourceError
from origami_engine.script.ast import (
    ATTRIBUTES,
    AXIOM_SIGNATURES,
    FUNCTIONS,
    MACRO_SIGNATURES,
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

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>->|==|[()<>,=+\-*/^.?]))"
)
MAX_BINDERS = {"O4": 2, "O5": 2, "O6": 3, "derive_o4": 2}


@dataclass(frozen=True)
class Token:
    kind: str  # num, id, op, end
    text: str
    column: int


def tokenize(text: str, line: int) -> list[Token]:
    text = text.split("#", 1)[0].rstrip()
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            column = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise SourceError(line, column, "unexpected character", text[column - 1])
        kind = match.lastgroup or "op"
        tokens.append(Token(kind, match.group(kind), match.start(kind) + 1))
        pos = match.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _LineParser:
    def __init__(self, tokens: list[Token], line: int, kinds: dict[str, str]) -> None:
        self.tokens = tokens
        self.pos = 0
        self.line = line
        self.kinds = kinds

    # -----------------------------
    # Token helpers
    # -----------------------------
    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, token: Token | None = None) -> SourceError:
        token = token or self.current
        return SourceError(self.line, token.column, message, token.text)

    def advance(self) -> Token:
        token = self.current
        if token.kind != "end":
            self.pos += 1
        return token

    def accept(self, text: str) -> bool:
        if self.current.kind in ("op", "id") and self.current.text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if self.current.text != text or self.current.kind == "end":
            raise self.error(f"expected {text!r}")
        return self.advance()

    def identifier(self) -> Token:
        if self.current.kind != "id":
            raise self.error("expected an identifier")
        return self.advance()

    def finish(self) -> None:
        if self.current.kind != "end":
            raise self.error("unexpected trailing input")

    # -----------------------------
    # Names
    # -----------------------------
    def new_name(self) -> str:
        token = self.identifier()
        if token.text in self.kinds:
            raise self.error(f"{token.text!r} is already bound", token)
        return token.text

    def reference(self, kind: str | tuple[str, ...]) -> str:
        token = self.identifier()
        bound = self.kinds.get(token.text)
        if bound is None:
            raise self.error(f"{token.text!r} is not bound yet", token)
        wanted = (kind,) if isinstance(kind, str) else kind
        if bound not in wanted:
            raise self.error(f"{token.text!r} is a {bound}, expected {' or '.join(wanted)}", token)
        return token.text

    def binders(self, result: str, limit: int) -> tuple[Binder, ...]:
        self.expect("as")
        found: list[Binder] = []
        names: list[Token] = []
        while True:
            token = self.current
            name = self.new_name()
            if name in (b.name for b in found):
                raise self.error(f"{name!r} is bound twice", token)
            found.append(Binder(name, self.accept("?")))
            names.append(token)
            if not self.accept(","):
                break
        if len(found) > limit:
            raise self.error(f"at most {limit} binder(s) here", names[limit])
        for binder in found:
            self.kinds[binder.name] = "line" if result == "lines" else result
        return tuple(found)

    # -----------------------------
    # Expressions
    # -----------------------------
    def expression(self) -> Expr:
        node = self.term()
        while self.current.text in ("+", "-") and self.current.kind == "op":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.current.text in ("*", "/") and self.current.kind == "op":
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.current.kind == "op" and self.current.text == "-":
            self.advance()
            return Unary("-", self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.current.kind == "op" and self.current.text == "^":
            self.advance()
            negative = self.accept("-")
            token = self.current
            if token.kind != "num" or "." in token.text:
                raise self.error("exponent must be an integer literal")
            self.advance()
            exponent: Expr = Num(Fraction(int(token.text)))
            return BinOp("^", base, Unary("-", exponent) if negative else exponent)
        return base

    def atom(self) -> Expr:
        token = self.current
        if token.kind == "num":
            self.advance()
            return Num(Fraction(token.text))
        if self.accept("("):
            node = self.expression()
            self.expect(")")
            return node
        if token.kind != "id":
            raise self.error("expected an expression")
        if token.text in FUNCTIONS and self.tokens[self.pos + 1].text == "(":
            return self.call()
        self.advance()
        bound = self.kinds.get(token.text)
        if bound is None:
            raise self.error(f"{token.text!r} is not bound yet", token)
        if self.accept("."):
            attr = self.identifier()
            if bound not in ATTRIBUTES or attr.text not in ATTRIBUTES[bound]:
                raise self.error(f"{bound} {token.text!r} has no attribute {attr.text!r}", attr)
            return Attr(token.text, attr.text)
        return Ref(token.text)

    def call(self) -> Expr:
        name = self.advance().text
        self.expect("(")
        args: list[Expr] = []
        if name == "dist2":
            args.append(Ref(self.reference("point")))
            self.expect(",")
            args.append(Ref(self.reference("point")))
        else:
            args.append(self.expression())
        self.expect(")")
        return Call(name, tuple(args))

    def require_scalar(self, node: Expr, start: Token) -> None:
        stack = [node]
        while stack:
            item = stack.pop()
            if isinstance(item, Ref) and self.kinds[item.name] != "scalar":
                raise self.error(f"{item.name!r} is a {self.kinds[item.name]}, expected a scalar", start)
            if isinstance(item, Unary):
                stack.append(item.operand)
            elif isinstance(item, BinOp):
                stack.extend((item.left, item.right))
            elif isinstance(item, Call) and item.func != "dist2":
                stack.extend(item.args)

    def scalar(self) -> Expr:
        start = self.current
        node = self.expression()
        self.require_scalar(node, start)
        return node

    def scalars(self, count: int, close: str) -> tuple[Expr, ...]:
        values = [self.scalar()]
        for _ in range(count - 1):
            self.expect(",")
            values.append(self.scalar())
        self.expect(close)
        return tuple(values)

    # -----------------------------
    # Statements
    # -----------------------------
    def statement(self, index: int) -> Statement:
        keyword = self.identifier()
        handler = getattr(self, f"stmt_{keyword.text}", None)
        if handler is None:
            raise self.error(f"unknown statement {keyword.text!r}", keyword)
        if keyword.text == "level" and index != 0:
            raise self.error("the level directive must be the first statement", keyword)
        statement = handler()
        self.finish()
        return statement

    def stmt_level(self) -> Statement:
        token = self.identifier()
        if token.text not in AXIOM_LEVELS:
            raise self.error(f"unknown level {token.text!r}", token)
        return Level(token.text, self.line)

    def stmt_point(self) -> Statement:
        name = self.new_name()
        self.expect("=")
        if self.accept("meet"):
            first = self.reference("line")
            second = self.reference("line")
            self.kinds[name] = "point"
            return MeetPoint(name, first, second, self.line)
        self.expect("(")
        x, y = self.scalars(2, ")")
        self.kinds[name] = "point"
        return LetPoint(name, x, y, self.line)

    def stmt_line(self) -> Statement:
        name = self.new_name()
        self.expect("=")
        if self.accept("<"):
            args = self.scalars(3, ">")
            kind = "coeffs"
        else:
            token = self.identifier()
            if token.text not in ("through", "bisector"):
                raise self.error("expected 'through', 'bisector' or '<a, b, c>'", token)
            kind = token.text
            args = (self.reference("point"), self.reference("point"))
        self.kinds[name] = "line"
        return LetLine(name, kind, args, self.line)

    def stmt_let(self) -> Statement:
        name = self.new_name()
        self.expect("=")
        expr = self.scalar()
        self.kinds[name] = "scalar"
        return LetScalar(name, expr, self.line)

    def stmt_conic(self) -> Statement:
        name = self.new_name()
        self.expect("=")
        if self.accept("parabola"):
            args: tuple = (self.reference("point"), self.reference("line"))
            kind = "parabola"
        else:
            self.expect("(")
            args = self.scalars(6, ")")
            kind = "coeffs"
        self.kinds[name] = "conic"
        return LetConic(name, kind, args, self.line)

    def stmt_fold(self) -> Statement:
        token = self.identifier()
        if token.text not in AXIOM_SIGNATURES:
            raise self.error(f"unknown axiom {token.text!r}", token)
        axiom = token.text
        kinds, result = AXIOM_SIGNATURES[axiom]
        if axiom == "O5":
            args = [self.reference("point")]
            self.expect("->")
            args.append(self.reference("line"))
            self.expect("through")
            args.append(self.reference("point"))
        elif axiom == "O6":
            args = [self.reference("point")]
            self.expect("->")
            args.append(self.reference("line"))
            self.expect(",")
            args.append(self.reference("point"))
            self.expect("->")
            args.append(self.reference("line"))
        else:
            args = [self.reference(kind) for kind in kinds]
        binders = self.binders(result, MAX_BINDERS.get(axiom, 1))
        return Fold(axiom, tuple(args), binders, self.line)

    def stmt_macro(self) -> Statement:
        token = self.identifier()
        if token.text not in MACRO_SIGNATURES:
            raise self.error(f"unknown macro {token.text!r}", token)
        kinds, result = MACRO_SIGNATURES[token.text]
        args = []
        for kind in kinds:
            if self.current.kind != "id" or self.current.text == "as":
                raise self.error(f"macro {token.text} takes {len(kinds)} arguments")
            args.append(self.reference(kind))
        binders = self.binders(result, MAX_BINDERS.get(token.text, 1))
        return Macro(token.text, tuple(args), binders, self.line)

    def stmt_assert(self) -> Statement:
        start = self.current
        if start.kind == "id" and self.tokens[self.pos + 1].text == "on":
            point = self.reference("point")
            self.expect("on")
            target = self.reference(("line", "conic"))
            return Assert(Ref(point), "on", Ref(target), self.line)
        lhs = self.expression()
        relation = self.current
        if relation.text not in ("==", "<", ">"):
            raise self.error("expected '==', '<', '>' or 'on'")
        self.advance()
        rhs = self.expression()
        self._check_relation(lhs, relation, rhs, start)
        return Assert(lhs, relation.text, rhs, self.line)

    def _kind_of(self, expr: Expr) -> str:
        if isinstance(expr, Ref):
            return self.kinds[expr.name]
        return "scalar"

    def _check_relation(self, lhs: Expr, relation: Token, rhs: Expr, start: Token) -> None:
        left, right = self._kind_of(lhs), self._kind_of(rhs)
        if left != right:
            raise self.error(f"cannot compare a {left} with a {right}", start)
        if left == "conic":
            raise self.error("conics are compared with 'on' only", start)
        if left != "scalar" and relation.text != "==":
            raise self.error(f"{relation.text!r} needs scalars", relation)
        if left == "scalar":
            self.require_scalar(lhs, start)
            self.require_scalar(rhs, start)


def parse(text: str) -> Program:
    kinds: dict[str, str] = {}
    statements: list[Statement] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = tokenize(raw, number)
        if tokens[0].kind == "end":
            continue
        statements.append(_LineParser(tokens, number, kinds).statement(len(statements)))
    return Program(tuple(statements))


def parse_expression(text: str) -> Expr:
    """A standalone scalar literal such as "-1/2" or "sqrt(2) + 1"."""
    tokens = tokenize(text.strip(), 1)
    if tokens[0].kind == "end":
        raise SourceError(1, 1, "empty expression")
    parser = _LineParser(tokens, 1, {})
    node = parser.scalar()
    parser.finish()
    return node
