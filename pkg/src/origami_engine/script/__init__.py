"""The .ori construction language: parser, canonical printer and evaluator."""

from origami_engine.script.ast import Program
from origami_engine.script.evaluator import (
    AssertionResult,
    Evaluation,
    Evaluator,
    evaluate,
    evaluate_literal,
)
from origami_engine.script.parser import parse, parse_expression, tokenize
from origami_engine.script.printer import format_expr, format_program, format_statement

__all__ = [
    "AssertionResult",
    "Evaluation",
    "Evaluator",
    "Program",
    "evaluate",
    "evaluate_literal",
    "format_expr",
    "format_program",
    "format_statement",
    "parse",
    "parse_expression",
    "tokenize",
]
