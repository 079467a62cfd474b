"""The stroke-program language: ``tokenize``, ``parse``, ``pretty_print``, ``eval_script``."""

from .ast import Script, Span
from .interpreter import Environment, EvalError, ExecutionResult, eval_script, render_final, run_source
from .lexer import LexError, PaintSyntaxError, Token, tokenize
from .parser import ParseError, parse
from .printer import pretty_print

__all__ = [
    "Environment", "EvalError", "ExecutionResult", "LexError", "PaintSyntaxError",
    "ParseError", "Script", "Span", "Token", "eval_script", "parse", "pretty_print",
    "render_final", "run_source", "tokenize",
]
