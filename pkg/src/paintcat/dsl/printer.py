"""Canonical source formatting. Comments and blank lines are not preserved."""

from __future__ import annotations

from ..color_texture import Color
from . import ast


def format_color(color: Color) -> str:
    return color.to_short_hex() or color.to_hex()


def format_string(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def format_expr(expr) -> str:
    if isinstance(expr, ast.Name):
        return expr.name
    if isinstance(expr, ast.Unit):
        return "I"
    if isinstance(expr, ast.TensorExpr):
        right = format_expr(expr.right)
        if isinstance(expr.right, ast.TensorExpr):
            # tensor is left-associative; keep the right grouping explicit
            right = f"({right})"
        return f"{format_expr(expr.left)} (x) {right}"
    raise TypeError(f"not a word expression: {expr!r}")


def format_gen(gen: ast.GenSpec) -> str:
    if gen.kind == "set_color":
        return f"set_color {format_color(gen.args[0])}"
    if gen.kind == "add_color":
        return f"add_color {format_color(gen.args[0])} {gen.args[1]}"
    if gen.kind == "set_texture":
        return f"set_texture {gen.args[0]}"
    if gen.kind == "scale_load":
        return f"scale_load {gen.args[0]}/{gen.args[1]}"
    return gen.kind


def format_statement(stmt) -> str:
    if isinstance(stmt, ast.RegionDecl):
        return f"region {stmt.name} rect {stmt.x} {stmt.y} {stmt.width} {stmt.height}"
    if isinstance(stmt, ast.StateBind):
        return (f"state {stmt.name} = paint {stmt.region} color {format_color(stmt.color)} "
                f"texture {stmt.texture} load {stmt.load}")
    if isinstance(stmt, ast.WordBind):
        return f"word {stmt.name} = {format_expr(stmt.expr)}"
    if isinstance(stmt, ast.StrokeBind):
        return f"stroke {stmt.name} = {format_gen(stmt.gen)}"
    if isinstance(stmt, ast.Apply):
        return f"apply {stmt.stroke} to {stmt.word} at {stmt.position}"
    if isinstance(stmt, ast.BraidStmt):
        return f"braid {stmt.word} at {stmt.position}"
    if isinstance(stmt, ast.Check):
        text = "check laws"
        if stmt.seed is not None:
            text += f" seed {stmt.seed}"
        if stmt.samples is not None:
            text += f" samples {stmt.samples}"
        return text
    if isinstance(stmt, ast.Render):
        text = f"render {stmt.word} {format_string(stmt.path)}"
        if stmt.size is not None:
            text += f" size {stmt.size[0]} {stmt.size[1]}"
        return text
    if isinstance(stmt, ast.Print):
        return f"print {stmt.word}"
    raise TypeError(f"not a statement: {stmt!r}")


def pretty_print(script: ast.Script) -> str:
    return "".join(format_statement(stmt) + "\n" for stmt in script)
