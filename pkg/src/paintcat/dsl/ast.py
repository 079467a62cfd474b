"""Syntax tree for stroke programs. Source spans never take part in equality."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..color_texture import Color


@dataclass(frozen=True)
class Span:
    line: int
    column: int
    end_line: int
    end_column: int

    def contains(self, line: int, column: int) -> bool:
        return (self.line, self.column) <= (line, column) < (self.end_line, self.end_column)

    def __str__(self):
        return f"{self.line}:{self.column}"


def _span():
    return field(default=None, compare=False, repr=False)


# word expressions


@dataclass(frozen=True)
class Name:
    name: str
    span: Span | None = _span()


@dataclass(frozen=True)
class Unit:
    span: Span | None = _span()


@dataclass(frozen=True)
class TensorExpr:
    left: object
    right: object
    span: Span | None = _span()


# stroke generators, kept as written; validated when the script runs


@dataclass(frozen=True)
class GenSpec:
    kind: str
    args: tuple = ()


# statements


@dataclass(frozen=True)
class RegionDecl:
    name: str
    x: int
    y: int
    width: int
    height: int
    span: Span | None = _span()


@dataclass(frozen=True)
class StateBind:
    name: str
    region: str
    color: Color
    texture: str
    load: int
    span: Span | None = _span()


@dataclass(frozen=True)
class WordBind:
    name: str
    expr: object
    span: Span | None = _span()


@dataclass(frozen=True)
class StrokeBind:
    name: str
    gen: GenSpec
    span: Span | None = _span()


@dataclass(frozen=True)
class Apply:
    stroke: str
    word: str
    position: int
    span: Span | None = _span()


@dataclass(frozen=True)
class BraidStmt:
    word: str
    position: int
    span: Span | None = _span()


@dataclass(frozen=True)
class Check:
    seed: int | None = None
    samples: int | None = None
    span: Span | None = _span()


@dataclass(frozen=True)
class Render:
    word: str
    path: str
    size: tuple[int, int] | None = None
    span: Span | None = _span()


@dataclass(frozen=True)
class Print:
    word: str
    span: Span | None = _span()


@dataclass(frozen=True)
class Script:
    statements: tuple = ()

    def __len__(self):
        return len(self.statements)

    def __iter__(self):
        return iter(self.statements)
