"""
Recursive-descent parser for stroke programs.

One statement per line. On a syntax error the parser skips to the next line
and carries on, so a single run reports up to ``MAX_ERRORS`` problems; the
raised :class:`ParseError` is the first one, with the rest on ``.errors``.
"""

from __future__ import annotations

from dataclasses import replace

from ..color_texture import Color, Texture
from . import ast
from .lexer import (
    EOF,
    EQUALS,
    HEXCOLOR,
    IDENT,
    INT,
    KEYWORD,
    LPAREN,
    NEWLINE,
    RPAREN,
    SLASH,
    STRING,
    TENSOR,
    PaintSyntaxError,
    Token,
    tokenize,
)

MAX_ERRORS = 10

TEXTURE_NAMES = tuple(t.value for t in Texture.paintable())
STATEMENT_KEYWORDS = ("region", "state", "word", "stroke", "apply", "braid",
                      "check", "render", "print")
GEN_KEYWORDS = ("set_color", "add_color", "set_texture", "scale_load", "do_nothing")


class ParseError(PaintSyntaxError):
    def __init__(self, message: str, line: int, column: int, expected=frozenset()):
        self.expected = frozenset(expected)
        if self.expected:
            message = f"{message}; expected {', '.join(sorted(self.expected))}"
        super().__init__(message, line, column)
        self.errors: list[ParseError] = [self]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def fail(self, expected, what=None):
        tok = self.tok
        raise ParseError(what or f"unexpected {tok.describe()}", tok.line, tok.column, expected)

    def at_keyword(self, *words) -> bool:
        return self.tok.kind == KEYWORD and self.tok.lexeme in words

    def keyword(self, word: str) -> Token:
        if not self.at_keyword(word):
            self.fail({repr(word)})
        return self.advance()

    def expect(self, kind: str, label: str) -> Token:
        if self.tok.kind != kind:
            self.fail({label})
        return self.advance()

    def ident(self) -> str:
        return self.expect(IDENT, "identifier").lexeme

    def integer(self) -> int:
        return int(self.expect(INT, "integer").lexeme)

    def hexcolor(self) -> Color:
        return Color.from_hex(self.expect(HEXCOLOR, "hex color").lexeme)

    def texname(self) -> str:
        tok = self.tok
        if tok.kind != IDENT or tok.lexeme not in TEXTURE_NAMES:
            self.fail(set(TEXTURE_NAMES))
        return self.advance().lexeme

    def span_from(self, start: Token) -> ast.Span:
        last = self.tokens[self.pos - 1]
        return ast.Span(start.line, start.column, last.line, last.end_column)

    # grammar

    def script(self) -> ast.Script:
        statements = []
        errors: list[ParseError] = []
        while True:
            while self.tok.kind == NEWLINE:
                self.advance()
            if self.tok.kind == EOF:
                break
            try:
                statements.append(self.statement())
                if self.tok.kind not in (NEWLINE, EOF):
                    self.fail({"end of line"})
            except ParseError as err:
                errors.append(err)
                if len(errors) >= MAX_ERRORS:
                    break
                while self.tok.kind not in (NEWLINE, EOF):
                    self.advance()
        if errors:
            first = errors[0]
            first.errors = errors
            raise first
        return ast.Script(tuple(statements))

    def statement(self):
        start = self.tok
        if start.kind != KEYWORD or start.lexeme not in STATEMENT_KEYWORDS:
            self.fail({repr(k) for k in STATEMENT_KEYWORDS}, f"unexpected {start.describe()}")
        node = getattr(self, "stmt_" + start.lexeme)()
        return replace(node, span=self.span_from(start))

    def stmt_region(self):
        self.advance()
        name = self.ident()
        self.keyword("rect")
        x, y, w, h = (self.integer() for _ in range(4))
        return ast.RegionDecl(name, x, y, w, h)

    def stmt_state(self):
        self.advance()
        name = self.ident()
        self.expect(EQUALS, "'='")
        self.keyword("paint")
        region = self.ident()
        self.keyword("color")
        color = self.hexcolor()
        self.keyword("texture")
        texture = self.texname()
        self.keyword("load")
        return ast.StateBind(name, region, color, texture, self.integer())

    def stmt_word(self):
        self.advance()
        name = self.ident()
        self.expect(EQUALS, "'='")
        return ast.WordBind(name, self.wexpr())

    def wexpr(self):
        start = self.tok
        node = self.wterm()
        while self.tok.kind == TENSOR:
            self.advance()
            node = ast.TensorExpr(node, self.wterm(), self.span_from(start))
        return node

    def wterm(self):
        tok = self.tok
        if tok.kind == IDENT:
            self.advance()
            if tok.lexeme == "I":
                return ast.Unit(self.span_from(tok))
            return ast.Name(tok.lexeme, self.span_from(tok))
        if tok.kind == LPAREN:
            self.advance()
            node = self.wexpr()
            self.expect(RPAREN, "')'")
            return node
        self.fail({"identifier", "'I'", "'('"}, f"expected expression, got {tok.describe()}")

    def stmt_stroke(self):
        self.advance()
        name = self.ident()
        self.expect(EQUALS, "'='")
        return ast.StrokeBind(name, self.gen())

    def gen(self) -> ast.GenSpec:
        if not self.at_keyword(*GEN_KEYWORDS):
            self.fail({repr(k) for k in GEN_KEYWORDS})
        kind = self.advance().lexeme
        if kind == "set_color":
            return ast.GenSpec(kind, (self.hexcolor(),))
        if kind == "add_color":
            return ast.GenSpec(kind, (self.hexcolor(), self.integer()))
        if kind == "set_texture":
            return ast.GenSpec(kind, (self.texname(),))
        if kind == "scale_load":
            num = self.integer()
            self.expect(SLASH, "'/'")
            return ast.GenSpec(kind, (num, self.integer()))
        return ast.GenSpec(kind)

    def stmt_apply(self):
        self.advance()
        stroke = self.ident()
        self.keyword("to")
        word = self.ident()
        self.keyword("at")
        return ast.Apply(stroke, word, self.integer())

    def stmt_braid(self):
        self.advance()
        word = self.ident()
        self.keyword("at")
        return ast.BraidStmt(word, self.integer())

    def stmt_check(self):
        self.advance()
        self.keyword("laws")
        seed = samples = None
        if self.at_keyword("seed"):
            self.advance()
            seed = self.integer()
        if self.at_keyword("samples"):
            self.advance()
            samples = self.integer()
        return ast.Check(seed, samples)

    def stmt_render(self):
        self.advance()
        word = self.ident()
        path = self.expect(STRING, "string").lexeme
        size = None
        if self.at_keyword("size"):
            self.advance()
            size = (self.integer(), self.integer())
        return ast.Render(word, path, size)

    def stmt_print(self):
        self.advance()
        return ast.Print(self.ident())


def parse(source) -> ast.Script:
    """Parse source text (or an already tokenized list) into a Script."""
    tokens = tokenize(source) if isinstance(source, str) else list(source)
    return _Parser(tokens).script()
