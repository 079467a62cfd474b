"""
Tokenizer for stroke programs.

``#`` normally starts a comment running to the end of the line. Directly
after ``color``, ``set_color`` or ``add_color`` it instead starts a hex
colour literal of exactly 6 or 12 hex digits.
"""

from __future__ import annotations

from dataclasses import dataclass

KEYWORDS = frozenset("""
    region rect state paint color texture load word stroke
    set_color add_color set_texture scale_load do_nothing
    apply to at braid check laws seed samples render size print
""".split())

COLOR_KEYWORDS = frozenset({"color", "set_color", "add_color"})

HEX_DIGITS = frozenset("0123456789abcdefABCDEF")

KEYWORD = "KEYWORD"
IDENT = "IDENT"
INT = "INT"
HEXCOLOR = "HEXCOLOR"
STRING = "STRING"
TENSOR = "TENSOR"
LPAREN = "LPAREN"
RPAREN = "RPAREN"
EQUALS = "EQUALS"
SLASH = "SLASH"
NEWLINE = "NEWLINE"
EOF = "EOF"

_PUNCT = {"(": LPAREN, ")": RPAREN, "=": EQUALS, "/": SLASH, "⊗": TENSOR}


class PaintSyntaxError(Exception):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class LexError(PaintSyntaxError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    line: int
    column: int
    end_column: int

    def describe(self) -> str:
        if self.kind in (NEWLINE, EOF):
            return "end of line" if self.kind == NEWLINE else "end of input"
        return repr(self.lexeme)


def _is_ident_start(ch: str) -> bool:
    return ch.isascii() and (ch.isalpha() or ch == "_")


def _is_ident_char(ch: str) -> bool:
    return ch.isascii() and (ch.isalnum() or ch == "_")


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(text)

    def emit(kind, lexeme, start_col, width):
        tokens.append(Token(kind, lexeme, line, start_col, start_col + width))

    while i < n:
        ch = text[i]
        if ch == "\n":
            emit(NEWLINE, "\n", col, 1)
            i += 1
            line, col = line + 1, 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            after_color_kw = (tokens and tokens[-1].kind == KEYWORD
                              and tokens[-1].lexeme in COLOR_KEYWORDS)
            if after_color_kw:
                j = i + 1
                while j < n and _is_ident_char(text[j]):
                    j += 1
                digits = text[i + 1:j]
                if len(digits) not in (6, 12) or not set(digits) <= HEX_DIGITS:
                    raise LexError(f"unterminated hex color '#{digits}' "
                                   "(need 6 or 12 hex digits)", line, col)
                emit(HEXCOLOR, digits, col, j - i)
                col += j - i
                i = j
                continue
            while i < n and text[i] != "\n":
                i += 1
            continue
        if text.startswith("(x)", i):
            emit(TENSOR, "(x)", col, 3)
            i += 3
            col += 3
            continue
        if ch in _PUNCT:
            emit(_PUNCT[ch], ch, col, 1)
            i += 1
            col += 1
            continue
        if ch.isascii() and ch.isdigit():
            j = i
            while j < n and text[j].isascii() and text[j].isdigit():
                j += 1
            if j < n and _is_ident_start(text[j]):
                raise LexError(f"malformed number {text[i:j + 1]!r}", line, col)
            emit(INT, text[i:j], col, j - i)
            col += j - i
            i = j
            continue
        if _is_ident_start(ch):
            j = i
            while j < n and _is_ident_char(text[j]):
                j += 1
            word = text[i:j]
            emit(KEYWORD if word in KEYWORDS else IDENT, word, col, j - i)
            col += j - i
            i = j
            continue
        if ch == '"':
            j = i + 1
            chars = []
            while True:
                if j >= n or text[j] == "\n":
                    raise LexError("unterminated string", line, col)
                if text[j] == "\\" and j + 1 < n and text[j + 1] in '"\\':
                    chars.append(text[j + 1])
                    j += 2
                    continue
                if text[j] == '"':
                    break
                chars.append(text[j])
                j += 1
            emit(STRING, "".join(chars), col, j + 1 - i)
            col += j + 1 - i
            i = j + 1
            continue
        raise LexError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token(EOF, "", line, col, col))
    return tokens
