"""
Tokenizer for .construct scripts.

The language is line oriented: newlines are tokens, `#` starts a comment
that runs to the end of the line.
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

from utils.errors import ParseError

EOF = "$EOF"
NEWLINE = "$NL"
SYMBOLS = "()=,+-*/"

KEYWORDS = frozenset({
    "unit", "point", "points", "line", "circle", "len",
    "intersect", "midpoint", "onray", "dist", "through", "perp", "to",
    "center", "diameter", "divide", "near", "far", "side", "opposite",
    "of", "idx", "sqrt",
})


def is_digit(c: str) -> bool:
    return "0" <= c <= "9"


def is_name_first(c: str) -> bool:
    return c.isalpha() or c == "_"


def is_name_rest(c: str) -> bool:
    return c.isalnum() or c in "_'"


@dataclass(frozen=True)
class Token:
    kind: str  # "name", "int", "symbol", NEWLINE or EOF
    value: Union[str, int]
    location: Tuple[int, int]

    def is_symbol(self, text: str) -> bool:
        return self.kind == "symbol" and self.value == text

    def is_keyword(self, word: str) -> bool:
        return self.kind == "name" and self.value == word

    def describe(self) -> str:
        if self.kind == EOF:
            return "end of input"
        if self.kind == NEWLINE:
            return "end of line"
        return f"`{self.value}`"


class Scanner:
    def __init__(self, src: str):
        self._src = src
        self._pos = 0
        self._line = 1
        self._column = 1

    def tokens(self) -> List[Token]:
        out = []
        while True:
            token = self.next_token()
            out.append(token)
            if token.kind == EOF:
                return out

    def next_token(self) -> Token:
        while self._current_char() in (" ", "\t", "\r"):
            self._advance()
        if self._current_char() == "#":
            while self._current_char() not in ("\n", EOF):
                self._advance()

        location = (self._line, self._column)
        c = self._current_char()
        if c == EOF:
            return Token(EOF, EOF, location)
        if c == "\n":
            self._advance()
            return Token(NEWLINE, "\n", location)
        if is_name_first(c):
            return Token("name", self._word(is_name_rest), location)
        if is_digit(c):
            return Token("int", int(self._word(is_digit)), location)
        if c in SYMBOLS:
            self._advance()
            return Token("symbol", c, location)
        raise ParseError(f"unexpected character {c!r}", location)

    def _advance(self) -> None:
        if self._src[self._pos] == "\n":
            self._line += 1
            self._column = 1
        else:
            self._column += 1
        self._pos += 1

    def _current_char(self) -> str:
        if self._pos < len(self._src):
            return self._src[self._pos]
        return EOF

    def _word(self, is_rest) -> str:
        start = self._pos
        self._advance()
        while self._current_char() != EOF and is_rest(self._current_char()):
            self._advance()
        return self._src[start:self._pos]
