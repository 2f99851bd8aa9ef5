"""
Lexical units of the ludeme description language.
"""
from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True)
class SourceSpan:
    """Half-open character range [start, end) of a description, plus its 1-based start line."""

    start: int
    end: int
    line: int

    def text(self, source: str) -> str:
        return source[self.start:self.end]

    def cover(self, other: "SourceSpan") -> "SourceSpan":
        """Smallest span containing both spans."""
        first = self if self.start <= other.start else other
        return SourceSpan(first.start, max(self.end, other.end), first.line)


class TokenKind(Enum):
    LPAREN = "LParen"
    RPAREN = "RParen"
    LBRACE = "LBrace"
    RBRACE = "RBrace"
    SYMBOL = "Symbol"
    STRING = "StringLit"
    NUMBER = "NumberLit"


OPENERS = {TokenKind.LPAREN: TokenKind.RPAREN, TokenKind.LBRACE: TokenKind.RBRACE}
CLOSERS = {TokenKind.RPAREN, TokenKind.RBRACE}


@dataclass(frozen=True)
class Token:
    """
    A lexeme with its kind and position.

    `text` is the raw lexeme, except for string literals which are stored
    without their surrounding quotes (the span still covers the quotes).
    """

    kind: TokenKind
    text: str
    span: SourceSpan

    def __repr__(self) -> str:
        return f"Token({self.kind.value}, {self.text!r}, line={self.span.line})"
