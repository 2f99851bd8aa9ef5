"""
Tokenizer for ludeme descriptions.

The lexical form is the one of the `.lud` files: parentheses for constructors,
braces for sets, double-quoted strings (no escapes, single line), decimal
integers and reals, case-sensitive symbols, and `//` line comments.
"""
import logging
import re
from typing import List

from ..validation.exceptions import IllegalCharacterError, UnterminatedStringError
from .tokens import SourceSpan, Token, TokenKind

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

_NUMBER = re.compile(r"-?\d+(?:\.\d+)?\Z")
SYMBOL_CHARS = frozenset(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_:.+-*/=<>!?"
)
_DELIMITERS = {
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    "{": TokenKind.LBRACE,
    "}": TokenKind.RBRACE,
}
_WHITESPACE = " \t\r\n\f\v\ufeff"
_WORD_STOP = frozenset(_WHITESPACE) | frozenset('(){}"')


def tokenize(source: str) -> List[Token]:
    """
    Split a description into tokens.

    Whitespace and `//` comments are skipped; every other character belongs
    to exactly one token, so the token spans plus the skipped text rebuild
    the source.

    Args:
        source: description text.

    Returns:
        list[Token]: tokens in source order (empty for blank input).

    Raises:
        UnterminatedStringError: a string is not closed before the end of its line.
        IllegalCharacterError: a character outside the lexical alphabet.
    """
    tokens = []
    i = 0
    line = 1
    n = len(source)
    while i < n:
        char = source[i]
        if char == "\n":
            line += 1
            i += 1
        elif char in _WHITESPACE:
            i += 1
        elif source.startswith("//", i):
            end = source.find("\n", i)
            i = n if end == -1 else end
        elif char in _DELIMITERS:
            tokens.append(Token(_DELIMITERS[char], char, SourceSpan(i, i + 1, line)))
            i += 1
        elif char == '"':
            end = i + 1
            while end < n and source[end] not in '"\n':
                end += 1
            if end >= n or source[end] != '"':
                raise UnterminatedStringError(
                    "string literal is not closed before the end of the line",
                    SourceSpan(i, end, line),
                )
            tokens.append(Token(TokenKind.STRING, source[i + 1:end], SourceSpan(i, end + 1, line)))
            i = end + 1
        else:
            end = i
            while end < n and source[end] not in _WORD_STOP and not source.startswith("//", end):
                end += 1
            word = source[i:end]
            span = SourceSpan(i, end, line)
            if _NUMBER.match(word):
                tokens.append(Token(TokenKind.NUMBER, word, span))
            else:
                for offset, c in enumerate(word):
                    if c not in SYMBOL_CHARS:
                        raise IllegalCharacterError(
                            f"illegal character {c!r}",
                            SourceSpan(i + offset, i + offset + 1, line),
                        )
                tokens.append(Token(TokenKind.SYMBOL, word, span))
            i = end
    logger.debug(f"Tokenized {n} characters into {len(tokens)} tokens")
    return tokens
