"""
Recursive-descent parser from tokens to a ludeme tree.
"""
import logging
from typing import List, Sequence

from ..validation.exceptions import (
    EmptyConstructorError,
    LudemeSyntaxError,
    TrailingInputError,
    UnbalancedDelimiterError,
)
from .lexer import tokenize
from .nodes import LudemeNode, NodeKind
from .tokens import CLOSERS, OPENERS, Token, TokenKind

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

_CLOSE_TEXT = {TokenKind.RPAREN: ")", TokenKind.RBRACE: "}"}


class _Parser:
    def __init__(self, tokens: Sequence[Token]):
        self.tokens = tokens
        self.position = 0

    def parse_expression(self) -> LudemeNode:
        token = self.tokens[self.position]
        kind = token.kind
        if kind in CLOSERS:
            raise UnbalancedDelimiterError(f"unexpected {token.text!r} without an opener", token.span)
        self.position += 1
        if kind is TokenKind.SYMBOL:
            return LudemeNode(NodeKind.SYMBOL, value=token.text, span=token.span)
        if kind is TokenKind.STRING:
            return LudemeNode(NodeKind.STRING, value=token.text, span=token.span)
        if kind is TokenKind.NUMBER:
            value = float(token.text) if "." in token.text else int(token.text)
            return LudemeNode(NodeKind.NUMBER, value=value, span=token.span)
        return self._parse_group(token)

    def _parse_group(self, opener: Token) -> LudemeNode:
        closer = OPENERS[opener.kind]
        children: List[LudemeNode] = []
        while True:
            if self.position >= len(self.tokens):
                raise UnbalancedDelimiterError(f"{opener.text!r} is never closed", opener.span)
            token = self.tokens[self.position]
            if token.kind in CLOSERS:
                if token.kind is not closer:
                    raise UnbalancedDelimiterError(
                        f"{token.text!r} closes {opener.text!r} (line {opener.span.line}), "
                        f"expected {_CLOSE_TEXT[closer]!r}",
                        token.span,
                    )
                self.position += 1
                span = opener.span.cover(token.span)
                break
            children.append(self.parse_expression())

        if opener.kind is TokenKind.LBRACE:
            return LudemeNode(NodeKind.SET, children=tuple(children), span=span)
        if not children:
            raise EmptyConstructorError("empty constructor '()'", span)
        head = children[0]
        if head.kind is not NodeKind.SYMBOL:
            raise LudemeSyntaxError("constructor head must be a symbol", head.span)
        return LudemeNode(NodeKind.CONSTRUCTOR, head=head.value, children=tuple(children[1:]), span=span)


def parse(tokens: Sequence[Token]) -> LudemeNode:
    """
    Parse a token list into the single root node of the description.

    Any head symbol is accepted; `{ ... }` yields a Set node.

    Raises:
        UnbalancedDelimiterError: stray, mismatched or unclosed delimiter (span of the offender).
        EmptyConstructorError: `()`.
        TrailingInputError: more than one root expression.
        LudemeSyntaxError: empty input, or a constructor whose head is not a symbol.
    """
    if not tokens:
        raise LudemeSyntaxError("empty description")
    parser = _Parser(tokens)
    root = parser.parse_expression()
    if parser.position < len(tokens):
        extra = tokens[parser.position]
        if extra.kind in CLOSERS:
            raise UnbalancedDelimiterError(f"unexpected {extra.text!r} without an opener", extra.span)
        raise TrailingInputError("more than one root expression", extra.span)
    return root


def parse_source(source: str) -> LudemeNode:
    """tokenize() then parse()."""
    return parse(tokenize(source))
