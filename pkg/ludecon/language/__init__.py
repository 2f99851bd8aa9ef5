"""
Ludeme description language: tokens, tree nodes, parser and printer.

Licensed under the Apache License, Version 2.0
"""
from .tokens import SourceSpan, Token, TokenKind
from .lexer import tokenize
from .nodes import LudemeNode, NodeKind
from .parser import parse, parse_source
from .printer import print_ludeme

__all__ = [
    "SourceSpan",
    "Token",
    "TokenKind",
    "tokenize",
    "LudemeNode",
    "NodeKind",
    "parse",
    "parse_source",
    "print_ludeme",
]
