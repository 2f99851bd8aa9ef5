"""
Custom exception types for ludecon.

Every error the library raises on purpose derives from `LudeconError`, so callers
(the CLI in particular) can tell expected failures from bugs. The classes are
grouped by the layer that raises them: description language, concept registry,
board topology, compiler, engine and recommender.

Licensed under the Apache License, Version 2.0
"""
from typing import Iterable, Optional, Sequence, Tuple


class LudeconError(ValueError):
    """
    Base exception for all ludecon failures.

    Inherits from ValueError: every failure is caused by a bad input
    (a malformed description, an unknown concept id, an unknown game...).
    """
    pass


# ---------------------------------------------------------------------------
# Description language
# ---------------------------------------------------------------------------

class LudemeSyntaxError(LudeconError):
    """
    Raised when a ludeme description cannot be tokenized or parsed.

    Attributes:
        span: SourceSpan of the offending text (None if unknown).
        line: 1-based line number (None if unknown).
    """

    def __init__(self, message: str, span=None):
        self.span = span
        self.line = getattr(span, "line", None)
        if self.line is not None:
            message = f"line {self.line}: {message}"
        super().__init__(message)


class UnterminatedStringError(LudemeSyntaxError):
    """A string literal is not closed before the end of its line."""
    pass


class IllegalCharacterError(LudemeSyntaxError):
    """A character outside symbols, numbers, strings, delimiters, whitespace and comments."""
    pass


class UnbalancedDelimiterError(LudemeSyntaxError):
    """
    A closing delimiter without an opener, a mismatched pair, or an opener never closed.

    Example:
        >>> parse(tokenize("(players 2"))
        UnbalancedDelimiterError: "line 1: '(' is never closed"
    """
    pass


class EmptyConstructorError(LudemeSyntaxError):
    """`()` has no head symbol."""
    pass


class TrailingInputError(LudemeSyntaxError):
    """More than one root expression in a description."""
    pass


# ---------------------------------------------------------------------------
# Concept registry
# ---------------------------------------------------------------------------

class UnknownConceptError(LudeconError, KeyError):
    """A concept id or name is not part of the registry."""

    def __str__(self):
        return ValueError.__str__(self)


class NoFrequencyPairError(LudeconError):
    """
    Raised when asking for the frequency concept of a concept that has none.

    Example:
        >>> frequency_concept_of(STOCHASTIC)
        NoFrequencyPairError: "Concept 'Stochastic' (id 4) has no playout frequency pair"
    """
    pass


class OverlappingDomainsError(LudeconError):
    """The compilation and playout vectors given to merge() share keys."""
    pass


class InvalidConceptValueError(LudeconError):
    """A value violates its concept's data type (binary not in {0, 1}, frequency outside [0, 1])."""
    pass


# ---------------------------------------------------------------------------
# Board topology
# ---------------------------------------------------------------------------

class InvalidSizeError(LudeconError):
    """A board dimension is smaller than 1 (or otherwise unusable)."""
    pass


# ---------------------------------------------------------------------------
# Compiler
# ---------------------------------------------------------------------------

class NotAGameError(LudeconError):
    """The root of a description is not a `(game ...)` constructor."""
    pass


class UnsupportedLudemeError(LudeconError):
    """
    Raised by compile() when a description uses ludemes outside the playable subset.

    Every offending constructor is listed, not only the first one.

    Attributes:
        items: tuple of (ludeme, span) pairs, e.g. (("is Checkmate", <span>),)
    """

    def __init__(self, items: Iterable[Tuple[str, object]]):
        self.items = tuple(items)
        listed = ", ".join(
            f"{name} (line {span.line})" if span is not None else name
            for name, span in self.items
        )
        super().__init__(f"Unsupported ludeme(s): {listed}")

    @property
    def ludemes(self) -> Tuple[str, ...]:
        """Names of the unsupported ludemes, in source order, without duplicates."""
        seen = []
        for name, _ in self.items:
            if name not in seen:
                seen.append(name)
        return tuple(seen)


class SemanticError(LudeconError):
    """
    A description is well-formed and supported but inconsistent.

    Example:
        >>> (place "Queen3" {"A1"}) in a 2-player game
        SemanticError: "Unknown piece 'Queen3' in start placement. Known pieces: Queen1, Queen2, Dot0"
    """

    def __init__(self, message: str, span=None):
        self.span = span
        if span is not None:
            message = f"line {span.line}: {message}"
        super().__init__(message)


# ---------------------------------------------------------------------------
# Engine
# ---------------------------------------------------------------------------

class TerminalStateError(LudeconError):
    """Legal moves were requested for a state whose outcome is already decided."""
    pass


class IllegalMoveError(LudeconError):
    """A move applied to a state is not among that state's legal moves."""
    pass


# ---------------------------------------------------------------------------
# Recommender
# ---------------------------------------------------------------------------

class UnknownGameError(LudeconError, KeyError):
    """A game id is not part of the corpus."""

    def __init__(self, game_ids: Sequence[str], known: Optional[Sequence[str]] = None):
        self.game_ids = tuple(game_ids)
        message = f"Unknown game id(s): {', '.join(self.game_ids)}"
        if known:
            message += f". Known games: {', '.join(sorted(known))}"
        super().__init__(message)

    def __str__(self):
        return ValueError.__str__(self)


class EmptyLikesError(LudeconError):
    """recommend() needs at least one liked game."""
    pass


class EmptyIntersectionError(LudeconError):
    """Two corpus entries have no comparable concept left after category filtering."""
    pass
