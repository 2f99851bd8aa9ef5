"""
Validation module initialization - public API.

Centralized exception hierarchy and input checks for ludecon.

Licensed under the Apache License, Version 2.0
"""

from .exceptions import (
    LudeconError,
    LudemeSyntaxError,
    UnterminatedStringError,
    IllegalCharacterError,
    UnbalancedDelimiterError,
    EmptyConstructorError,
    TrailingInputError,
    UnknownConceptError,
    NoFrequencyPairError,
    OverlappingDomainsError,
    InvalidConceptValueError,
    InvalidSizeError,
    NotAGameError,
    UnsupportedLudemeError,
    SemanticError,
    TerminalStateError,
    IllegalMoveError,
    UnknownGameError,
    EmptyLikesError,
    EmptyIntersectionError,
)

from .checks import (
    check_board_size,
    check_concept_values,
    check_playout_config,
    check_distance_config,
    check_known_games,
    check_likes,
)

__all__ = [
    # Exceptions
    "LudeconError",
    "LudemeSyntaxError",
    "UnterminatedStringError",
    "IllegalCharacterError",
    "UnbalancedDelimiterError",
    "EmptyConstructorError",
    "TrailingInputError",
    "UnknownConceptError",
    "NoFrequencyPairError",
    "OverlappingDomainsError",
    "InvalidConceptValueError",
    "InvalidSizeError",
    "NotAGameError",
    "UnsupportedLudemeError",
    "SemanticError",
    "TerminalStateError",
    "IllegalMoveError",
    "UnknownGameError",
    "EmptyLikesError",
    "EmptyIntersectionError",
    # Validation functions
    "check_board_size",
    "check_concept_values",
    "check_playout_config",
    "check_distance_config",
    "check_known_games",
    "check_likes",
]
