"""
ludecon: game concepts from ludeme descriptions of board games.

ludecon parses ludeme-style game descriptions, detects the concepts a game
uses from its description alone, plays a supported subset of games with seeded
random playouts to measure how often concepts occur in play, and compares
games by their concept vectors to find similar games and recommend new ones.

Architecture:
    - language/     : Tokenizer, parser and printer of ludeme descriptions
    - concepts/     : Concept registry and concept vectors
    - board/        : Square and hexagonal board topologies
    - compiler/     : Static concept scan and compilation of the playable subset
    - engine/       : Legal moves, atomic actions and end rules
    - playout/      : Seeded playouts and playout concepts
    - recommender/  : Corpus of concept vectors, distances and recommendations
    - datasets/     : The bundled game library
    - validation/   : Exceptions and centralized input checks
    - diagnostics/  : Reports and structured warnings

Quick Start:
    >>> from ludecon import parse_source, static_scan, compile_game
    >>> from ludecon.datasets import load_game_source
    >>> from ludecon.playout import PlayoutConfig, analyze
    >>>
    >>> tree = parse_source(load_game_source("Havannah"))
    >>> scan = static_scan(tree)
    >>> playout = analyze(compile_game(tree), PlayoutConfig(trials=1000, master_seed=1))
"""

__version__ = "0.1.0"

from . import validation
from . import diagnostics
from . import concepts

from .language import parse_source, print_ludeme
from .compiler import compile_game, static_scan
from .concepts import Concept, ConceptVector, lookup, registry
from .validation import LudeconError
from .diagnostics import LudeconWarning

__all__ = [
    "validation",
    "diagnostics",
    "concepts",
    "parse_source",
    "print_ludeme",
    "compile_game",
    "static_scan",
    "Concept",
    "ConceptVector",
    "lookup",
    "registry",
    "LudeconError",
    "LudeconWarning",
]
