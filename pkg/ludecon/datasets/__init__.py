"""
Datasets Module

Provides the bundled game library:
- load_bundled_corpus: paths and text of every bundled description
- load_game_source: the text of one bundled game
- game_path / list_games: where the descriptions live

Use these games to demonstrate, test, and benchmark the concept engine.
"""
from .data_loader import (
    PLAYABLE_GAMES,
    SCAN_ONLY_GAMES,
    game_path,
    games_dir,
    list_games,
    load_bundled_corpus,
    load_game_source,
)

__all__ = [
    "PLAYABLE_GAMES",
    "SCAN_ONLY_GAMES",
    "game_path",
    "games_dir",
    "list_games",
    "load_bundled_corpus",
    "load_game_source",
]
