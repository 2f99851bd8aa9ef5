"""
Loaders for the bundled game library.

The library holds ludeme descriptions (`.lud` files) of 13 well-known games:
six are playable by the engine, seven can only be scanned for their
compilation concepts.

Licensed under the Apache License, Version 2.0
"""
import os
from typing import List

from sklearn.utils import Bunch

from ..validation.exceptions import UnknownGameError

DATA_DIR_NAME = "data"
GAMES_DIR_NAME = "games"
LUDEME_SUFFIX = ".lud"

PLAYABLE_GAMES = ("Amazons", "Breakthrough", "Havannah", "Hex", "SnakesAndLadders", "TicTacToe")
SCAN_ONLY_GAMES = ("Backgammon", "Chess", "ChineseCheckers", "Go", "Oware", "Shogi", "Xiangqi")


def games_dir() -> str:
    module_path = os.path.dirname(__file__)
    return os.path.join(module_path, DATA_DIR_NAME, GAMES_DIR_NAME)


def list_games() -> List[str]:
    """Ids (file stems) of the bundled games, sorted."""
    return sorted(
        os.path.splitext(name)[0] for name in os.listdir(games_dir()) if name.endswith(LUDEME_SUFFIX)
    )


def game_path(game_id: str) -> str:
    """
    Path of a bundled description.

    Raises:
        UnknownGameError: no bundled game has this id.
    """
    path = os.path.join(games_dir(), game_id + LUDEME_SUFFIX)
    if not os.path.isfile(path):
        raise UnknownGameError([game_id], list_games())
    return path


def load_game_source(game_id: str) -> str:
    """Text of a bundled description."""
    with open(game_path(game_id), encoding="utf-8") as f:
        return f.read()


def load_bundled_corpus(playable_only=False):
    """Loads the descriptions of the bundled game library.

    Args:
        playable_only (bool): Whether to keep only the games the engine can play.
                              If False, the scan-only descriptions are included too.

    Returns:
        Bunch: dictionary-like object
               attributes are: `ids` (game ids), `files` (paths of the descriptions),
                               `sources` (their text), `playable` (ids of playable games),
                               `scan_only` (ids of scan-only games), `descr` (description)
    """
    ids = [game_id for game_id in list_games() if not playable_only or game_id in PLAYABLE_GAMES]
    files = [game_path(game_id) for game_id in ids]
    sources = [load_game_source(game_id) for game_id in ids]
    descr = (
        "Ludeme descriptions of well-known board games. Amazons and Havannah are written "
        "exactly as published with the ludeme language; the other playable games use the same "
        "subset. Scan-only descriptions name the ludemes behind their concepts and may carry "
        "'//@ annotation' lines for values the scanner cannot compute."
    )
    data = Bunch(
        ids=ids,
        files=files,
        sources=sources,
        playable=[game_id for game_id in ids if game_id in PLAYABLE_GAMES],
        scan_only=[game_id for game_id in ids if game_id in SCAN_ONLY_GAMES],
        descr=descr,
    )
    return data
