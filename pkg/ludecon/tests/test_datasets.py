"""
Tests for the bundled game library.

Licensed under the Apache License, Version 2.0
"""
import os
import unittest

from ludecon.datasets import (
    PLAYABLE_GAMES,
    SCAN_ONLY_GAMES,
    game_path,
    games_dir,
    list_games,
    load_bundled_corpus,
    load_game_source,
)
from ludecon.language import parse_source
from ludecon.validation.exceptions import UnknownGameError


class TestDatasets(unittest.TestCase):
    def test_list_games(self):
        games = list_games()
        self.assertEqual(len(games), 13)
        self.assertEqual(games, sorted(games))
        self.assertEqual(set(games), set(PLAYABLE_GAMES) | set(SCAN_ONLY_GAMES))
        self.assertFalse(set(PLAYABLE_GAMES) & set(SCAN_ONLY_GAMES))

    def test_game_path(self):
        path = game_path("Hex")
        self.assertTrue(os.path.isfile(path))
        self.assertEqual(os.path.dirname(path), games_dir())
        with self.assertRaises(UnknownGameError) as raised:
            game_path("Hexx")
        self.assertIn("Known games: Amazons", str(raised.exception))
        self.assertIsInstance(raised.exception, KeyError)

    def test_sources_parse(self):
        for game_id in list_games():
            with self.subTest(game=game_id):
                self.assertEqual(parse_source(load_game_source(game_id)).head, "game")

    def test_load_bundled_corpus(self):
        data = load_bundled_corpus()
        self.assertEqual(data.ids, list_games())
        self.assertEqual(len(data.files), 13)
        self.assertEqual(len(data.sources), 13)
        self.assertEqual(data.playable, list(PLAYABLE_GAMES))
        self.assertEqual(data.scan_only, list(SCAN_ONLY_GAMES))
        self.assertIn("annotation", data.descr)
        self.assertEqual(data["ids"], data.ids)

    def test_load_playable_only(self):
        data = load_bundled_corpus(playable_only=True)
        self.assertEqual(data.ids, list(PLAYABLE_GAMES))
        self.assertEqual(data.scan_only, [])
        self.assertEqual(len(data.files), 6)


if __name__ == "__main__":
    unittest.main()
