"""
Tests for the game corpus, game distances and recommendations.

Licensed under the Apache License, Version 2.0
"""
import json
import os
import shutil
import tempfile
import unittest
import warnings

import numpy as np

from ludecon.concepts import Concept, ConceptCategory, ConceptVector, registry
from ludecon.datasets import PLAYABLE_GAMES, game_path, load_bundled_corpus
from ludecon.diagnostics import CorpusFileSkippedWarning, ScanOnlyFallbackWarning
from ludecon.playout import PlayoutConfig
from ludecon.recommender import (
    Corpus,
    CorpusEntry,
    DistanceConfig,
    binary_distance,
    build_corpus,
    corpus_files,
    coverage_subset,
    distance_matrix,
    game_distance,
    load_corpus,
    nearest,
    numeric_distance,
    recommend,
    save_corpus,
    search,
    sidecar_path,
)
from ludecon.validation.exceptions import (
    EmptyIntersectionError,
    EmptyLikesError,
    LudeconError,
    UnknownConceptError,
    UnknownGameError,
)


def _build(files, config=None):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build_corpus(files, config, n_workers=1)


def _entry(game_id, values):
    return CorpusEntry(game_id=game_id, display_name=game_id, vector=ConceptVector(values))


class TestDistance(unittest.TestCase):
    def setUp(self):
        self.a = _entry("a", {Concept.TWO_PLAYER: 1, Concept.ADD_MOVE: 1, Concept.NUM_PLAYABLE_SITES: 9})
        self.b = _entry("b", {Concept.TWO_PLAYER: 1, Concept.STEP_MOVE: 1, Concept.NUM_PLAYABLE_SITES: 121})

    def test_binary_part_is_jaccard(self):
        self.assertAlmostEqual(binary_distance(self.a, self.b, DistanceConfig()), 2 / 3)
        self.assertEqual(binary_distance(self.a, self.a, DistanceConfig()), 0.0)

    def test_numeric_part_uses_ranges(self):
        config = DistanceConfig()
        ranges = {int(Concept.NUM_PLAYABLE_SITES): (9.0, 169.0)}
        self.assertAlmostEqual(numeric_distance(self.a, self.b, config, ranges), 0.7)
        # without ranges the pair spans its own range
        self.assertAlmostEqual(numeric_distance(self.a, self.b, config, {}), 1.0)

    def test_weights(self):
        ranges = {int(Concept.NUM_PLAYABLE_SITES): (9.0, 169.0)}
        self.assertAlmostEqual(game_distance(self.a, self.b, DistanceConfig(binary_weight=0.5), ranges), 0.5 * 2 / 3 + 0.35)
        self.assertAlmostEqual(game_distance(self.a, self.b, DistanceConfig(binary_weight=1.0), ranges), 2 / 3)
        self.assertAlmostEqual(game_distance(self.a, self.b, DistanceConfig(binary_weight=0.0), ranges), 0.7)

    def test_missing_numeric_part(self):
        c = _entry("c", {Concept.TWO_PLAYER: 1, Concept.STEP_MOVE: 1})
        self.assertIsNone(numeric_distance(self.a, c, DistanceConfig(), {}))
        self.assertAlmostEqual(game_distance(self.a, c), 2 / 3)

    def test_category_filter(self):
        equipment = DistanceConfig(categories={ConceptCategory.EQUIPMENT})
        self.assertIsNone(binary_distance(self.a, self.b, equipment))
        self.assertAlmostEqual(game_distance(self.a, self.b, equipment), 1.0)
        metrics = DistanceConfig(categories={ConceptCategory.METRICS})
        with self.assertRaises(EmptyIntersectionError):
            game_distance(self.a, self.b, metrics)

    def test_incomparable_games_rank_last(self):
        corpus = Corpus([self.a, self.b])
        metrics = DistanceConfig(categories={ConceptCategory.METRICS})
        self.assertEqual(nearest(corpus, "a", 1, metrics), [("b", 1.0)])

    def test_invalid_config(self):
        for kwargs in ({"binary_weight": 1.5}, {"binary_weight": -0.1}, {"binary_weight": "x"}, {"categories": set()}):
            with self.subTest(**kwargs):
                with self.assertRaises(LudeconError):
                    DistanceConfig(**kwargs)

    def test_config_to_dict(self):
        payload = DistanceConfig().to_dict()
        self.assertEqual(payload["binaryWeight"], 0.5)
        self.assertNotIn("Visual", payload["categories"])
        self.assertNotIn("Implementation", payload["categories"])


class TestCorpus(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.bundle = load_bundled_corpus()
        cls.corpus = _build(cls.bundle.files)

    def test_contents(self):
        self.assertEqual(len(self.corpus), 13)
        self.assertEqual(list(self.corpus.ids), sorted(self.bundle.ids))
        self.assertEqual(self.corpus.playable, tuple(PLAYABLE_GAMES))
        self.assertIn("Hex", self.corpus)
        self.assertEqual(self.corpus["TicTacToe"].display_name, "Tic-Tac-Toe")
        self.assertTrue(self.corpus["Chess"].scan_only)
        self.assertIsNone(self.corpus["Hex"].playout_config)
        with self.assertRaises(UnknownGameError):
            self.corpus["Nope"]

    def test_scan_only_warning(self):
        with self.assertWarns(ScanOnlyFallbackWarning):
            build_corpus([game_path("Chess")], None, n_workers=1)

    def test_duplicate_ids(self):
        entry = self.corpus["Hex"]
        with self.assertRaises(LudeconError):
            Corpus([entry, entry])

    def test_frame(self):
        frame = self.corpus.to_frame()
        self.assertEqual(frame.shape, (13, len(registry())))
        self.assertEqual(frame.loc["Hex", (int(Concept.HEX_TILING), "Hex Tiling")], 1.0)
        self.assertTrue(np.isnan(frame.loc["Hex", (int(Concept.SQUARE_TILING), "Square Tiling")]))

    def test_numeric_ranges(self):
        low, high = self.corpus.numeric_ranges()[int(Concept.NUM_PLAYERS)]
        self.assertEqual((low, high), (2.0, 6.0))

    def test_distance_properties(self):
        matrix = distance_matrix(self.corpus)
        self.assertEqual(list(matrix.index), list(self.corpus.ids))
        values = matrix.to_numpy()
        self.assertTrue(np.allclose(values, values.T, equal_nan=True))
        self.assertTrue(np.allclose(np.diag(values), 0.0))
        finite = values[~np.isnan(values)]
        self.assertTrue(((finite >= 0.0) & (finite <= 1.0)).all())
        ranges = self.corpus.numeric_ranges()
        hex_entry = self.corpus["Hex"]
        self.assertEqual(game_distance(hex_entry, hex_entry, ranges=ranges), 0.0)
        self.assertLess(
            game_distance(hex_entry, self.corpus["Havannah"], ranges=ranges),
            game_distance(hex_entry, self.corpus["Backgammon"], ranges=ranges),
        )

    def test_nearest(self):
        found = nearest(self.corpus, "Hex", k=1)
        self.assertEqual(found[0][0], "Havannah")
        everything = nearest(self.corpus, "Hex", k=50)
        self.assertEqual(len(everything), 12)
        self.assertNotIn("Hex", [game_id for game_id, _ in everything])
        distances = [d for _, d in everything]
        self.assertEqual(distances, sorted(distances))

    def test_recommend_one_like_matches_nearest(self):
        liked = [game_id for game_id, _ in recommend(self.corpus, ["Hex"], k=5)]
        self.assertEqual(liked, [game_id for game_id, _ in nearest(self.corpus, "Hex", k=5)])

    def test_liked_and_disliked_counts_as_liked(self):
        self.assertEqual(
            recommend(self.corpus, ["Hex"], ["Hex"], k=4),
            recommend(self.corpus, ["Hex"], k=4),
        )

    def test_recommend_with_dislikes(self):
        picks = recommend(self.corpus, ["Hex", "Havannah"], ["Backgammon"], k=3)
        ids = [game_id for game_id, _ in picks]
        self.assertEqual(len(ids), 3)
        self.assertFalse({"Hex", "Havannah", "Backgammon"} & set(ids))
        top = self.corpus[ids[0]]
        self.assertTrue(top.has(Concept.ADD_MOVE))
        self.assertFalse(top.has(Concept.STOCHASTIC))
        for game_id in ids[:2]:
            self.assertFalse(self.corpus[game_id].has(Concept.DICE_USED), msg=game_id)
        scores = [score for _, score in picks]
        self.assertEqual(scores, sorted(scores, reverse=True))

    def test_annotations_fill_the_vector(self):
        sites = int(Concept.NUM_PLAYABLE_SITES)
        self.assertEqual(self.corpus["Shogi"].vector[sites], 95)
        self.assertEqual(self.corpus["Backgammon"].vector[sites], 28)
        self.assertEqual(self.corpus["Oware"].vector[sites], 14)
        self.assertEqual(self.corpus["Hex"].vector[sites], 121)

    def test_track_boards_are_compared_on_their_numerics(self):
        config = DistanceConfig()
        ranges = self.corpus.numeric_ranges()
        tic_tac_toe, backgammon = self.corpus["TicTacToe"], self.corpus["Backgammon"]
        self.assertGreater(numeric_distance(tic_tac_toe, backgammon, config, ranges), 0.1)
        self.assertEqual(nearest(self.corpus, "Oware", k=1)[0][0], "Backgammon")
        self.assertNotIn("Oware", [game_id for game_id, _ in nearest(self.corpus, "Hex", k=3)])

    def test_recommend_errors(self):
        with self.assertRaises(EmptyLikesError):
            recommend(self.corpus, [])
        with self.assertRaises(UnknownGameError) as raised:
            recommend(self.corpus, ["Hex", "Nope"], ["Zilch"])
        self.assertEqual(set(raised.exception.game_ids), {"Nope", "Zilch"})
        with self.assertRaises(LudeconError):
            recommend(self.corpus, ["Hex"], k=0)
        with self.assertRaises(LudeconError):
            nearest(self.corpus, "Hex", k=0)
        with self.assertRaises(UnknownGameError):
            nearest(self.corpus, "Nope")

    def test_search(self):
        self.assertEqual(search(self.corpus, ["Hex Tiling"]), ["ChineseCheckers", "Havannah", "Hex"])
        self.assertEqual(search(self.corpus, [int(Concept.HEX_TILING)]), ["ChineseCheckers", "Havannah", "Hex"])
        self.assertEqual(search(self.corpus, ["Hex Tiling"], ["Loop End"]), ["ChineseCheckers", "Hex"])
        self.assertEqual(search(self.corpus), list(self.corpus.ids))
        with self.assertRaises(UnknownConceptError):
            search(self.corpus, ["Not A Concept"])

    def test_coverage_subset(self):
        config = DistanceConfig()
        picked = coverage_subset(self.corpus, 3, config)
        self.assertEqual(len(picked), 3)
        self.assertEqual(len(set(picked)), 3)
        ids = config.binary_ids()
        supports = {e.game_id: sum(1 for cid in ids if e.vector.get(cid, 0) == 1) for e in self.corpus}
        self.assertEqual(supports[picked[0]], max(supports.values()))
        self.assertLessEqual(len(coverage_subset(self.corpus, 50)), 13)


class TestCorpusFiles(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_round_trip(self):
        corpus = _build([game_path("TicTacToe"), game_path("Shogi")], PlayoutConfig(trials=5, master_seed=3))
        path = os.path.join(self.directory, "matrix.csv")
        sidecar = save_corpus(corpus, path)
        self.assertEqual(sidecar, sidecar_path(path))
        self.assertTrue(os.path.isfile(sidecar))

        loaded = load_corpus(path)
        self.assertEqual(loaded.ids, corpus.ids)
        for entry in corpus:
            other = loaded[entry.game_id]
            with self.subTest(game=entry.game_id):
                self.assertEqual(other.display_name, entry.display_name)
                self.assertEqual(other.scan_only, entry.scan_only)
                self.assertEqual(other.annotations, entry.annotations)
                self.assertEqual(other.playout_config, entry.playout_config)
                self.assertEqual(sorted(other.vector), sorted(entry.vector))
                for cid in entry.vector:
                    self.assertAlmostEqual(other.vector[cid], entry.vector[cid])
        self.assertEqual(loaded["Shogi"].annotations, {"PlayableSites": 95})
        self.assertIn(int(Concept.GAME_LENGTH), loaded["TicTacToe"].vector)
        self.assertNotIn(int(Concept.GAME_LENGTH), loaded["Shogi"].vector)
        self.assertEqual(loaded["TicTacToe"].playout_config["trials"], 5)

    def test_version_mismatch(self):
        corpus = _build([game_path("Hex")])
        path = os.path.join(self.directory, "matrix.csv")
        sidecar = save_corpus(corpus, path)
        with open(sidecar, encoding="utf-8") as f:
            payload = json.load(f)
        payload["distanceVersion"] = 999
        with open(sidecar, "w", encoding="utf-8") as f:
            json.dump(payload, f)
        with self.assertRaises(LudeconError):
            load_corpus(path)

    def test_missing_sidecar(self):
        corpus = _build([game_path("Hex")])
        path = os.path.join(self.directory, "matrix.csv")
        os.remove(save_corpus(corpus, path))
        with self.assertRaises(OSError):
            load_corpus(path)

    def test_unparsable_file_is_skipped(self):
        shutil.copy(game_path("Hex"), self.directory)
        with open(os.path.join(self.directory, "Broken.lud"), "w", encoding="utf-8") as f:
            f.write('(game "Broken"')
        files = corpus_files(self.directory)
        self.assertEqual([os.path.basename(f) for f in files], ["Broken.lud", "Hex.lud"])
        with self.assertWarns(CorpusFileSkippedWarning):
            corpus = build_corpus(files, None, n_workers=1)
        self.assertEqual(corpus.ids, ("Hex",))


if __name__ == "__main__":
    unittest.main()
