"""
Tests for the analysis of single description files.

Licensed under the Apache License, Version 2.0
"""
import json
import os
import shutil
import tempfile
import unittest
import warnings

from ludecon.concepts import Concept
from ludecon.datasets import game_path, load_game_source
from ludecon.diagnostics import ScanOnlyFallbackWarning, UnknownConstructorWarning
from ludecon.pipeline import analyze_file, game_id_of
from ludecon.playout import PlayoutConfig
from ludecon.validation.exceptions import LudemeSyntaxError, NotAGameError


class TestAnalyzeFile(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def _write(self, name, text):
        path = os.path.join(self.directory, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def test_game_id(self):
        self.assertEqual(game_id_of("/some/where/Hex.lud"), "Hex")

    def test_scan_only(self):
        analysis = analyze_file(game_path("Hex"), compile=False)
        self.assertIsNone(analysis.spec)
        self.assertFalse(analysis.scan_only)
        self.assertEqual(analysis.name, "Hex")
        self.assertEqual(analysis.vector.get(Concept.HEX_TILING), 1)
        self.assertNotIn(Concept.GAME_LENGTH, analysis.vector)

    def test_playable_game(self):
        analysis = analyze_file(game_path("Hex"), PlayoutConfig(trials=3, master_seed=1), n_workers=1)
        self.assertIsNotNone(analysis.spec)
        self.assertEqual(analysis.vector.get(Concept.ADD_MOVE), 1)
        self.assertEqual(analysis.vector.get(Concept.ADD_FREQUENCY), 1.0)
        self.assertEqual(analysis.vector.get(Concept.CONNECTION_END_FREQUENCY), 1.0)
        report = analysis.report().to_dict()
        self.assertEqual(
            report["playout"],
            {"trials": 3, "seed": 1, "policy": "UniformRandom", "moveCap": 484, "truncatedFraction": 0.0},
        )
        self.assertFalse(report["scanOnly"])
        self.assertEqual(report["warnings"], [])
        ids = [entry["id"] for entry in report["concepts"]]
        self.assertEqual(ids, sorted(ids))
        self.assertEqual(
            set(report["concepts"][0]),
            {"id", "name", "category", "dataType", "computation", "value"},
        )

    def test_chess_falls_back_to_scan(self):
        with self.assertWarns(ScanOnlyFallbackWarning):
            analysis = analyze_file(game_path("Chess"), PlayoutConfig(trials=2))
        self.assertTrue(analysis.scan_only)
        self.assertIsNone(analysis.playout)
        report = analysis.report()
        self.assertEqual(report.warnings, ["UnsupportedLudeme: is Checkmate"])
        self.assertEqual(report.value("Checkmate End"), 1)
        payload = json.loads(report.to_json())
        self.assertTrue(payload["scanOnly"])
        self.assertIsNone(payload["playout"])

    def test_unknown_constructor(self):
        source = load_game_source("TicTacToe").replace(
            '(piece "Cross" P2)', '(piece "Cross" P2)\n        (frobnicate 3)'
        )
        path = self._write("Frob.lud", source)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            analysis = analyze_file(path)
        categories = {w.category for w in caught}
        self.assertIn(UnknownConstructorWarning, categories)
        self.assertIn(ScanOnlyFallbackWarning, categories)
        self.assertEqual(analysis.game_id, "Frob")
        self.assertEqual(analysis.warnings, ["UnknownConstructor: frobnicate", "UnsupportedLudeme: frobnicate"])
        self.assertEqual(analysis.vector.get(Concept.ADD_MOVE), 1)

    def test_annotations(self):
        analysis = analyze_file(game_path("Shogi"), compile=False)
        self.assertEqual(analysis.report().annotations, {"PlayableSites": 95})

    def test_errors(self):
        with self.assertRaises(OSError):
            analyze_file(os.path.join(self.directory, "Missing.lud"))
        with self.assertRaises(LudemeSyntaxError):
            analyze_file(self._write("Open.lud", "(game"))
        with self.assertRaises(NotAGameError):
            analyze_file(self._write("Match.lud", '(match "X")'))


if __name__ == "__main__":
    unittest.main()
