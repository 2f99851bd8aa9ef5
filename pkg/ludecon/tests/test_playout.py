"""
Tests for seeded playouts and the playout concepts computed from them.

Licensed under the Apache License, Version 2.0
"""
import math
import os
import unittest
import warnings
from functools import lru_cache
from unittest import mock

from ludecon.compiler import compile_game, static_scan
from ludecon.concepts import FREQUENCY_PAIRS, MOVEMENT_CONCEPTS, Concept
from ludecon.datasets import PLAYABLE_GAMES, load_game_source
from ludecon.diagnostics import TruncatedTrialWarning
from ludecon.language import parse_source
from ludecon.playout import (
    FIRST_LEGAL,
    THREADS_ENV,
    UNIFORM_RANDOM,
    PlayoutConfig,
    analyze,
    playout_concepts,
    run_playouts,
    run_trial,
    run_trials,
    trial_seed,
    trial_seeds,
    worker_count,
)
from ludecon.validation.exceptions import LudeconError

END_FREQUENCIES = (
    Concept.LINE_END_FREQUENCY,
    Concept.CONNECTION_END_FREQUENCY,
    Concept.LOOP_END_FREQUENCY,
    Concept.NO_MOVES_END_FREQUENCY,
    Concept.REACH_END_FREQUENCY,
)
SLOW = os.environ.get("LUDECON_SLOW_TESTS") == "1"

TIC_TAC_TOE_LINES = (
    (0, 1, 2), (3, 4, 5), (6, 7, 8),
    (0, 3, 6), (1, 4, 7), (2, 5, 8),
    (0, 4, 8), (2, 4, 6),
)


def _bundled(game_id):
    return compile_game(parse_source(load_game_source(game_id)))


def _tic_tac_toe_won(board, player):
    return any(all(board[i] == player for i in line) for line in TIC_TAC_TOE_LINES)


@lru_cache(maxsize=None)
def _tic_tac_toe_odds(board, player):
    """
    Exact statistics of uniform random play from a position.

    Returns:
        (P1 win, P2 win, draw) probabilities, leaf count, and the first two
        moments of the number of moves still to play.
    """
    empty = [i for i, owner in enumerate(board) if owner == 0]
    if not empty:
        return 0.0, 0.0, 1.0, 1, 0.0, 0.0
    p1 = p2 = draw = length = length_sq = 0.0
    leaves = 0
    for site in empty:
        after = board[:site] + (player,) + board[site + 1:]
        if _tic_tac_toe_won(after, player):
            child = (float(player == 1), float(player == 2), 0.0, 1, 0.0, 0.0)
        else:
            child = _tic_tac_toe_odds(after, 3 - player)
        share = 1.0 / len(empty)
        p1 += child[0] * share
        p2 += child[1] * share
        draw += child[2] * share
        leaves += child[3]
        length += (1.0 + child[4]) * share
        length_sq += (1.0 + 2.0 * child[4] + child[5]) * share
    return p1, p2, draw, leaves, length, length_sq


class TestSeeding(unittest.TestCase):
    def test_trial_seed_is_deterministic(self):
        self.assertEqual(trial_seed(7, 3), trial_seed(7, 3))
        self.assertEqual(trial_seeds(7, 5), [trial_seed(7, i) for i in range(5)])

    def test_trial_seeds_differ(self):
        seeds = trial_seeds(0, 1000)
        self.assertEqual(len(set(seeds)), len(seeds))
        self.assertNotEqual(trial_seed(0, 0), trial_seed(1, 0))

    def test_worker_count(self):
        self.assertEqual(worker_count(3), 3)
        self.assertEqual(worker_count(0), 1)
        with mock.patch.dict(os.environ, {THREADS_ENV: "2"}):
            self.assertEqual(worker_count(), 2)
            self.assertEqual(worker_count(5), 5)
        with mock.patch.dict(os.environ, {THREADS_ENV: "many"}):
            self.assertGreaterEqual(worker_count(), 1)


class TestPlayoutConfig(unittest.TestCase):
    def test_defaults(self):
        config = PlayoutConfig()
        self.assertEqual(config.trials, 10000)
        self.assertEqual(config.policy, UNIFORM_RANDOM)
        self.assertIsNone(config.move_cap)

    def test_round_trip(self):
        config = PlayoutConfig(trials=12, master_seed=4, policy=FIRST_LEGAL, move_cap=30)
        self.assertEqual(PlayoutConfig.from_dict(config.to_dict()), config)

    def test_invalid(self):
        for kwargs in (
            {"trials": 0},
            {"trials": True},
            {"master_seed": -1},
            {"move_cap": 0},
            {"policy": "Greedy"},
        ):
            with self.subTest(**kwargs):
                with self.assertRaises(LudeconError):
                    PlayoutConfig(**kwargs)


class TestTrial(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tic_tac_toe = _bundled("TicTacToe")
        cls.amazons = _bundled("Amazons")

    def test_first_legal_tic_tac_toe(self):
        # P1 takes A1, C1, B2 and A3: the anti-diagonal
        trial = run_trial(self.tic_tac_toe, FIRST_LEGAL)
        self.assertEqual(trial.length, 7)
        self.assertFalse(trial.truncated)
        self.assertEqual(trial.outcome.winner, 1)
        self.assertEqual(trial.outcome.tags, frozenset({int(Concept.LINE_END)}))
        self.assertEqual([r.k for r in trial.records], [9, 8, 7, 6, 5, 4, 3])
        self.assertEqual([r.mover for r in trial.records], [1, 2, 1, 2, 1, 2, 1])
        self.assertEqual(trial.count(Concept.ADD_MOVE), 7)
        self.assertEqual(trial.frequency(Concept.ADD_MOVE), 1.0)

    def test_first_legal_ignores_the_seed(self):
        self.assertEqual(
            run_trial(self.tic_tac_toe, FIRST_LEGAL, seed=1).records,
            run_trial(self.tic_tac_toe, FIRST_LEGAL, seed=2).records,
        )

    def test_uniform_random_is_seeded(self):
        a = run_trial(self.tic_tac_toe, UNIFORM_RANDOM, seed=11)
        b = run_trial(self.tic_tac_toe, UNIFORM_RANDOM, seed=11)
        self.assertEqual(a, b)
        self.assertTrue(5 <= a.length <= 9)

    def test_on_move_sees_every_move(self):
        seen = []
        trial = run_trial(self.tic_tac_toe, UNIFORM_RANDOM, seed=5, on_move=lambda state, move: seen.append(move))
        self.assertEqual(len(seen), trial.length)
        self.assertEqual(len({move.to_site for move in seen}), trial.length)

    def test_move_cap_truncates(self):
        trial = run_trial(self.tic_tac_toe, UNIFORM_RANDOM, seed=3, move_cap=3)
        self.assertTrue(trial.truncated)
        self.assertIsNone(trial.outcome)
        self.assertEqual(trial.length, 3)
        self.assertIn("truncated", repr(trial))

    def test_amazons_turns_alternate_slide_and_shoot(self):
        trial = run_trial(self.amazons, UNIFORM_RANDOM, seed=2)
        self.assertFalse(trial.truncated)
        self.assertEqual(trial.length % 2, 0)
        slide, shoot = int(Concept.SLIDE_MOVE), int(Concept.SHOOT_MOVE)
        for i, record in enumerate(trial.records):
            with self.subTest(move=i):
                if i % 2 == 0:
                    self.assertIn(slide, record.tags)
                    self.assertIn(int(Concept.MOVE_AGAIN), record.tags)
                else:
                    self.assertIn(shoot, record.tags)
                # both halves of a turn belong to the same player
                self.assertEqual(record.mover, 1 + (i // 2) % 2)
        self.assertEqual(trial.frequency(Concept.SLIDE_MOVE), 0.5)
        self.assertEqual(trial.frequency(Concept.SHOOT_MOVE), 0.5)
        self.assertIn(int(Concept.NO_MOVES_END), trial.outcome.tags)


class TestPlayoutConcepts(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.specs = {game_id: _bundled(game_id) for game_id in PLAYABLE_GAMES}

    def test_single_first_legal_trial(self):
        spec = self.specs["TicTacToe"]
        result = run_playouts(spec, PlayoutConfig(trials=1, policy=FIRST_LEGAL), n_workers=1)
        vector = result.vector
        self.assertEqual(vector[Concept.GAME_LENGTH], 7)
        self.assertEqual(vector[Concept.ADD_FREQUENCY], 1.0)
        self.assertEqual(vector[Concept.LINE_END_FREQUENCY], 1.0)
        self.assertEqual(vector[Concept.BRANCHING_FACTOR], 6.0)
        self.assertEqual(vector[Concept.BALANCE], 0.5)
        self.assertEqual(vector[Concept.DRAWISHNESS], 0.0)
        self.assertEqual(vector[Concept.TIMEOUTS], 0.0)
        self.assertEqual(vector.provenance, {"trials": 1, "seed": 0, "policy": FIRST_LEGAL, "moveCap": 36})
        self.assertEqual(result.summary.wins, {1: 1})
        self.assertEqual(result.summary.mean_length, 7.0)

    def test_only_playout_concepts(self):
        vector = analyze(self.specs["TicTacToe"], PlayoutConfig(trials=5), n_workers=1)
        self.assertTrue(all(d.computation.value == "Playout" for d, _ in vector.items()))

    def test_amazons_frequencies(self):
        vector = analyze(self.specs["Amazons"], PlayoutConfig(trials=4, master_seed=1), n_workers=1)
        self.assertEqual(vector[Concept.SLIDE_FREQUENCY], 0.5)
        self.assertEqual(vector[Concept.SHOOT_FREQUENCY], 0.5)
        self.assertEqual(vector[Concept.MOVE_AGAIN_FREQUENCY], 0.5)
        self.assertEqual(vector[Concept.ADD_FREQUENCY], 0.0)
        self.assertEqual(vector[Concept.NO_MOVES_END_FREQUENCY], 1.0)

    def test_one_movement_tag_per_move(self):
        movement = {int(c) for c in MOVEMENT_CONCEPTS}
        for game_id, spec in self.specs.items():
            with self.subTest(game=game_id):
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    trials = run_trials(spec, PlayoutConfig(trials=3, master_seed=9), n_workers=1)
                for trial in trials:
                    for record in trial.records:
                        self.assertEqual(len(record.tags & movement), 1)

    def test_outcomes_add_up(self):
        for game_id, spec in self.specs.items():
            with self.subTest(game=game_id):
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    vector = analyze(spec, PlayoutConfig(trials=6, master_seed=2), n_workers=1)
                total = sum(vector[c] for c in END_FREQUENCIES) + vector[Concept.DRAWISHNESS] + vector[Concept.TIMEOUTS]
                self.assertAlmostEqual(total, 1.0, places=9)
                for definition, value in vector.items():
                    if definition.name.endswith("Frequency"):
                        self.assertTrue(0.0 <= value <= 1.0)

    def test_move_cap_makes_timeouts(self):
        with self.assertWarns(TruncatedTrialWarning):
            result = run_playouts(self.specs["TicTacToe"], PlayoutConfig(trials=4, move_cap=3), n_workers=1)
        self.assertEqual(result.vector[Concept.TIMEOUTS], 1.0)
        self.assertEqual(result.vector[Concept.LINE_END_FREQUENCY], 0.0)
        self.assertEqual(result.vector[Concept.DRAWISHNESS], 0.0)
        self.assertEqual(result.vector[Concept.GAME_LENGTH], 3.0)
        self.assertEqual(result.summary.n_truncated, 4)
        self.assertEqual(result.summary.truncated_fraction, 1.0)

    def test_snakes_and_ladders_only_rolls(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            vector = analyze(self.specs["SnakesAndLadders"], PlayoutConfig(trials=3, master_seed=5), n_workers=1)
        self.assertEqual(vector[Concept.ROLL_FREQUENCY], 1.0)
        self.assertEqual(vector[Concept.ADD_FREQUENCY], 0.0)

    def test_no_trials(self):
        with self.assertRaises(ValueError):
            playout_concepts(self.specs["TicTacToe"], [])

    def test_scanned_movement_is_played(self):
        movement = {int(c) for c in MOVEMENT_CONCEPTS}
        for game_id, spec in self.specs.items():
            with self.subTest(game=game_id):
                scanned = static_scan(parse_source(load_game_source(game_id))).vector
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    trials = run_trials(spec, PlayoutConfig(trials=5, master_seed=3), n_workers=1)
                played = {tag for t in trials for r in t.records for tag in r.tags} & movement
                expected = {cid for cid in movement if scanned.get(cid, 0) == 1}
                if int(Concept.SHOOT_MOVE) in expected:
                    # shooting a neutral piece is scanned as an add too
                    expected.discard(int(Concept.ADD_MOVE))
                self.assertEqual(played, expected)
                for cid in played:
                    self.assertIn(cid, FREQUENCY_PAIRS)


class TestDeterminism(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.spec = _bundled("TicTacToe")

    def test_worker_count_does_not_matter(self):
        config = PlayoutConfig(trials=40, master_seed=13)
        one = run_playouts(self.spec, config, n_workers=1)
        two = run_playouts(self.spec, config, n_workers=2)
        self.assertEqual(one.trials, two.trials)
        self.assertEqual(one.vector.to_dict(), two.vector.to_dict())
        self.assertEqual([t.seed for t in one.trials], trial_seeds(13, 40))

    def test_master_seed_matters(self):
        a = run_trials(self.spec, PlayoutConfig(trials=20, master_seed=1), n_workers=1)
        b = run_trials(self.spec, PlayoutConfig(trials=20, master_seed=2), n_workers=1)
        self.assertNotEqual(a, b)


class TestTicTacToeOdds(unittest.TestCase):
    def test_enumeration(self):
        p1, p2, draw, leaves, length, _ = _tic_tac_toe_odds((0,) * 9, 1)
        self.assertEqual(leaves, 255168)
        self.assertAlmostEqual(p1 + p2 + draw, 1.0)
        self.assertAlmostEqual(p1, 0.5848, places=3)
        self.assertTrue(5.0 < length < 9.0)

    def test_random_playouts_match_enumeration(self):
        n = 10000 if SLOW else 2000
        spec = _bundled("TicTacToe")
        result = run_playouts(spec, PlayoutConfig(trials=n, master_seed=21), n_workers=1)
        p1, p2, draw, _, length, length_sq = _tic_tac_toe_odds((0,) * 9, 1)
        observed = {
            "P1": result.summary.wins.get(1, 0) / n,
            "P2": result.summary.wins.get(2, 0) / n,
            "draw": result.summary.n_draws / n,
        }
        tolerance = 3 if SLOW else 4
        for name, expected in (("P1", p1), ("P2", p2), ("draw", draw)):
            with self.subTest(outcome=name):
                sigma = math.sqrt(expected * (1 - expected) / n)
                self.assertLess(abs(observed[name] - expected), tolerance * sigma)
        line_end = p1 + p2
        sigma = math.sqrt(line_end * (1 - line_end) / n)
        self.assertLess(abs(result.vector[Concept.LINE_END_FREQUENCY] - line_end), tolerance * sigma)
        sigma = math.sqrt((length_sq - length ** 2) / n)
        self.assertLess(abs(result.vector[Concept.GAME_LENGTH] - length), tolerance * sigma)
        self.assertAlmostEqual(result.vector[Concept.DRAWISHNESS], observed["draw"])
        self.assertAlmostEqual(result.vector[Concept.BALANCE], (observed["P1"] - observed["P2"]) / 2)


class TestHexPlayouts(unittest.TestCase):
    def test_hex_never_draws(self):
        n = 10000 if SLOW else 30
        result = run_playouts(_bundled("Hex"), PlayoutConfig(trials=n, master_seed=4), n_workers=None if SLOW else 1)
        self.assertEqual(result.summary.n_draws, 0)
        self.assertEqual(result.summary.n_truncated, 0)
        self.assertEqual(result.vector[Concept.CONNECTION_END_FREQUENCY], 1.0)
        for trial in result.trials:
            self.assertEqual(trial.outcome.tags, frozenset({int(Concept.CONNECTION_END)}))


class TestHavannahPlayouts(unittest.TestCase):
    def test_loop_wins_dominate(self):
        n = 300
        result = run_playouts(_bundled("Havannah"), PlayoutConfig(trials=n, master_seed=2), n_workers=1)
        loops = result.vector[Concept.LOOP_END_FREQUENCY]
        self.assertGreater(loops, 0.6)
        self.assertLess(loops, 0.85)
        self.assertAlmostEqual(loops + result.vector[Concept.CONNECTION_END_FREQUENCY], 1.0)


@unittest.skipUnless(SLOW, "set LUDECON_SLOW_TESTS=1 to run the long Havannah and Amazons playouts")
class TestLongPlayouts(unittest.TestCase):
    def test_havannah_connection_and_loop_wins(self):
        vector = analyze(_bundled("Havannah"), PlayoutConfig(trials=10000, master_seed=0))
        self.assertAlmostEqual(vector[Concept.CONNECTION_END_FREQUENCY], 0.27, delta=0.05)
        self.assertAlmostEqual(vector[Concept.LOOP_END_FREQUENCY], 0.73, delta=0.05)
        self.assertEqual(vector[Concept.TIMEOUTS], 0.0)

    def test_amazons_slide_and_shoot(self):
        result = run_playouts(_bundled("Amazons"), PlayoutConfig(trials=1000, master_seed=8))
        self.assertAlmostEqual(result.vector[Concept.SLIDE_FREQUENCY], 0.5, delta=0.01)
        self.assertAlmostEqual(result.vector[Concept.SHOOT_FREQUENCY], 0.5, delta=0.01)
        for trial in result.trials:
            self.assertLessEqual(abs(trial.count(Concept.SLIDE_MOVE) - trial.count(Concept.SHOOT_MOVE)), 1)


if __name__ == "__main__":
    unittest.main()
