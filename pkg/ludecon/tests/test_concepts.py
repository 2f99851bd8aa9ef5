"""
Tests for the concept registry, concept vectors and input validation.

Licensed under the Apache License, Version 2.0
"""
import math
import random
import unittest

from ludecon.concepts import (
    Concept,
    ConceptCategory,
    ConceptComputation,
    ConceptDataType,
    ConceptVector,
    DEFAULT_DISTANCE_CATEGORIES,
    END_CONCEPTS,
    FREQUENCY_PAIRS,
    MOVEMENT_CONCEPTS,
    base_concept_of,
    frequency_concept_of,
    is_known,
    lookup,
    merge,
    registry,
)
from ludecon.validation.checks import (
    check_board_size,
    check_distance_config,
    check_known_games,
    check_likes,
    check_playout_config,
)
from ludecon.validation.exceptions import (
    EmptyLikesError,
    InvalidConceptValueError,
    InvalidSizeError,
    LudeconError,
    NoFrequencyPairError,
    OverlappingDomainsError,
    UnknownConceptError,
    UnknownGameError,
)


class TestRegistry(unittest.TestCase):
    def test_ids_and_names_are_unique(self):
        definitions = registry()
        self.assertGreaterEqual(len(definitions), 60)
        ids = [d.id for d in definitions]
        self.assertEqual(len(set(ids)), len(ids))
        self.assertEqual(ids, sorted(ids))
        names = [d.name for d in definitions]
        self.assertEqual(len(set(names)), len(names))

    def test_every_enum_member_is_registered(self):
        for concept in Concept:
            with self.subTest(concept.name):
                self.assertTrue(is_known(concept))
                self.assertEqual(lookup(concept).id, int(concept))

    def test_lookup(self):
        with self.subTest("By name"):
            definition = lookup("Stochastic")
            self.assertEqual(definition.id, Concept.STOCHASTIC)
            self.assertEqual(definition.category, ConceptCategory.PROPERTIES)
            self.assertEqual(definition.data_type, ConceptDataType.BINARY)
            self.assertEqual(definition.computation, ConceptComputation.COMPILATION)
        with self.subTest("Integer concept"):
            self.assertEqual(lookup("Num Players").data_type, ConceptDataType.INT)
        with self.subTest("Playout metric"):
            definition = lookup(Concept.BRANCHING_FACTOR)
            self.assertEqual(definition.data_type, ConceptDataType.FLOAT)
            self.assertEqual(definition.computation, ConceptComputation.PLAYOUT)
            self.assertEqual(definition.category, ConceptCategory.METRICS)
        with self.subTest("Unknown keys"):
            with self.assertRaises(UnknownConceptError):
                lookup(9999)
            with self.assertRaises(UnknownConceptError):
                lookup("Not A Concept")
            with self.assertRaises(KeyError):
                lookup(9999)

    def test_to_dict(self):
        entry = lookup(Concept.HEX_TILING).to_dict()
        self.assertEqual(entry["name"], "Hex Tiling")
        self.assertEqual(entry["category"], "Equipment")
        self.assertEqual(entry["dataType"], "Binary")
        self.assertEqual(entry["computation"], "Compilation")

    def test_frequency_pairs(self):
        self.assertEqual(len(FREQUENCY_PAIRS), 14)
        for base, frequency in FREQUENCY_PAIRS.items():
            with self.subTest(lookup(base).name):
                self.assertEqual(frequency_concept_of(base), frequency)
                self.assertEqual(base_concept_of(frequency), base)
                base_def, freq_def = lookup(base), lookup(frequency)
                self.assertTrue(base_def.is_binary)
                self.assertEqual(freq_def.name, f"{base_def.name} Frequency")
                self.assertEqual(freq_def.category, base_def.category)
                self.assertEqual(freq_def.data_type, ConceptDataType.FLOAT)
                self.assertEqual(freq_def.computation, ConceptComputation.PLAYOUT)
        with self.assertRaises(NoFrequencyPairError):
            frequency_concept_of(Concept.STOCHASTIC)
        with self.assertRaises(NoFrequencyPairError):
            base_concept_of(Concept.ADD_MOVE)
        with self.assertRaises(UnknownConceptError):
            frequency_concept_of(9999)

    def test_movement_and_end_concepts_are_binary_rules(self):
        for concept in MOVEMENT_CONCEPTS + END_CONCEPTS:
            with self.subTest(concept.name):
                definition = lookup(concept)
                self.assertTrue(definition.is_binary)
                self.assertEqual(definition.category, ConceptCategory.RULES)

    def test_default_distance_categories(self):
        self.assertNotIn(ConceptCategory.VISUAL, DEFAULT_DISTANCE_CATEGORIES)
        self.assertNotIn(ConceptCategory.IMPLEMENTATION, DEFAULT_DISTANCE_CATEGORIES)
        # no concept is registered under the excluded categories yet
        categories = {d.category for d in registry()}
        self.assertTrue(categories <= DEFAULT_DISTANCE_CATEGORIES)


class TestConceptVector(unittest.TestCase):
    def test_values_are_normalized(self):
        vector = ConceptVector({Concept.TWO_PLAYER: True, Concept.NUM_PLAYERS: 2.0, Concept.GAME_LENGTH: 7})
        self.assertEqual(vector[Concept.TWO_PLAYER], 1)
        self.assertIsInstance(vector[Concept.NUM_PLAYERS], int)
        self.assertIsInstance(vector[Concept.GAME_LENGTH], float)
        self.assertEqual(list(vector), sorted(int(c) for c in vector.values))
        self.assertEqual(len(vector), 3)
        self.assertIn(Concept.TWO_PLAYER, vector)
        self.assertNotIn(Concept.STOCHASTIC, vector)
        self.assertIsNone(vector.get(Concept.STOCHASTIC))
        self.assertEqual(vector.get(Concept.STOCHASTIC, 0), 0)

    def test_invalid_values(self):
        cases = {
            "Binary out of range": {Concept.STOCHASTIC: 2},
            "Fractional integer": {Concept.NUM_PLAYERS: 2.5},
            "Frequency above one": {Concept.ADD_FREQUENCY: 1.5},
            "Negative frequency": {Concept.LINE_END_FREQUENCY: -0.1},
            "Not a number": {Concept.GAME_LENGTH: "long"},
            "Infinite": {Concept.GAME_LENGTH: math.inf},
            "NaN": {Concept.BALANCE: math.nan},
        }
        for name, values in cases.items():
            with self.subTest(name):
                with self.assertRaises(InvalidConceptValueError):
                    ConceptVector(values)
        with self.subTest("Unknown id"):
            with self.assertRaises(UnknownConceptError):
                ConceptVector({9999: 1})

    def test_random_ids(self):
        rng = random.Random(0)
        for concept_id in rng.sample(range(0, 300), 100):
            with self.subTest(concept_id=concept_id):
                if is_known(concept_id):
                    self.assertEqual(ConceptVector({concept_id: 0}).to_dict(), {concept_id: 0})
                else:
                    with self.assertRaises(UnknownConceptError):
                        ConceptVector({concept_id: 0})

    def test_restrict_and_items(self):
        vector = ConceptVector({Concept.ADD_MOVE: 1, Concept.GAME_LENGTH: 9.0, Concept.ADD_FREQUENCY: 1.0})
        compiled = vector.restrict(ConceptComputation.COMPILATION)
        self.assertEqual(compiled.to_dict(), {int(Concept.ADD_MOVE): 1})
        played = vector.restrict(ConceptComputation.PLAYOUT)
        self.assertEqual(set(played), {int(Concept.GAME_LENGTH), int(Concept.ADD_FREQUENCY)})
        names = [definition.name for definition, _ in vector.items()]
        self.assertEqual(names, ["Add Move", "Game Length", "Add Move Frequency"])

    def test_merge(self):
        compilation = ConceptVector({Concept.ADD_MOVE: 1, Concept.TWO_PLAYER: 1})
        playout = ConceptVector({Concept.ADD_FREQUENCY: 0.5}, provenance={"trials": 10})
        merged = merge(compilation, playout)
        self.assertEqual(len(merged), 3)
        self.assertEqual(merged.provenance, {"trials": 10})
        self.assertEqual(merged.restrict(ConceptComputation.COMPILATION).to_dict(), compilation.to_dict())
        with self.assertRaises(OverlappingDomainsError):
            merge(compilation, ConceptVector({Concept.ADD_MOVE: 1}))


class TestChecks(unittest.TestCase):
    def test_board_size(self):
        self.assertEqual(check_board_size("side", 3), 3)
        self.assertEqual(check_board_size("side", 3.0), 3)
        for bad in (0, -1, 2.5, True, "3", None):
            with self.subTest(value=bad):
                with self.assertRaises(InvalidSizeError):
                    check_board_size("side", bad)

    def test_playout_config(self):
        policies = ("UniformRandom", "FirstLegal")
        check_playout_config(10, None, policies, "FirstLegal")
        for trials, move_cap, policy, seed in [
            (0, None, "FirstLegal", 0),
            (10, 0, "FirstLegal", 0),
            (10, None, "Greedy", 0),
            (10, None, "FirstLegal", -1),
            (True, None, "FirstLegal", 0),
        ]:
            with self.subTest(trials=trials, move_cap=move_cap, policy=policy, seed=seed):
                with self.assertRaises(LudeconError):
                    check_playout_config(trials, move_cap, policies, policy, seed)

    def test_distance_config(self):
        check_distance_config(0.5, [ConceptCategory.RULES])
        with self.assertRaises(LudeconError):
            check_distance_config(1.5, [ConceptCategory.RULES])
        with self.assertRaises(LudeconError):
            check_distance_config(0.5, [])

    def test_known_games(self):
        check_known_games(["Hex"], ["Hex", "Havannah"])
        with self.assertRaises(UnknownGameError) as cm:
            check_known_games(["Hex", "Nope", "Gone"], ["Hex", "Havannah"])
        self.assertEqual(cm.exception.game_ids, ("Nope", "Gone"))
        self.assertIn("Known games: Havannah, Hex", str(cm.exception))

    def test_likes(self):
        check_likes(["Hex"])
        with self.assertRaises(EmptyLikesError):
            check_likes([])


if __name__ == "__main__":
    unittest.main()
