"""
Centralized input validation for ludecon.

Validate early and explicitly: bad board sizes, concept values, playout and
distance configurations and game ids are rejected where they enter the
library, with messages that say what was expected.

Licensed under the Apache License, Version 2.0
"""

import logging
import math
from typing import Iterable, Mapping, Sequence

from .exceptions import (
    EmptyLikesError,
    InvalidConceptValueError,
    InvalidSizeError,
    LudeconError,
    UnknownConceptError,
    UnknownGameError,
)

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


def check_board_size(name: str, value, minimum: int = 1) -> int:
    """
    Validate a board dimension.

    Args:
        name: dimension name used in the message ("side", "rows"...).
        value: the dimension.
        minimum: smallest accepted value.

    Returns:
        int: the dimension.

    Raises:
        InvalidSizeError: value is not an integer or is below minimum.
    """
    if isinstance(value, bool) or not isinstance(value, int):
        if isinstance(value, float) and value.is_integer():
            value = int(value)
        else:
            raise InvalidSizeError(f"Board {name} must be an integer, got {value!r}")
    if value < minimum:
        raise InvalidSizeError(f"Board {name} must be at least {minimum}, got {value}")
    return value


def check_concept_values(values: Mapping) -> dict:
    """
    Validate a concept id -> value map against the registry.

    Checks:
    - every key is a registered concept id
    - every value is a finite number
    - binary concepts hold 0 or 1
    - frequency concepts hold values in [0, 1]

    Returns:
        dict: a copy with int keys and int (integer concepts and binary) or float values.

    Raises:
        UnknownConceptError: a key is not registered.
        InvalidConceptValueError: a value violates its concept's data type.
    """
    from ..concepts.catalog import FREQUENCY_PAIRS, lookup
    from ..concepts.taxonomy import ConceptDataType

    frequencies = set(int(f) for f in FREQUENCY_PAIRS.values())
    checked = {}
    for key, value in values.items():
        try:
            concept_id = int(key)
        except (TypeError, ValueError):
            raise UnknownConceptError(f"Concept ids are integers, got {key!r}")
        definition = lookup(concept_id)
        if isinstance(value, bool):
            value = int(value)
        try:
            number = float(value)
        except (TypeError, ValueError):
            raise InvalidConceptValueError(f"Concept {definition.name!r} needs a number, got {value!r}")
        if not math.isfinite(number):
            raise InvalidConceptValueError(f"Concept {definition.name!r} has a non-finite value {value!r}")
        if definition.data_type is ConceptDataType.BINARY:
            if number not in (0.0, 1.0):
                raise InvalidConceptValueError(f"Binary concept {definition.name!r} must be 0 or 1, got {value!r}")
            checked[concept_id] = int(number)
        elif definition.data_type is ConceptDataType.INT:
            if not number.is_integer():
                raise InvalidConceptValueError(f"Integer concept {definition.name!r} got {value!r}")
            checked[concept_id] = int(number)
        else:
            if concept_id in frequencies and not 0.0 <= number <= 1.0:
                raise InvalidConceptValueError(
                    f"Frequency concept {definition.name!r} must lie in [0, 1], got {value!r}"
                )
            checked[concept_id] = number
    return checked


def check_playout_config(trials, move_cap, policy_names: Sequence[str], policy, master_seed=0) -> None:
    """
    Validate playout settings.

    Raises:
        LudeconError: trials below 1, move cap below 1, a negative seed, or an unknown policy.
    """
    if isinstance(master_seed, bool) or not isinstance(master_seed, int) or master_seed < 0:
        raise LudeconError(f"Seed must be a non-negative integer, got {master_seed!r}")
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise LudeconError(f"Number of trials must be a positive integer, got {trials!r}")
    if move_cap is not None and (isinstance(move_cap, bool) or not isinstance(move_cap, int) or move_cap < 1):
        raise LudeconError(f"Move cap must be a positive integer or None, got {move_cap!r}")
    if policy not in policy_names:
        raise LudeconError(f"Unknown playout policy {policy!r}. Choose one of: {', '.join(policy_names)}")
    logger.debug(f"Playout config valid: trials={trials}, move_cap={move_cap}, policy={policy}")


def check_distance_config(binary_weight, categories: Iterable) -> None:
    """
    Validate a distance configuration.

    Raises:
        LudeconError: binary weight outside [0, 1] or no category selected.
    """
    try:
        weight = float(binary_weight)
    except (TypeError, ValueError):
        raise LudeconError(f"Binary weight must be a number, got {binary_weight!r}")
    if not 0.0 <= weight <= 1.0:
        raise LudeconError(f"Binary weight must lie in [0, 1], got {binary_weight!r}")
    if not list(categories):
        raise LudeconError("Distance needs at least one concept category")


def check_known_games(game_ids: Iterable[str], known: Iterable[str]) -> None:
    """
    Raises:
        UnknownGameError: listing every id missing from the corpus.
    """
    known = list(known)
    known_set = set(known)
    missing = [game_id for game_id in game_ids if game_id not in known_set]
    if missing:
        raise UnknownGameError(missing, known)


def check_likes(likes: Sequence[str]) -> None:
    if not likes:
        raise EmptyLikesError("At least one liked game is needed to recommend games")
