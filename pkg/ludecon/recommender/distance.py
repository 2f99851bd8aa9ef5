"""
Distance between two games' concept vectors.

    d(a, b) = w * jaccard(binary concepts) + (1 - w) * mean |normalized numeric difference|

The binary part is the Jaccard distance between the sets of binary concepts
each game has, restricted to the selected categories. The numeric part
averages, over the numeric concepts both games have values for, the absolute
difference after min-max normalization over the corpus. Numeric concepts only
one of the games has are skipped, so scan-only games are compared on their
compilation concepts. When one of the two parts has nothing to compare, the
other part is the whole distance.

Licensed under the Apache License, Version 2.0
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

import numpy as np
import pandas as pd
from scipy.spatial.distance import jaccard

from ..concepts import DEFAULT_DISTANCE_CATEGORIES, ConceptCategory, registry
from ..validation.checks import check_distance_config
from ..validation.exceptions import EmptyIntersectionError

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

# Written to corpus sidecars; bump when the formula changes.
DISTANCE_VERSION = 1


@dataclass(frozen=True)
class DistanceConfig:
    """
    Attributes:
        categories: concept categories compared (default: all but Visual and Implementation).
        binary_weight: weight of the binary part, in [0, 1]; the numeric part gets the rest.
    """

    categories: FrozenSet[ConceptCategory] = field(default=DEFAULT_DISTANCE_CATEGORIES)
    binary_weight: float = 0.5

    def __post_init__(self):
        check_distance_config(self.binary_weight, self.categories)
        object.__setattr__(self, "categories", frozenset(self.categories))
        object.__setattr__(self, "binary_weight", float(self.binary_weight))

    @property
    def numeric_weight(self) -> float:
        return 1.0 - self.binary_weight

    def binary_ids(self) -> Tuple[int, ...]:
        return tuple(d.id for d in registry() if d.is_binary and d.category in self.categories)

    def numeric_ids(self) -> Tuple[int, ...]:
        return tuple(d.id for d in registry() if not d.is_binary and d.category in self.categories)

    def to_dict(self) -> dict:
        return {
            "categories": sorted(c.value for c in self.categories),
            "binaryWeight": self.binary_weight,
            "version": DISTANCE_VERSION,
        }


def numeric_ranges(entries: Iterable) -> Dict[int, Tuple[float, float]]:
    """(min, max) of every numeric concept over the entries that have it."""
    values: Dict[int, list] = {}
    for entry in entries:
        for definition, value in entry.vector.items():
            if not definition.is_binary:
                values.setdefault(definition.id, []).append(float(value))
    return {cid: (min(found), max(found)) for cid, found in values.items()}


def binary_distance(a, b, config: DistanceConfig) -> Optional[float]:
    """Jaccard distance of the binary supports, None when neither game has any selected binary concept."""
    ids = config.binary_ids()
    u = np.array([a.vector.get(cid, 0) == 1 for cid in ids], dtype=bool)
    v = np.array([b.vector.get(cid, 0) == 1 for cid in ids], dtype=bool)
    if not (u.any() or v.any()):
        return None
    return float(jaccard(u, v))


def numeric_distance(a, b, config: DistanceConfig, ranges: Mapping[int, Tuple[float, float]]) -> Optional[float]:
    """Mean normalized difference of the shared numeric concepts, None when they share none."""
    differences = []
    for cid in config.numeric_ids():
        if cid not in a.vector or cid not in b.vector:
            continue
        x, y = float(a.vector[cid]), float(b.vector[cid])
        low, high = ranges.get(cid, (min(x, y), max(x, y)))
        low, high = min(low, x, y), max(high, x, y)
        span = high - low
        differences.append(abs(x - y) / span if span > 0 else 0.0)
    if not differences:
        return None
    return float(np.mean(differences))


def game_distance(
    a,
    b,
    config: Optional[DistanceConfig] = None,
    ranges: Optional[Mapping[int, Tuple[float, float]]] = None,
) -> float:
    """
    Distance between two corpus entries, in [0, 1].

    Args:
        a, b: CorpusEntry
        config: categories and weights (default: DistanceConfig()).
        ranges: per-concept (min, max) used to normalize numeric concepts;
            defaults to the range spanned by the two entries.

    Returns:
        float: 0 for identical vectors on the selected categories.

    Raises:
        EmptyIntersectionError: no binary concept and no shared numeric concept
            in the selected categories.
    """
    config = config or DistanceConfig()
    ranges = ranges if ranges is not None else numeric_ranges((a, b))
    binary = binary_distance(a, b, config)
    numeric = numeric_distance(a, b, config, ranges)
    if binary is None and numeric is None:
        raise EmptyIntersectionError(
            f"Games {a.game_id!r} and {b.game_id!r} have no comparable concept in categories "
            f"{sorted(c.value for c in config.categories)}"
        )
    if numeric is None:
        d = binary
    elif binary is None:
        d = numeric
    else:
        d = config.binary_weight * binary + config.numeric_weight * numeric
    return float(min(1.0, max(0.0, d)))


def distance_matrix(corpus, config: Optional[DistanceConfig] = None) -> pd.DataFrame:
    """
    Pairwise distances of a corpus, rows and columns ordered by game id.

    Pairs without comparable concepts get NaN.
    """
    config = config or DistanceConfig()
    ranges = corpus.numeric_ranges()
    entries = list(corpus)
    ids = [entry.game_id for entry in entries]
    matrix = np.zeros((len(entries), len(entries)))
    for i, a in enumerate(entries):
        for j in range(i + 1, len(entries)):
            try:
                d = game_distance(a, entries[j], config, ranges)
            except EmptyIntersectionError:
                d = np.nan
            matrix[i, j] = matrix[j, i] = d
    logger.debug(f"Distance matrix of {len(ids)} games")
    return pd.DataFrame(matrix, index=ids, columns=ids)
