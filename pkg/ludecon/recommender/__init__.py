"""
Corpus of concept vectors, game distances and recommendations.

Licensed under the Apache License, Version 2.0
"""
from .distance import (
    DISTANCE_VERSION,
    DistanceConfig,
    binary_distance,
    distance_matrix,
    game_distance,
    numeric_distance,
    numeric_ranges,
)
from .corpus import Corpus, CorpusEntry, build_corpus, corpus_files, load_corpus, save_corpus, sidecar_path
from .recommend import coverage_subset, nearest, recommend, search

__all__ = [
    "DISTANCE_VERSION",
    "DistanceConfig",
    "binary_distance",
    "distance_matrix",
    "game_distance",
    "numeric_distance",
    "numeric_ranges",
    "Corpus",
    "CorpusEntry",
    "build_corpus",
    "corpus_files",
    "load_corpus",
    "save_corpus",
    "sidecar_path",
    "coverage_subset",
    "nearest",
    "recommend",
    "search",
]
