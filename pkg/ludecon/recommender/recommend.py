"""
Queries over a corpus: nearest games, like/dislike recommendations,
concept search and benchmark coverage.

Rankings break ties by game id, so every query is deterministic.

Licensed under the Apache License, Version 2.0
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..concepts import lookup
from ..validation.checks import check_known_games, check_likes
from ..validation.exceptions import EmptyIntersectionError, LudeconError
from .corpus import Corpus, CorpusEntry
from .distance import DistanceConfig, game_distance

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


def _check_k(k) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise LudeconError(f"k must be a positive integer, got {k!r}")
    return k


def _distance(corpus: Corpus, a: CorpusEntry, b: CorpusEntry, config: DistanceConfig) -> float:
    # incomparable games rank as far apart as possible
    try:
        return game_distance(a, b, config, corpus.numeric_ranges())
    except EmptyIntersectionError:
        return 1.0


def nearest(
    corpus: Corpus,
    target: str,
    k: int = 5,
    config: Optional[DistanceConfig] = None,
) -> List[Tuple[str, float]]:
    """
    The k games closest to `target`, excluding itself.

    Returns:
        list of (game id, distance), closest first.

    Raises:
        UnknownGameError: target is not in the corpus.
    """
    _check_k(k)
    config = config or DistanceConfig()
    entry = corpus[target]
    scored = sorted(
        (_distance(corpus, entry, other, config), other.game_id) for other in corpus if other.game_id != target
    )
    return [(game_id, d) for d, game_id in scored[:k]]


def recommend(
    corpus: Corpus,
    likes: Sequence[str],
    dislikes: Sequence[str] = (),
    k: int = 5,
    config: Optional[DistanceConfig] = None,
) -> List[Tuple[str, float]]:
    """
    Games to suggest to a player who likes some games and dislikes others.

    Each candidate scores its mean similarity (1 - distance) to the liked games
    minus its mean similarity to the disliked ones. Liked and disliked games are
    never suggested. A game both liked and disliked counts as liked only.

    Returns:
        list of (game id, score), best first.

    Raises:
        EmptyLikesError: no liked game.
        UnknownGameError: listing every unknown id.
    """
    check_likes(likes)
    _check_k(k)
    check_known_games(list(likes) + list(dislikes), corpus.ids)
    config = config or DistanceConfig()
    liked = list(dict.fromkeys(likes))
    disliked = [g for g in dict.fromkeys(dislikes) if g not in liked]
    excluded = set(liked) | set(disliked)
    scored = []
    for candidate in corpus:
        if candidate.game_id in excluded:
            continue
        score = np.mean([1.0 - _distance(corpus, candidate, corpus[g], config) for g in liked])
        if disliked:
            score -= np.mean([1.0 - _distance(corpus, candidate, corpus[g], config) for g in disliked])
        scored.append((-float(score), candidate.game_id))
    scored.sort()
    logger.debug(f"Scored {len(scored)} candidates for likes={liked}, dislikes={disliked}")
    return [(game_id, -negative) for negative, game_id in scored[:k]]


def _concept_ids(keys: Iterable) -> List[int]:
    """Concept ids from ids or names (raises UnknownConceptError)."""
    return [lookup(key).id for key in keys]


def search(corpus: Corpus, require: Iterable = (), exclude: Iterable = ()) -> List[str]:
    """
    Ids of the games having every required concept and none of the excluded ones.

    Concepts are given by id or name; a game has a concept when its value is
    present and nonzero.
    """
    required, excluded = _concept_ids(require), _concept_ids(exclude)
    return [
        entry.game_id
        for entry in corpus
        if all(entry.has(cid) for cid in required) and not any(entry.has(cid) for cid in excluded)
    ]


def coverage_subset(corpus: Corpus, size: int, config: Optional[DistanceConfig] = None) -> List[str]:
    """
    Greedy benchmark subset covering as many distinct binary concepts as possible.

    Each step adds the game bringing the most concepts not covered yet, ties
    going to the smallest id. Stops early once no game adds anything.

    Returns:
        list of game ids, in pick order.
    """
    _check_k(size)
    config = config or DistanceConfig()
    ids = config.binary_ids()
    supports = {entry.game_id: {cid for cid in ids if entry.vector.get(cid, 0) == 1} for entry in corpus}
    covered = set()
    picked: List[str] = []
    while len(picked) < size:
        best, gain = None, 0
        for game_id, support in supports.items():
            if game_id in picked:
                continue
            new = len(support - covered)
            if new > gain:
                best, gain = game_id, new
        if best is None:
            break
        picked.append(best)
        covered |= supports[best]
    logger.debug(f"Coverage subset {picked} covers {len(covered)} binary concepts")
    return picked
