"""
Playout concepts: move-type and end-type frequencies and game metrics.

Move frequencies are averaged per trial, then over trials. End frequencies
are the fraction of trials ending with each end concept. Branching factor
pools every decision point of every trial. Truncated trials count in every
denominator but in no end frequency; they make up the Timeouts concept.

Licensed under the Apache License, Version 2.0
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..compiler import GameSpec
from ..concepts import END_CONCEPTS, FREQUENCY_PAIRS, MOVE_TAG_CONCEPTS, Concept, ConceptVector
from ..diagnostics.reports import PlayoutSummary
from ..diagnostics.warnings import warn_truncated_trials
from .seeding import trial_seed, worker_count
from .trial import PlayoutConfig, Trial, run_trial

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

# trials per worker task, at most
_CHUNK = 256


@dataclass
class PlayoutResult:
    """Trials of a batch with the concepts and the summary computed from them."""

    vector: ConceptVector
    summary: PlayoutSummary
    trials: Tuple[Trial, ...]

    def __repr__(self) -> str:
        return f"PlayoutResult({self.summary!r}, n_concepts={len(self.vector)})"


def _run_chunk(spec: GameSpec, policy: str, master_seed: int, move_cap: int, indices: Sequence[int]) -> List[Trial]:
    return [run_trial(spec, policy, trial_seed(master_seed, i), move_cap) for i in indices]


def run_trials(spec: GameSpec, config: PlayoutConfig, n_workers: Optional[int] = None) -> Tuple[Trial, ...]:
    """
    Play config.trials trials, ordered by trial index.

    Args:
        spec: compiled game.
        config: playout settings.
        n_workers: worker processes (default: LUDECON_THREADS, else the CPU count).
            The trials are the same for every worker count.

    Returns:
        tuple of Trial
    """
    cap = config.cap_for(spec)
    indices = list(range(config.trials))
    workers = min(worker_count(n_workers), config.trials)
    if workers <= 1:
        trials = _run_chunk(spec, config.policy, config.master_seed, cap, indices)
    else:
        size = max(1, min(_CHUNK, -(-config.trials // (workers * 4))))
        chunks = [indices[i:i + size] for i in range(0, len(indices), size)]
        logger.debug(f"Running {config.trials} trials of {spec.name!r} on {workers} workers, {len(chunks)} chunks")
        with ProcessPoolExecutor(max_workers=workers) as executor:
            # map() yields in submission order, so trials stay ordered by index
            parts = executor.map(
                _run_chunk,
                [spec] * len(chunks),
                [config.policy] * len(chunks),
                [config.master_seed] * len(chunks),
                [cap] * len(chunks),
                chunks,
            )
            trials = [trial for part in parts for trial in part]
    logger.debug(f"Finished {len(trials)} trials of {spec.name!r}")
    return tuple(trials)


def _unit(value: float) -> float:
    return float(min(1.0, max(0.0, value)))


def playout_concepts(spec: GameSpec, trials: Sequence[Trial]) -> Dict[int, float]:
    """
    Concept values of a batch of trials (concept id -> value).

    Raises:
        ValueError: no trials.
    """
    n = len(trials)
    if n == 0:
        raise ValueError("Playout concepts need at least one trial")
    values = {}
    lengths = np.array([t.length for t in trials], dtype=float)
    for base in MOVE_TAG_CONCEPTS:
        if int(base) not in FREQUENCY_PAIRS:
            continue
        per_trial = np.array([t.frequency(base) for t in trials], dtype=float)
        values[FREQUENCY_PAIRS[int(base)]] = _unit(per_trial.mean())
    finished = [t for t in trials if not t.truncated]
    for base in END_CONCEPTS:
        if int(base) not in FREQUENCY_PAIRS:
            continue
        hits = sum(1 for t in finished if int(base) in t.outcome.tags and not t.outcome.is_draw)
        values[FREQUENCY_PAIRS[int(base)]] = _unit(hits / n)

    decisions = np.array([r.k for t in trials for r in t.records], dtype=float)
    wins = np.zeros(spec.num_players + 1, dtype=float)
    draws = 0
    for t in finished:
        if t.outcome.is_draw:
            draws += 1
        else:
            wins[t.outcome.winner] += 1
    win_fractions = wins[1:] / n
    values[int(Concept.GAME_LENGTH)] = float(lengths.mean())
    values[int(Concept.BRANCHING_FACTOR)] = float(decisions.mean()) if len(decisions) else 0.0
    values[int(Concept.BALANCE)] = float(win_fractions[0] - win_fractions.mean())
    values[int(Concept.DRAWISHNESS)] = _unit(draws / n)
    values[int(Concept.TIMEOUTS)] = _unit((n - len(finished)) / n)
    return values


def summarize(spec: GameSpec, config: PlayoutConfig, trials: Sequence[Trial]) -> PlayoutSummary:
    wins = {}
    draws = 0
    for t in trials:
        if t.truncated:
            continue
        if t.outcome.is_draw:
            draws += 1
        else:
            wins[t.outcome.winner] = wins.get(t.outcome.winner, 0) + 1
    return PlayoutSummary(
        trials=len(trials),
        master_seed=config.master_seed,
        policy=config.policy,
        move_cap=config.cap_for(spec),
        n_truncated=sum(1 for t in trials if t.truncated),
        n_draws=draws,
        wins=wins,
        mean_length=float(np.mean([t.length for t in trials])) if trials else 0.0,
    )


def run_playouts(spec: GameSpec, config: PlayoutConfig, n_workers: Optional[int] = None) -> PlayoutResult:
    """
    Play a batch of trials and compute the playout concepts.

    Warns:
        TruncatedTrialWarning: some trials reached the move cap.
    """
    trials = run_trials(spec, config, n_workers)
    summary = summarize(spec, config, trials)
    warn_truncated_trials(spec.name, summary.n_truncated, summary.trials, summary.move_cap)
    provenance = config.to_dict()
    provenance["moveCap"] = summary.move_cap
    vector = ConceptVector(playout_concepts(spec, trials), provenance=provenance)
    return PlayoutResult(vector=vector, summary=summary, trials=trials)


def analyze(spec: GameSpec, config: PlayoutConfig, n_workers: Optional[int] = None) -> ConceptVector:
    """
    Playout concepts of a game.

    Args:
        spec: compiled game.
        config: playout settings.
        n_workers: worker processes; results do not depend on it.

    Returns:
        ConceptVector of Playout concepts, with the playout settings as provenance.
    """
    return run_playouts(spec, config, n_workers).vector
