"""
Single playouts.

Licensed under the Apache License, Version 2.0
"""
import logging
from dataclasses import dataclass
from typing import Callable, FrozenSet, NamedTuple, Optional, Tuple

import numpy as np

from ..compiler import GameSpec
from ..engine import GameState, Move, Outcome, apply, initial_state, legal_moves, outcome
from ..validation.checks import check_playout_config

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

UNIFORM_RANDOM = "UniformRandom"
FIRST_LEGAL = "FirstLegal"
POLICIES = (UNIFORM_RANDOM, FIRST_LEGAL)


@dataclass(frozen=True)
class PlayoutConfig:
    """
    Settings of a batch of playouts.

    Attributes:
        trials: number of trials, at least 1.
        master_seed: seed all trial seeds derive from.
        policy: UniformRandom or FirstLegal.
        move_cap: maximum moves per trial; None for 2 x sites x players.
    """

    trials: int = 10000
    master_seed: int = 0
    policy: str = UNIFORM_RANDOM
    move_cap: Optional[int] = None

    def __post_init__(self):
        check_playout_config(self.trials, self.move_cap, POLICIES, self.policy, self.master_seed)

    def cap_for(self, spec: GameSpec) -> int:
        return self.move_cap if self.move_cap is not None else spec.default_move_cap

    def to_dict(self) -> dict:
        return {"trials": self.trials, "seed": self.master_seed, "policy": self.policy, "moveCap": self.move_cap}

    @classmethod
    def from_dict(cls, payload: dict) -> "PlayoutConfig":
        return cls(
            trials=int(payload["trials"]),
            master_seed=int(payload["seed"]),
            policy=payload["policy"],
            move_cap=payload.get("moveCap"),
        )


class MoveRecord(NamedTuple):
    """Concept tags of a played move, the branching count k of its state and the player who chose it."""

    tags: FrozenSet[int]
    k: int
    mover: int


@dataclass(frozen=True)
class Trial:
    """
    One playout.

    Attributes:
        seed: the trial's seed.
        records: one MoveRecord per move played.
        outcome: how the game ended, None when truncated by the move cap.
        truncated: the move cap stopped the trial.
    """

    seed: int
    records: Tuple[MoveRecord, ...]
    outcome: Optional[Outcome]
    truncated: bool = False

    @property
    def length(self) -> int:
        return len(self.records)

    def count(self, concept) -> int:
        """Number of moves tagged with a concept."""
        concept = int(concept)
        return sum(1 for record in self.records if concept in record.tags)

    def frequency(self, concept) -> float:
        return self.count(concept) / self.length if self.length else 0.0

    def __repr__(self) -> str:
        result = "truncated" if self.truncated else self.outcome.describe()
        return f"Trial(seed={self.seed}, length={self.length}, {result})"


def choose(policy: str, moves, rng: np.random.Generator) -> Move:
    if policy == FIRST_LEGAL:
        return moves[0]
    return moves[int(rng.integers(len(moves)))]


def run_trial(
    spec: GameSpec,
    policy: str = UNIFORM_RANDOM,
    seed: int = 0,
    move_cap: Optional[int] = None,
    on_move: Optional[Callable[[GameState, Move], None]] = None,
) -> Trial:
    """
    Play one game from the initial state until an end rule fires or the move cap is reached.

    Args:
        spec: compiled game.
        policy: UniformRandom (uniform choice from the trial's stream) or FirstLegal.
        seed: trial seed; seeds both the policy stream and the state's dice stream.
        move_cap: maximum number of moves, defaults to spec.default_move_cap.
        on_move: called with (state, move) before each move is applied.

    Returns:
        Trial
    """
    cap = spec.default_move_cap if move_cap is None else move_cap
    rng = np.random.default_rng(seed)
    state = initial_state(spec, seed)
    records = []
    truncated = False
    while outcome(spec, state) is None:
        if len(records) >= cap:
            truncated = True
            break
        moves = legal_moves(spec, state)
        move = choose(policy, moves, rng)
        if on_move is not None:
            on_move(state, move)
        records.append(MoveRecord(move.tags, len(moves), state.mover))
        state = apply(spec, state, move)
    result = None if truncated else outcome(spec, state)
    return Trial(seed=seed, records=tuple(records), outcome=result, truncated=truncated)
