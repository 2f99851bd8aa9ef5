"""
Seeded playouts and the playout concepts computed from them.

Licensed under the Apache License, Version 2.0
"""
from .seeding import THREADS_ENV, trial_seed, trial_seeds, worker_count
from .trial import FIRST_LEGAL, POLICIES, UNIFORM_RANDOM, MoveRecord, PlayoutConfig, Trial, run_trial
from .analyzer import PlayoutResult, analyze, playout_concepts, run_playouts, run_trials, summarize

__all__ = [
    "THREADS_ENV",
    "trial_seed",
    "trial_seeds",
    "worker_count",
    "FIRST_LEGAL",
    "POLICIES",
    "UNIFORM_RANDOM",
    "MoveRecord",
    "PlayoutConfig",
    "Trial",
    "run_trial",
    "PlayoutResult",
    "analyze",
    "playout_concepts",
    "run_playouts",
    "run_trials",
    "summarize",
]
