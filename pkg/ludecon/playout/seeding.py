"""
Per-trial seeds and worker counts.

Trial i always plays with the seed derived from (master seed, i), whatever
process runs it and in whatever order trials complete.

Licensed under the Apache License, Version 2.0
"""
import logging
import os
from typing import List, Optional

import numpy as np

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

THREADS_ENV = "LUDECON_THREADS"


def trial_seed(master_seed: int, index: int) -> int:
    """Seed of trial `index`: an independent child stream of the master seed."""
    sequence = np.random.SeedSequence(master_seed, spawn_key=(index,))
    return int(sequence.generate_state(1, dtype=np.uint32)[0])


def trial_seeds(master_seed: int, n_trials: int) -> List[int]:
    return [trial_seed(master_seed, i) for i in range(n_trials)]


def worker_count(requested: Optional[int] = None) -> int:
    """
    Number of playout worker processes.

    `requested` wins, then the LUDECON_THREADS environment variable, then the CPU count.
    Results never depend on it.
    """
    if requested is None:
        raw = os.environ.get(THREADS_ENV, "").strip()
        if raw:
            try:
                requested = int(raw)
            except ValueError:
                logger.debug(f"Ignoring {THREADS_ENV}={raw!r}: not an integer")
    if requested is None:
        requested = os.cpu_count() or 1
    return max(1, int(requested))
