"""
Structured warnings for ludecon.

Uses Python's standard warnings module to alert users about conditions that
do not stop a computation but change what its result means:
- Constructors outside the scanner's vocabulary
- Descriptions that could only be scanned, not played
- Trials stopped by the move cap
- Corpus files skipped because they failed to parse

All warnings can be controlled via Python's warnings filter
(warnings.filterwarnings).
"""

import warnings
from typing import Sequence


class LudeconWarning(UserWarning):
    """Base class for ludecon warnings."""
    pass


class UnknownConstructorWarning(LudeconWarning):
    """Issued when a static scan meets constructors it has no trigger rule for."""
    pass


class ScanOnlyFallbackWarning(LudeconWarning):
    """Issued when a description cannot be compiled and only its compilation concepts are reported."""
    pass


class TruncatedTrialWarning(LudeconWarning):
    """Issued when some playouts were stopped by the move cap before reaching a terminal state."""
    pass


class CorpusFileSkippedWarning(LudeconWarning):
    """Issued when a corpus file fails to parse and is left out of the corpus."""
    pass


def warn_unknown_constructors(
    game: str,
    constructors: Sequence[str],
    stacklevel: int = 3,
) -> None:
    """
    Issue warning for constructors the scanner does not know.

    Args:
        game: game name.
        constructors: unknown head symbols.
        stacklevel: stacklevel for warnings.warn (caller's caller = 3)
    """
    if constructors:
        msg = (
            f"Game {game!r} uses {len(constructors)} constructor(s) without concept triggers: "
            f"{', '.join(constructors)}. Concepts depending on them are not detected."
        )
        warnings.warn(msg, UnknownConstructorWarning, stacklevel=stacklevel)


def warn_scan_only(
    game: str,
    reason: str,
    stacklevel: int = 3,
) -> None:
    """
    Issue warning when playouts are skipped because the game cannot be compiled.

    Args:
        game: game name.
        reason: the compile error message.
        stacklevel: stacklevel for warnings.warn
    """
    msg = (
        f"Game {game!r} is scan-only, playout concepts are not computed. {reason}"
    )
    warnings.warn(msg, ScanOnlyFallbackWarning, stacklevel=stacklevel)


def warn_truncated_trials(
    game: str,
    n_truncated: int,
    n_trials: int,
    move_cap: int,
    stacklevel: int = 3,
) -> None:
    """
    Issue warning for trials stopped by the move cap.

    Args:
        game: game name.
        n_truncated: number of truncated trials.
        n_trials: number of trials run.
        move_cap: the cap in moves.
        stacklevel: stacklevel for warnings.warn
    """
    if n_truncated > 0:
        pct = 100 * n_truncated / n_trials if n_trials > 0 else 0
        msg = (
            f"{n_truncated} of {n_trials} playouts of {game!r} ({pct:.1f}%) reached the cap of "
            f"{move_cap} moves without ending. They count in the Timeouts concept and in no end frequency."
        )
        warnings.warn(msg, TruncatedTrialWarning, stacklevel=stacklevel)


def warn_corpus_file_skipped(
    path: str,
    reason: str,
    stacklevel: int = 3,
) -> None:
    """
    Issue warning for a corpus file left out.

    Args:
        path: the file.
        reason: the parse error message.
        stacklevel: stacklevel for warnings.warn
    """
    msg = f"Skipping corpus file {path}: {reason}"
    warnings.warn(msg, CorpusFileSkippedWarning, stacklevel=stacklevel)
