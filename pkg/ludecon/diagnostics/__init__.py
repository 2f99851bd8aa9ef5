"""
Diagnostic utilities for ludecon.

Provides:
- reports: report dataclasses with canonical JSON serialization
- warnings: structured warnings for conditions that do not stop a computation
"""

from .reports import (
    BoardSummary,
    ConceptReport,
    PlayoutSummary,
    compute_board_summary,
    to_canonical_json,
)
from .warnings import (
    LudeconWarning,
    UnknownConstructorWarning,
    ScanOnlyFallbackWarning,
    TruncatedTrialWarning,
    CorpusFileSkippedWarning,
    warn_unknown_constructors,
    warn_scan_only,
    warn_truncated_trials,
    warn_corpus_file_skipped,
)

__all__ = [
    # Reports
    'BoardSummary',
    'ConceptReport',
    'PlayoutSummary',
    'compute_board_summary',
    'to_canonical_json',
    # Warnings
    'LudeconWarning',
    'UnknownConstructorWarning',
    'ScanOnlyFallbackWarning',
    'TruncatedTrialWarning',
    'CorpusFileSkippedWarning',
    'warn_unknown_constructors',
    'warn_scan_only',
    'warn_truncated_trials',
    'warn_corpus_file_skipped',
]
