"""
Game corpus: concept vectors of a library of descriptions.

A corpus is saved as a CSV matrix (one row per game, one column per registry
concept, a two-row header with concept ids and names, empty cells for absent
concepts) next to a JSON sidecar holding what the matrix cannot: display
names, the scan-only flag, playout settings and annotations.

Licensed under the Apache License, Version 2.0
"""
import glob
import json
import logging
import os
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..compiler import annotated_concepts
from ..concepts import ConceptVector, registry
from ..diagnostics.reports import to_canonical_json
from ..diagnostics.warnings import warn_corpus_file_skipped
from ..pipeline import GameAnalysis, analyze_file
from ..playout import PlayoutConfig
from ..validation.exceptions import LudeconError, LudemeSyntaxError, NotAGameError, UnknownGameError
from .distance import DISTANCE_VERSION, numeric_ranges

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

SIDECAR_SUFFIX = ".json"


@dataclass(frozen=True, eq=False)
class CorpusEntry:
    """
    One game of a corpus.

    Attributes:
        game_id: stable id, the description's file stem.
        display_name: the game's name.
        vector: compilation concepts, merged with playout concepts for playable games.
            Annotated numeric concepts hold their declared values.
        scan_only: the description could not be compiled.
        playout_config: settings of the playouts behind the playout concepts.
        annotations: declared values the scanner cannot compute.
    """

    game_id: str
    display_name: str
    vector: ConceptVector
    scan_only: bool = False
    playout_config: Optional[dict] = None
    annotations: Dict[str, object] = field(default_factory=dict)

    @classmethod
    def from_analysis(cls, analysis: GameAnalysis) -> "CorpusEntry":
        playout = analysis.playout
        vector = analysis.vector
        declared = annotated_concepts(analysis.scan.annotations)
        if declared:
            vector = ConceptVector({**vector.values, **declared}, vector.provenance)
        return cls(
            game_id=analysis.game_id,
            display_name=analysis.name,
            vector=vector,
            scan_only=analysis.scan_only,
            playout_config=playout.vector.provenance if playout is not None else None,
            annotations=dict(analysis.scan.annotations),
        )

    def has(self, concept_id) -> bool:
        """The concept is present with a nonzero value."""
        return bool(self.vector.get(concept_id, 0))

    def metadata(self) -> dict:
        return {
            "displayName": self.display_name,
            "scanOnly": self.scan_only,
            "playout": self.playout_config,
            "annotations": self.annotations,
        }

    def __repr__(self) -> str:
        return f"CorpusEntry({self.game_id!r}, scan_only={self.scan_only}, n_concepts={len(self.vector)})"


class Corpus:
    """
    Entries keyed and ordered by game id.

    Raises:
        LudeconError: two entries share a game id.
    """

    def __init__(self, entries: Iterable[CorpusEntry] = ()):
        self._entries: Dict[str, CorpusEntry] = {}
        for entry in sorted(entries, key=lambda e: e.game_id):
            if entry.game_id in self._entries:
                raise LudeconError(f"Game id {entry.game_id!r} appears twice in the corpus")
            self._entries[entry.game_id] = entry
        self._ranges = None

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[CorpusEntry]:
        return iter(self._entries.values())

    def __contains__(self, game_id) -> bool:
        return game_id in self._entries

    def __getitem__(self, game_id: str) -> CorpusEntry:
        try:
            return self._entries[game_id]
        except KeyError:
            raise UnknownGameError([game_id], self.ids) from None

    @property
    def playable(self) -> Tuple[str, ...]:
        return tuple(e.game_id for e in self if not e.scan_only)

    def numeric_ranges(self) -> Dict[int, Tuple[float, float]]:
        """Per-concept (min, max) over the corpus, for numeric normalization."""
        if self._ranges is None:
            self._ranges = numeric_ranges(self)
        return self._ranges

    def to_frame(self) -> pd.DataFrame:
        """Concept matrix: one row per game, one column per registry concept, NaN where absent."""
        definitions = registry()
        columns = pd.MultiIndex.from_tuples([(d.id, d.name) for d in definitions], names=["id", "name"])
        rows = [[entry.vector.get(d.id, np.nan) for d in definitions] for entry in self]
        return pd.DataFrame(rows, index=list(self.ids), columns=columns, dtype=float)

    def __repr__(self) -> str:
        return f"Corpus(n_games={len(self)}, playable={len(self.playable)})"


def build_corpus(
    files: Sequence[str],
    config: Optional[PlayoutConfig] = None,
    n_workers: Optional[int] = None,
) -> Corpus:
    """
    Scan every description and play every one that compiles.

    Args:
        files: description paths; game ids are their file stems.
        config: playout settings; None keeps compilation concepts only.
        n_workers: playout worker processes.

    Returns:
        Corpus

    Warns:
        CorpusFileSkippedWarning: a file does not parse; the build goes on without it.
        ScanOnlyFallbackWarning: a description does not compile.
    """
    entries = []
    for i, path in enumerate(files, start=1):
        logger.info(f"Corpus {i}/{len(files)}: {path}")
        try:
            analysis = analyze_file(path, config, compile=True, n_workers=n_workers)
        except (LudemeSyntaxError, NotAGameError) as error:
            warn_corpus_file_skipped(path, str(error))
            continue
        entries.append(CorpusEntry.from_analysis(analysis))
    corpus = Corpus(entries)
    logger.debug(f"Built {corpus!r}")
    return corpus


def corpus_files(directory: str) -> Tuple[str, ...]:
    """The `.lud` files of a directory, sorted."""
    return tuple(sorted(glob.glob(os.path.join(directory, "*.lud"))))


def sidecar_path(path: str) -> str:
    return os.path.splitext(path)[0] + SIDECAR_SUFFIX


def save_corpus(corpus: Corpus, path: str) -> str:
    """
    Write the concept matrix to `path` and the sidecar next to it.

    Returns:
        str: the sidecar path.
    """
    corpus.to_frame().to_csv(path)
    sidecar = sidecar_path(path)
    payload = {
        "distanceVersion": DISTANCE_VERSION,
        "registrySize": len(registry()),
        "games": {entry.game_id: entry.metadata() for entry in corpus},
    }
    with open(sidecar, "w", encoding="utf-8") as f:
        f.write(to_canonical_json(payload))
    logger.debug(f"Saved {corpus!r} to {path} and {sidecar}")
    return sidecar


def load_corpus(path: str) -> Corpus:
    """
    Read a corpus written by save_corpus().

    Raises:
        OSError: the matrix or its sidecar cannot be read.
        LudeconError: the sidecar was written with another distance version.
        UnknownConceptError: the matrix has a concept id missing from the registry.
    """
    frame = pd.read_csv(path, header=[0, 1], index_col=0)
    with open(sidecar_path(path), encoding="utf-8") as f:
        sidecar = json.load(f)
    if sidecar.get("distanceVersion") != DISTANCE_VERSION:
        raise LudeconError(
            f"{path} was written with distance version {sidecar.get('distanceVersion')}, "
            f"this version reads {DISTANCE_VERSION}"
        )
    if sidecar.get("registrySize") != len(registry()):
        logger.debug(f"{path} was written against a registry of {sidecar.get('registrySize')} concepts")
    concept_ids = [int(cid) for cid, _ in frame.columns]
    games = sidecar.get("games", {})
    entries = []
    for game_id, row in zip(frame.index, frame.to_numpy(dtype=float)):
        game_id = str(game_id)
        values = {cid: value for cid, value in zip(concept_ids, row) if not np.isnan(value)}
        metadata = games.get(game_id, {})
        entries.append(
            CorpusEntry(
                game_id=game_id,
                display_name=metadata.get("displayName", game_id),
                vector=ConceptVector(values, provenance=metadata.get("playout")),
                scan_only=bool(metadata.get("scanOnly", False)),
                playout_config=metadata.get("playout"),
                annotations=dict(metadata.get("annotations") or {}),
            )
        )
    corpus = Corpus(entries)
    logger.debug(f"Loaded {corpus!r} from {path}")
    return corpus
