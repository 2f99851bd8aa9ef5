"""
Analysis of one description file: parse, scan, compile and play.

Shared by the command line and the corpus builder.

Licensed under the Apache License, Version 2.0
"""
import logging
import os
from dataclasses import dataclass
from typing import List, Optional

from .compiler import GameSpec, ScanReport, compile_game, static_scan
from .concepts import ConceptVector, merge
from .diagnostics.reports import ConceptReport
from .diagnostics.warnings import warn_scan_only, warn_unknown_constructors
from .language import LudemeNode, parse_source
from .playout import PlayoutConfig, PlayoutResult, run_playouts
from .validation.exceptions import LudeconError, UnsupportedLudemeError

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


def game_id_of(path: str) -> str:
    """Stable id of a description: its file stem."""
    return os.path.splitext(os.path.basename(path))[0]


def read_description(path: str) -> str:
    with open(path, encoding="utf-8") as f:
        return f.read()


@dataclass
class GameAnalysis:
    """
    Everything computed for one description.

    Attributes:
        game_id: file stem.
        path: description file.
        tree: parsed description.
        scan: static scan of the tree.
        spec: compiled game, None when the description is scan-only (or was not compiled).
        compile_error: why compilation failed, if it did.
        playout: playout batch, if one was run.
    """

    game_id: str
    path: str
    tree: LudemeNode
    scan: ScanReport
    spec: Optional[GameSpec] = None
    compile_error: Optional[LudeconError] = None
    playout: Optional[PlayoutResult] = None

    @property
    def name(self) -> str:
        return self.scan.game

    @property
    def scan_only(self) -> bool:
        return self.compile_error is not None

    @property
    def vector(self) -> ConceptVector:
        """Compilation concepts, merged with the playout concepts when playouts ran."""
        if self.playout is None:
            return self.scan.vector
        return merge(self.scan.vector, self.playout.vector)

    @property
    def warnings(self) -> List[str]:
        found = [f"UnknownConstructor: {head}" for head in self.scan.unknown_constructors]
        if isinstance(self.compile_error, UnsupportedLudemeError):
            found.append(f"UnsupportedLudeme: {', '.join(self.compile_error.ludemes)}")
        elif self.compile_error is not None:
            found.append(f"{type(self.compile_error).__name__}: {self.compile_error}")
        return found

    def report(self) -> ConceptReport:
        return ConceptReport.from_vector(
            game=self.name,
            source=self.path,
            vector=self.vector,
            scan_only=self.scan_only,
            playout=self.playout.summary if self.playout is not None else None,
            annotations=self.scan.annotations,
            warnings=self.warnings,
        )

    def __repr__(self) -> str:
        return (
            f"GameAnalysis(game_id={self.game_id!r}, scan_only={self.scan_only}, "
            f"n_concepts={len(self.vector)}, playout={self.playout is not None})"
        )


def analyze_file(
    path: str,
    config: Optional[PlayoutConfig] = None,
    compile: bool = True,
    n_workers: Optional[int] = None,
) -> GameAnalysis:
    """
    Scan a description and, when it compiles, play it.

    Args:
        path: description file.
        config: playout settings; None skips the playouts.
        compile: False stops after the static scan.
        n_workers: playout worker processes.

    Returns:
        GameAnalysis

    Raises:
        OSError: the file cannot be read.
        LudemeSyntaxError: the description does not parse.
        NotAGameError: the root is not `(game ...)`.

    Warns:
        UnknownConstructorWarning: the scan met heads it has no trigger for.
        ScanOnlyFallbackWarning: compilation failed, only compilation concepts are reported.
    """
    source = read_description(path)
    tree = parse_source(source)
    scan = static_scan(tree, source=source)
    warn_unknown_constructors(scan.game, scan.unknown_constructors)
    analysis = GameAnalysis(game_id=game_id_of(path), path=path, tree=tree, scan=scan)
    if not compile:
        return analysis
    try:
        analysis.spec = compile_game(tree)
    except LudeconError as error:
        logger.debug(f"{path} is scan-only: {error}")
        analysis.compile_error = error
        warn_scan_only(scan.game, str(error))
        return analysis
    if config is not None:
        analysis.playout = run_playouts(analysis.spec, config, n_workers)
    logger.debug(f"Analyzed {analysis!r}")
    return analysis
