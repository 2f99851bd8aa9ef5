"""
Report dataclasses for structured output.

Reports are plain data: they are computed on demand, never print or log,
and serialize to canonical JSON (sorted keys, concepts ordered by id) so that
two runs with the same inputs produce byte-identical text.
"""

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

import networkx as nx
import numpy as np


def to_canonical_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, allow_nan=False)


@dataclass
class PlayoutSummary:
    """Outcome counts of a batch of playouts."""

    trials: int
    master_seed: int
    policy: str
    move_cap: int
    n_truncated: int = 0
    n_draws: int = 0
    wins: Dict[int, int] = field(default_factory=dict)
    mean_length: float = 0.0

    @property
    def truncated_fraction(self) -> float:
        return self.n_truncated / self.trials if self.trials else 0.0

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        d = asdict(self)
        d["wins"] = {str(player): count for player, count in sorted(self.wins.items())}
        d["truncated_fraction"] = self.truncated_fraction
        return d

    def __repr__(self) -> str:
        return (
            f"PlayoutSummary("
            f"trials={self.trials}, seed={self.master_seed}, policy={self.policy}, "
            f"draws={self.n_draws}, truncated={self.n_truncated}, "
            f"mean_length={self.mean_length:.2f})"
        )


@dataclass
class ConceptReport:
    """Concept values of one game, as emitted by the command line."""

    game: str
    source: str
    concepts: List[Dict[str, Any]]
    scan_only: bool = False
    playout: Optional[Dict[str, Any]] = None
    annotations: Dict[str, Any] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)

    @classmethod
    def from_vector(
        cls,
        game: str,
        source: str,
        vector,
        scan_only: bool = False,
        playout: Optional[PlayoutSummary] = None,
        annotations: Optional[Dict[str, Any]] = None,
        warnings: Optional[List[str]] = None,
    ) -> "ConceptReport":
        concepts = []
        for definition, value in vector.items():
            entry = definition.to_dict()
            del entry["description"]
            entry["value"] = value
            concepts.append(entry)
        playout_block = None
        if playout is not None:
            playout_block = {
                "trials": playout.trials,
                "seed": playout.master_seed,
                "policy": playout.policy,
                "moveCap": playout.move_cap,
                "truncatedFraction": playout.truncated_fraction,
            }
        return cls(
            game=game,
            source=source,
            concepts=concepts,
            scan_only=scan_only,
            playout=playout_block,
            annotations=dict(annotations or {}),
            warnings=list(warnings or []),
        )

    def value(self, name: str, default=None):
        for entry in self.concepts:
            if entry["name"] == name:
                return entry["value"]
        return default

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization (JSON-compatible)."""
        return {
            "game": self.game,
            "source": self.source,
            "scanOnly": self.scan_only,
            "concepts": sorted(self.concepts, key=lambda entry: entry["id"]),
            "playout": self.playout,
            "annotations": self.annotations,
            "warnings": self.warnings,
        }

    def to_json(self) -> str:
        return to_canonical_json(self.to_dict())

    def __repr__(self) -> str:
        return (
            f"ConceptReport("
            f"game={self.game}, "
            f"n_concepts={len(self.concepts)}, "
            f"scan_only={self.scan_only}, "
            f"warnings={len(self.warnings)})"
        )


@dataclass
class BoardSummary:
    """Site counts and degree statistics of a board."""

    name: str
    n_sites: int
    n_corners: int
    side_sizes: Dict[str, int]
    degree_histogram: Dict[int, int]
    mean_degree: float
    n_components: int

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        d = asdict(self)
        d["degree_histogram"] = {str(k): v for k, v in sorted(self.degree_histogram.items())}
        return d

    def to_json(self) -> str:
        return to_canonical_json(self.to_dict())

    def __repr__(self) -> str:
        return (
            f"BoardSummary("
            f"name={self.name}, n_sites={self.n_sites}, "
            f"mean_degree={self.mean_degree:.4f}, components={self.n_components})"
        )


def compute_board_summary(board) -> BoardSummary:
    """
    Describe a board.

    Args:
        board: BoardGraph

    Returns:
        BoardSummary with site, corner and side counts, the degree histogram
        and the number of connected components.
    """
    degrees = board.degrees()
    counts = np.bincount(degrees, minlength=board.max_degree + 1) if len(degrees) else np.zeros(1, dtype=int)
    histogram = {int(d): int(c) for d, c in enumerate(counts) if c > 0}
    mean = float(degrees.mean()) if len(degrees) else 0.0
    return BoardSummary(
        name=board.name,
        n_sites=board.num_sites,
        n_corners=len(board.corners),
        side_sizes={name: len(sites) for name, sites in sorted(board.sides.items())},
        degree_histogram=histogram,
        mean_degree=mean,
        n_components=nx.number_connected_components(board.to_networkx()),
    )
