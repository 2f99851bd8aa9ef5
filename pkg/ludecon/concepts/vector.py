"""
Concept vectors: a game's sparse map from concept ids to values.

Licensed under the Apache License, Version 2.0
"""
from dataclasses import dataclass, field
from typing import Dict, Iterator, Mapping, Optional, Tuple

from ..validation.checks import check_concept_values
from ..validation.exceptions import OverlappingDomainsError
from .catalog import ConceptDef, lookup
from .taxonomy import ConceptComputation


@dataclass(frozen=True)
class ConceptVector:
    """
    Sparse concept values, validated against the registry on construction.

    Binary concepts hold 0 or 1, frequency concepts hold values in [0, 1].
    An absent key means "concept not detected" (binary) or "not computed" (numeric).

    Attributes:
        values: concept id -> value.
        provenance: playout configuration the playout values came from, if any.
    """

    values: Mapping[int, float] = field(default_factory=dict)
    provenance: Optional[dict] = None

    def __post_init__(self):
        object.__setattr__(self, "values", check_concept_values(self.values))

    def __getitem__(self, concept_id) -> float:
        return self.values[int(concept_id)]

    def __contains__(self, concept_id) -> bool:
        return int(concept_id) in self.values

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def get(self, concept_id, default=None):
        return self.values.get(int(concept_id), default)

    def items(self) -> Tuple[Tuple[ConceptDef, float], ...]:
        """(definition, value) pairs ordered by concept id."""
        return tuple((lookup(cid), self.values[cid]) for cid in sorted(self.values))

    def restrict(self, computation: ConceptComputation) -> "ConceptVector":
        return ConceptVector(
            {cid: v for cid, v in self.values.items() if lookup(cid).computation is computation},
            self.provenance,
        )

    def to_dict(self) -> Dict[int, float]:
        return {cid: self.values[cid] for cid in sorted(self.values)}


def merge(compilation: ConceptVector, playout: ConceptVector) -> ConceptVector:
    """
    Union of a compilation vector and a playout vector.

    Raises:
        OverlappingDomainsError: the two vectors share a concept id.
    """
    overlap = sorted(set(compilation.values) & set(playout.values))
    if overlap:
        names = ", ".join(lookup(cid).name for cid in overlap)
        raise OverlappingDomainsError(f"Cannot merge concept vectors sharing concepts: {names}")
    values = dict(compilation.values)
    values.update(playout.values)
    return ConceptVector(values, playout.provenance or compilation.provenance)
