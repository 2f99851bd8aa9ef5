"""
Concept registry: taxonomy, fixed catalog and concept vectors.

Licensed under the Apache License, Version 2.0
"""
from .taxonomy import (
    ConceptCategory,
    ConceptComputation,
    ConceptDataType,
    DEFAULT_DISTANCE_CATEGORIES,
)
from .catalog import (
    Concept,
    ConceptDef,
    END_CONCEPTS,
    FREQUENCY_PAIRS,
    MOVEMENT_CONCEPTS,
    MOVE_TAG_CONCEPTS,
    base_concept_of,
    frequency_concept_of,
    is_known,
    lookup,
    registry,
)
from .vector import ConceptVector, merge

__all__ = [
    "ConceptCategory",
    "ConceptComputation",
    "ConceptDataType",
    "DEFAULT_DISTANCE_CATEGORIES",
    "Concept",
    "ConceptDef",
    "END_CONCEPTS",
    "FREQUENCY_PAIRS",
    "MOVEMENT_CONCEPTS",
    "MOVE_TAG_CONCEPTS",
    "base_concept_of",
    "frequency_concept_of",
    "is_known",
    "lookup",
    "registry",
    "ConceptVector",
    "merge",
]
