"""
Concept taxonomy: categories, data types and computation types.

Licensed under the Apache License, Version 2.0
"""
from enum import Enum


class ConceptCategory(Enum):
    PROPERTIES = "Properties"
    EQUIPMENT = "Equipment"
    RULES = "Rules"
    MATH = "Math"
    METRICS = "Metrics"
    VISUAL = "Visual"
    IMPLEMENTATION = "Implementation"


class ConceptDataType(Enum):
    BINARY = "Binary"
    INT = "NumericalInt"
    FLOAT = "NumericalFloat"

    @property
    def is_numerical(self) -> bool:
        return self is not ConceptDataType.BINARY


class ConceptComputation(Enum):
    COMPILATION = "Compilation"
    PLAYOUT = "Playout"


# Categories compared by default when measuring game distances.
DEFAULT_DISTANCE_CATEGORIES = frozenset(
    {
        ConceptCategory.PROPERTIES,
        ConceptCategory.EQUIPMENT,
        ConceptCategory.RULES,
        ConceptCategory.MATH,
        ConceptCategory.METRICS,
    }
)
