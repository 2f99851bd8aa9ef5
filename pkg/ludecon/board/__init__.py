"""
Board topology: square, rectangle, hexagon, rhombus and star boards.

Licensed under the Apache License, Version 2.0
"""
from .topology import (
    BoardGraph,
    BoardShape,
    HEX_DIRECTIONS,
    OPPOSITE,
    SQUARE_DIRECTIONS,
    Tiling,
    build_hex_hexagon,
    build_hex_rhombus,
    build_hex_star,
    build_rectangle,
    build_square,
    column_letters,
    mean_degree,
)

__all__ = [
    "BoardGraph",
    "BoardShape",
    "HEX_DIRECTIONS",
    "OPPOSITE",
    "SQUARE_DIRECTIONS",
    "Tiling",
    "build_hex_hexagon",
    "build_hex_rhombus",
    "build_hex_star",
    "build_rectangle",
    "build_square",
    "column_letters",
    "mean_degree",
]
