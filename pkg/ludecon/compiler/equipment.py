"""
Board construction and site expressions, shared by the static scan and the compiler.

Licensed under the Apache License, Version 2.0
"""
import logging
from typing import Optional, Tuple

from ..board import BoardGraph, build_hex_hexagon, build_hex_rhombus, build_hex_star, build_rectangle, build_square
from ..language import LudemeNode, NodeKind
from ..validation.checks import check_board_size
from ..validation.exceptions import SemanticError

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

# Board kinds without a tiled topology: their sites form a single track.
UNTILED_BOARDS = frozenset({"mancalaBoard", "backgammonBoard"})
BACKGAMMON_POINTS = 24
_HEX_SHAPES = {None: build_hex_hexagon, "Hexagon": build_hex_hexagon, "Diamond": build_hex_rhombus, "Star": build_hex_star}


def find_board_node(game: LudemeNode) -> Optional[LudemeNode]:
    """The shape constructor inside `(equipment { (board <shape>) ... })`."""
    for node in game.constructors("board"):
        for child in node.children:
            if child.is_constructor:
                return child
    return None


def _numbers(node: LudemeNode) -> Tuple:
    return tuple(c.value for c in node.children if c.kind is NodeKind.NUMBER)


def build_board(shape: LudemeNode) -> Optional[BoardGraph]:
    """
    Build the board described by a shape constructor.

    Returns:
        BoardGraph, or None for known untiled boards and unknown shapes.

    Raises:
        InvalidSizeError: a dimension below 1.
        SemanticError: a tiled shape without its dimensions.
    """
    sizes = _numbers(shape)
    head = shape.head
    if head == "square":
        if not sizes:
            raise SemanticError("(square n) needs a side length", shape.span)
        return build_square(sizes[0])
    if head == "rectangle":
        if len(sizes) < 2:
            raise SemanticError("(rectangle rows columns) needs two dimensions", shape.span)
        return build_rectangle(sizes[0], sizes[1])
    if head == "hex":
        qualifier = shape.qualifier
        if qualifier not in _HEX_SHAPES:
            raise SemanticError(f"Unknown hex board shape {qualifier!r}", shape.span)
        if not sizes:
            raise SemanticError("(hex n) needs a side length", shape.span)
        return _HEX_SHAPES[qualifier](sizes[0])
    if head in UNTILED_BOARDS:
        logger.debug(f"Board {head} has no tiled topology")
    return None


def is_empty_sites(node: LudemeNode) -> bool:
    """`(sites Empty)`, optionally wrapped in `(to ...)`."""
    if node.is_head("to") and node.children:
        node = node.children[0]
    return node.is_head("sites", "Empty")


def resolve_sites(node: LudemeNode, board: BoardGraph) -> Tuple[int, ...]:
    """
    Sites named by a site expression, in first-mention order without duplicates.

    Accepts a label string, a set of expressions, `(sites {labels})`,
    `(sites Top|Bottom|Left|Right|<side>)`, `(sites Row k)`, `(sites Column k)`,
    `(sites Corners)` and `(to <expression>)`.

    Raises:
        SemanticError: unknown label or region, or an unsupported expression.
    """
    found = []

    def visit(current: LudemeNode):
        if current.kind is NodeKind.STRING:
            found.append(board.site(current.value))
        elif current.kind is NodeKind.SET:
            for child in current.children:
                visit(child)
        elif current.is_head("to"):
            for child in current.children:
                visit(child)
        elif current.is_head("sites"):
            qualifier = current.qualifier
            if qualifier is None:
                for child in current.children:
                    visit(child)
            elif qualifier in ("Row", "Column"):
                numbers = _numbers(current)
                if not numbers:
                    raise SemanticError(f"(sites {qualifier} k) needs an index", current.span)
                found.extend(sorted(board.region(qualifier, int(numbers[0]))))
            elif qualifier == "Empty":
                raise SemanticError("(sites Empty) is not a fixed region", current.span)
            else:
                found.extend(sorted(board.region(qualifier)))
        else:
            raise SemanticError(f"Cannot read sites from {current.label!r}", current.span)

    visit(node)
    return tuple(dict.fromkeys(found))


def track_board_numerics(shape: LudemeNode) -> Optional[Tuple[int, float]]:
    """
    Site count and mean number of track neighbours of an untiled board.

    The backgammon points form an open track; mancala pits are sown around a
    closed loop, `(mancalaBoard rows columns)` with 2 rows of 6 by default.

    Returns:
        (sites, mean degree), or None when `shape` is not an untiled board.
    """
    if shape.head == "backgammonBoard":
        return BACKGAMMON_POINTS, 2.0 * (BACKGAMMON_POINTS - 1) / BACKGAMMON_POINTS
    if shape.head == "mancalaBoard":
        sizes = _numbers(shape)
        if len(sizes) >= 2:
            rows, columns = sizes[0], sizes[1]
        else:
            rows, columns = 2, sizes[0] if sizes else 6
        rows = check_board_size("rows", rows)
        columns = check_board_size("columns", columns)
        pits = rows * columns
        return pits, 2.0 if pits > 2 else float(pits - 1)
    return None
