"""
Board graphs for square and hexagonal tilings.

Square boards use (column, row) coordinates with A1 at the bottom left and
site index row * columns + column. Hexagonal boards use axial (q, r)
coordinates, sites ordered by row r then q, and are labelled like square
boards: row letter then position in the row.

Licensed under the Apache License, Version 2.0
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..validation.checks import check_board_size
from ..validation.exceptions import SemanticError

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class Tiling(Enum):
    SQUARE = "Square"
    HEX = "Hex"


class BoardShape(Enum):
    SQUARE = "Square"
    RECTANGLE = "Rectangle"
    HEXAGON = "Hexagon"
    RHOMBUS = "Rhombus"
    STAR = "Star"


# Compass steps, listed in circular order.
SQUARE_DIRECTIONS: Dict[str, Tuple[int, int]] = {
    "N": (0, 1),
    "NE": (1, 1),
    "E": (1, 0),
    "SE": (1, -1),
    "S": (0, -1),
    "SW": (-1, -1),
    "W": (-1, 0),
    "NW": (-1, 1),
}
HEX_DIRECTIONS: Dict[str, Tuple[int, int]] = {
    "E": (1, 0),
    "NE": (0, 1),
    "NW": (-1, 1),
    "W": (-1, 0),
    "SW": (0, -1),
    "SE": (1, -1),
}
OPPOSITE = {"N": "S", "S": "N", "E": "W", "W": "E", "NE": "SW", "SW": "NE", "NW": "SE", "SE": "NW"}

_SQUARE_CLASSES = {
    "Orthogonal": ("N", "E", "S", "W"),
    "Diagonal": ("NE", "SE", "SW", "NW"),
    "All": tuple(SQUARE_DIRECTIONS),
}
_HEX_CLASSES = {
    "Orthogonal": tuple(HEX_DIRECTIONS),
    "All": tuple(HEX_DIRECTIONS),
}
# Player-relative classes on square boards: player 1 moves up, player 2 down.
_RELATIVE = {
    "Forward": {1: ("N",), 2: ("S",)},
    "Backward": {1: ("S",), 2: ("N",)},
    "ForwardDiagonal": {1: ("NW", "NE"), 2: ("SW", "SE")},
}

_REGION_ALIASES = {"Top": "N", "Bottom": "S", "Left": "W", "Right": "E"}


def column_letters(index: int) -> str:
    """0 -> A, 25 -> Z, 26 -> AA."""
    letters = ""
    index += 1
    while index > 0:
        index, remainder = divmod(index - 1, 26)
        letters = chr(ord("A") + remainder) + letters
    return letters


@dataclass(frozen=True, eq=False)
class BoardGraph:
    """
    Playable sites with direction-labelled adjacency, side regions, corners and labels.

    Attributes:
        tiling: square or hexagonal cells.
        shape: board outline.
        dimensions: the sizes the board was built from.
        coordinates: per site, (column, row) or axial (q, r).
        labels: per site, its coordinate label.
        directions: compass names of the tiling, in circular order.
        step_table: per site, the neighbour in each direction of `directions` (-1 off board).
        sides: side name -> sites. Hexagon sides exclude corners, other shapes include them.
        corners: corner sites.
    """

    tiling: Tiling
    shape: BoardShape
    dimensions: Tuple[int, ...]
    coordinates: Tuple[Tuple[int, int], ...]
    labels: Tuple[str, ...]
    directions: Tuple[str, ...]
    step_table: Tuple[Tuple[int, ...], ...]
    sides: Mapping[str, FrozenSet[int]]
    corners: FrozenSet[int]
    _index: Dict[str, int] = field(default_factory=dict, repr=False)
    _neighbours: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False)
    _boundary: FrozenSet[int] = field(default=frozenset(), repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(self.labels)})
        neighbours = tuple(tuple(s for s in row if s >= 0) for row in self.step_table)
        object.__setattr__(self, "_neighbours", neighbours)
        full = len(self.directions)
        object.__setattr__(self, "_boundary", frozenset(s for s, n in enumerate(neighbours) if len(n) < full))

    @property
    def num_sites(self) -> int:
        return len(self.labels)

    @property
    def sites(self) -> range:
        return range(self.num_sites)

    @property
    def max_degree(self) -> int:
        return len(self.directions)

    @property
    def name(self) -> str:
        dims = "x".join(str(d) for d in self.dimensions)
        return f"{self.shape.value} {dims} ({self.tiling.value} tiling)"

    def label(self, site: int) -> str:
        return self.labels[site]

    def site(self, label: str) -> int:
        """
        Raises:
            SemanticError: the label is not on the board.
        """
        try:
            return self._index[label]
        except KeyError:
            raise SemanticError(f"Site {label!r} is not on the {self.name} board")

    def has_label(self, label: str) -> bool:
        return label in self._index

    def neighbours(self, site: int) -> Tuple[int, ...]:
        """All adjacent sites, in the circular order of the tiling's directions."""
        return self._neighbours[site]

    def step(self, site: int, direction: str) -> int:
        """Neighbour in a compass direction, -1 when off the board."""
        return self.step_table[site][self.directions.index(direction)]

    def ray(self, site: int, direction: str) -> Iterator[int]:
        """Sites met walking from `site` (excluded) in a direction until the edge."""
        column = self.directions.index(direction)
        current = self.step_table[site][column]
        while current >= 0:
            yield current
            current = self.step_table[current][column]

    def direction_class(self, name: str, player: int = 1) -> Tuple[str, ...]:
        """
        Compass directions named by a class (Orthogonal, Diagonal, All, Forward...) or a compass label.

        Raises:
            SemanticError: the class does not exist on this tiling.
        """
        if name in self.directions:
            return (name,)
        classes = _SQUARE_CLASSES if self.tiling is Tiling.SQUARE else _HEX_CLASSES
        if name in classes:
            return classes[name]
        if name in _RELATIVE and self.tiling is Tiling.SQUARE:
            if player not in _RELATIVE[name]:
                raise SemanticError(f"Direction {name!r} is only defined for players 1 and 2")
            return _RELATIVE[name][player]
        raise SemanticError(f"Direction {name!r} is not defined on a {self.tiling.value.lower()} tiling")

    @property
    def boundary(self) -> FrozenSet[int]:
        """Sites with fewer neighbours than a cell of the tiling has."""
        return self._boundary

    def sides_with_corners(self, name: str) -> FrozenSet[int]:
        """A side plus the corners touching it."""
        side = self._side(name)
        touching = {c for c in self.corners if any(n in side for n in self._neighbours[c])}
        if not side:
            # Sides of a 2-hexagon are empty: its corners are only found by position.
            touching = set(self._corners_of_side.get(name, ()))
        return frozenset(side | touching)

    def sides_without_corners(self, name: str) -> FrozenSet[int]:
        return frozenset(self._side(name) - self.corners)

    @property
    def _corners_of_side(self) -> Dict[str, Tuple[int, ...]]:
        if self.shape is not BoardShape.HEXAGON:
            return {}
        n = self.dimensions[0]
        q_r = {"N": ((-(n - 1), n - 1), (0, n - 1)), "NE": ((0, n - 1), (n - 1, 0)),
               "SE": ((n - 1, 0), (n - 1, -(n - 1))), "S": ((n - 1, -(n - 1)), (0, -(n - 1))),
               "SW": ((0, -(n - 1)), (-(n - 1), 0)), "NW": ((-(n - 1), 0), (-(n - 1), n - 1))}
        position = {coord: i for i, coord in enumerate(self.coordinates)}
        return {side: tuple(position[c] for c in ends if c in position) for side, ends in q_r.items()}

    def _side(self, name: str) -> FrozenSet[int]:
        name = _REGION_ALIASES.get(name, name)
        if name not in self.sides:
            raise SemanticError(
                f"Board {self.name} has no side {name!r}. Sides: {', '.join(self.sides)}"
            )
        return self.sides[name]

    def region(self, name: str, index: Optional[int] = None) -> FrozenSet[int]:
        """
        Named region: a side (or its Top/Bottom/Left/Right alias), `Row` k or `Column` k (0-based),
        `Corners` or `Boundary`.
        """
        if name == "Row" or name == "Column":
            if self.tiling is not Tiling.SQUARE:
                raise SemanticError(f"{name} regions are only defined on square tilings")
            axis = 1 if name == "Row" else 0
            found = frozenset(s for s, coord in enumerate(self.coordinates) if coord[axis] == index)
            if not found:
                raise SemanticError(f"{name} {index} is not on the {self.name} board")
            return found
        if name == "Corners":
            return self.corners
        if name == "Boundary":
            return self.boundary
        return self._side(name)

    def track(self, kind: str = "Boustrophedon") -> Tuple[int, ...]:
        """
        Sites of a track in race order.

        Boustrophedon runs along row 0 from left to right, row 1 from right to left, and so on.
        """
        if kind != "Boustrophedon" or self.tiling is not Tiling.SQUARE:
            raise SemanticError(f"Track {kind!r} is not available on the {self.name} board")
        rows, columns = self.dimensions
        order = []
        for row in range(rows):
            cols = range(columns) if row % 2 == 0 else range(columns - 1, -1, -1)
            order.extend(row * columns + col for col in cols)
        return tuple(order)

    def degrees(self) -> np.ndarray:
        return np.array([len(n) for n in self._neighbours], dtype=int)

    def to_networkx(self) -> nx.Graph:
        """Undirected graph of the sites; nodes carry their label, edges their direction."""
        graph = nx.Graph(name=self.name)
        for site in self.sites:
            graph.add_node(site, label=self.labels[site])
        for site, row in enumerate(self.step_table):
            for direction, other in zip(self.directions, row):
                if other > site:
                    graph.add_edge(site, other, direction=direction)
        return graph


def mean_degree(board: BoardGraph) -> float:
    """Mean number of neighbours per site (the Num Directions concept)."""
    if board.num_sites == 0:
        return 0.0
    return float(board.degrees().sum()) / board.num_sites


def _assemble(
    tiling: Tiling,
    shape: BoardShape,
    dimensions: Tuple[int, ...],
    cells: Sequence[Tuple[int, int]],
    labels: Sequence[str],
    sides: Dict[str, List[Tuple[int, int]]],
    corners: Sequence[Tuple[int, int]],
) -> BoardGraph:
    vectors = SQUARE_DIRECTIONS if tiling is Tiling.SQUARE else HEX_DIRECTIONS
    position = {cell: i for i, cell in enumerate(cells)}
    step_table = tuple(
        tuple(position.get((x + dx, y + dy), -1) for dx, dy in vectors.values()) for x, y in cells
    )
    board = BoardGraph(
        tiling=tiling,
        shape=shape,
        dimensions=dimensions,
        coordinates=tuple(cells),
        labels=tuple(labels),
        directions=tuple(vectors),
        step_table=step_table,
        sides={name: frozenset(position[c] for c in side) for name, side in sides.items()},
        corners=frozenset(position[c] for c in corners),
    )
    logger.debug(f"Built {board.name}: {board.num_sites} sites, {len(board.corners)} corners")
    return board


def build_rectangle(rows: int, columns: int) -> BoardGraph:
    """
    Square-tiled board of rows x columns sites with 8-direction adjacency.

    Raises:
        InvalidSizeError: a dimension below 1.
    """
    rows = check_board_size("rows", rows)
    columns = check_board_size("columns", columns)
    cells = [(col, row) for row in range(rows) for col in range(columns)]
    labels = [f"{column_letters(col)}{row + 1}" for col, row in cells]
    sides = {
        "N": [c for c in cells if c[1] == rows - 1],
        "S": [c for c in cells if c[1] == 0],
        "E": [c for c in cells if c[0] == columns - 1],
        "W": [c for c in cells if c[0] == 0],
    }
    corners = [(0, 0), (columns - 1, 0), (0, rows - 1), (columns - 1, rows - 1)]
    shape = BoardShape.SQUARE if rows == columns else BoardShape.RECTANGLE
    return _assemble(Tiling.SQUARE, shape, (rows, columns), cells, labels, sides, corners)


def build_square(n: int) -> BoardGraph:
    """
    n x n square-tiled board.

    Raises:
        InvalidSizeError: n < 1.
    """
    n = check_board_size("side", n)
    return build_rectangle(n, n)


def _hex_labels(cells: Sequence[Tuple[int, int]]) -> List[str]:
    rows = sorted({r for _, r in cells})
    row_letter = {r: column_letters(i) for i, r in enumerate(rows)}
    labels = []
    previous_row, position = None, 0
    for _, r in cells:
        position = position + 1 if r == previous_row else 1
        previous_row = r
        labels.append(f"{row_letter[r]}{position}")
    return labels


def build_hex_hexagon(n: int) -> BoardGraph:
    """
    Hexagon of hexagons with side n: 3n^2 - 3n + 1 sites, 6 corners and 6 sides
    (N, NE, SE, S, SW, NW) that exclude the corners.

    Raises:
        InvalidSizeError: n < 1.
    """
    n = check_board_size("side", n)
    m = n - 1
    cells = sorted(
        ((q, r) for r in range(-m, m + 1) for q in range(-m, m + 1) if abs(q + r) <= m),
        key=lambda c: (c[1], c[0]),
    )
    corner_cells = [(m, 0), (0, m), (-m, m), (-m, 0), (0, -m), (m, -m)]
    corner_set = set(corner_cells)
    edge_tests = {
        "N": lambda q, r: r == m,
        "NE": lambda q, r: q + r == m,
        "SE": lambda q, r: q == m,
        "S": lambda q, r: r == -m,
        "SW": lambda q, r: q + r == -m,
        "NW": lambda q, r: q == -m,
    }
    sides = {
        name: [c for c in cells if test(*c) and c not in corner_set] for name, test in edge_tests.items()
    }
    if n == 1:
        sides = {name: [] for name in edge_tests}
    return _assemble(
        Tiling.HEX, BoardShape.HEXAGON, (n,), cells, _hex_labels(cells), sides, sorted(corner_set)
    )


def build_hex_rhombus(n: int) -> BoardGraph:
    """
    Rhombus of n x n hexagons (the Hex board). Sides S, N, W and E include their corners;
    player 1 connects N with S, player 2 connects W with E.

    Raises:
        InvalidSizeError: n < 1.
    """
    n = check_board_size("side", n)
    cells = [(q, r) for r in range(n) for q in range(n)]
    m = n - 1
    sides = {
        "N": [c for c in cells if c[1] == m],
        "S": [c for c in cells if c[1] == 0],
        "E": [c for c in cells if c[0] == m],
        "W": [c for c in cells if c[0] == 0],
    }
    corners = {(0, 0), (m, 0), (0, m), (m, m)}
    return _assemble(Tiling.HEX, BoardShape.RHOMBUS, (n,), cells, _hex_labels(cells), sides, sorted(corners))


def build_hex_star(n: int) -> BoardGraph:
    """
    Six-pointed star of hexagons whose points have n rows (Chinese Checkers: n = 4, 121 sites).

    Sides are the six point triangles, corners their tips.

    Raises:
        InvalidSizeError: n < 1.
    """
    n = check_board_size("point size", n)
    span = 2 * n
    cells = []
    for r in range(-span, span + 1):
        for q in range(-span, span + 1):
            s = -q - r
            if max(q, r, s) <= n or min(q, r, s) >= -n:
                if max(abs(q), abs(r), abs(s)) <= span:
                    cells.append((q, r))
    cells.sort(key=lambda c: (c[1], c[0]))
    points = {
        "N": lambda q, r: r > n,
        "S": lambda q, r: r < -n,
        "NE": lambda q, r: -q - r < -n,
        "SW": lambda q, r: -q - r > n,
        "SE": lambda q, r: q > n,
        "NW": lambda q, r: q < -n,
    }
    sides = {name: [c for c in cells if test(*c)] for name, test in points.items()}
    tips = [(-n, span), (n, -span), (span, -n), (-span, n), (n, n), (-n, -n)]
    return _assemble(Tiling.HEX, BoardShape.STAR, (n,), cells, _hex_labels(cells), sides, tips)
