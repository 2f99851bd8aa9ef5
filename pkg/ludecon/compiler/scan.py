"""
Static concept scan.

A purely syntactic pass over a parsed `(game ...)` tree: single ludemes
trigger single concepts, ludeme combinations trigger combination concepts.
Only the board is built (for site counts and directions); the rules are never
compiled, so any parseable description can be scanned.

Trigger table (ludeme pattern -> concept):

    (players n)                                   Num Players = n; Two Player if n = 2; Multiplayer if n > 2
    roll | dice | (value Random) | (move Roll)    Stochastic, Dice Used (dice and rolls only)
    absence of the above                          Deterministic
    no (mode Simultaneous)                        Alternating Turns
    (square n) | (rectangle r c)                  Square Tiling, Square Shape | Rectangle Shape
    (hex n) | (hex Diamond n) | (hex Star n)      Hex Tiling, Hexagon | Rhombus | Star Shape
    tiled board                                   Num Playable Sites, Num Directions (mean neighbours)
    (backgammonBoard) | (mancalaBoard r c)        Track; Num Playable Sites, Num Directions along the track
    (piece _ Neutral)                             Neutral Piece
    piece and dice declarations                   Num Component Types = their count
    (track ...)                                   Track
    (no Repeat)                                   No Repetition
    (place ...)                                   Pieces Placed On Board; Num Start Pieces = placed sites
    (move Add) | (move Shoot)                     Add Move (a shot adds a piece)
    (move Slide|Shoot|Hop|Step|Roll)              Slide | Shoot | Hop | Step | Roll Move
    (remove ...)                                  Remove Effect
    (moveAgain)                                   Move Again
    (move Hop ... (remove ...) ...)               Hop Capture
    (move Step|Slide ... (is Enemy) ...)          Replacement Capture
    Remove Effect | Hop | Replacement Capture     Capture
    (is Line) (is Connected) (is Loop)            Line End, Connection End, Loop End
    (no Moves) (is Reach) (is Checkmate)          No Moves End, Reach End, Checkmate End
    (result _ Draw) | (byScore)                   Draw Possible
    Add Move without No Moves                     Draw Possible, unless only opposite sides of a hex
                                                  rhombus are connected (a full board has a winner)
    or | and | not                                Logic
    (is Even) | (is Odd)                          Parity
    count                                         Counting
    add | sub | mul | div | mod                   Arithmetic

Heads outside VOCABULARY are reported as unknown constructors, never as errors.
Scan-only descriptions may declare numbers that cannot be computed with a
`//@ annotation Name=value` comment line; they are surfaced as annotations.
An annotation naming a numeric concept (`PlayableSites` for Num Playable
Sites) replaces the computed value: the concept is left out of the vector.

Licensed under the Apache License, Version 2.0
"""
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from ..board import BoardGraph, BoardShape, Tiling, mean_degree
from ..concepts import Concept, ConceptComputation, ConceptVector, lookup
from ..concepts import registry as concept_registry
from ..language import LudemeNode, NodeKind
from ..validation.exceptions import NotAGameError, SemanticError
from .equipment import build_board, find_board_node, resolve_sites, track_board_numerics

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

VOCABULARY = frozenset(
    {
        # structure
        "game", "players", "equipment", "rules", "meta", "start", "play", "end", "mode",
        # equipment
        "board", "square", "rectangle", "hex", "mancalaBoard", "backgammonBoard",
        "piece", "dice", "track", "map", "pair", "regions", "hand",
        # rules
        "place", "move", "then", "moveAgain", "if", "is", "count", "forEach", "sites",
        "to", "from", "result", "byScore", "remove", "value", "roll", "no", "enclose",
        "sow", "all", "directions", "between", "promote",
        # logic and arithmetic
        "or", "and", "not", "add", "sub", "mul", "div", "mod",
    }
)
_ARITHMETIC = frozenset({"add", "sub", "mul", "div", "mod"})
_LOGIC = frozenset({"or", "and", "not"})
_MOVEMENT = {
    "Add": Concept.ADD_MOVE,
    "Slide": Concept.SLIDE_MOVE,
    "Shoot": Concept.SHOOT_MOVE,
    "Hop": Concept.HOP_MOVE,
    "Step": Concept.STEP_MOVE,
    "Roll": Concept.ROLL_MOVE,
}
_END_TESTS = {
    "Line": Concept.LINE_END,
    "Connected": Concept.CONNECTION_END,
    "Loop": Concept.LOOP_END,
    "Reach": Concept.REACH_END,
    "Checkmate": Concept.CHECKMATE_END,
}
_SHAPES = {
    BoardShape.SQUARE: Concept.SQUARE_SHAPE,
    BoardShape.RECTANGLE: Concept.RECTANGLE_SHAPE,
    BoardShape.HEXAGON: Concept.HEXAGON_SHAPE,
    BoardShape.RHOMBUS: Concept.RHOMBUS_SHAPE,
    BoardShape.STAR: Concept.STAR_SHAPE,
}
_ANNOTATION = re.compile(r"^\s*//@\s*annotation\s+([A-Za-z_][\w]*)\s*=\s*(\S+)\s*$", re.MULTILINE)


@dataclass
class ScanReport:
    """
    Result of a static scan.

    Attributes:
        game: game name (first string child of the root).
        vector: compilation concepts detected.
        unknown_constructors: head symbols without trigger rules, sorted.
        annotations: declared values of concepts the scan cannot compute.
        board: the board built for the scan, if the description has a tiled one.
    """

    game: str
    vector: ConceptVector
    unknown_constructors: Tuple[str, ...] = ()
    annotations: Dict[str, object] = field(default_factory=dict)
    board: Optional[BoardGraph] = None

    def __repr__(self) -> str:
        return (
            f"ScanReport(game={self.game!r}, n_concepts={len(self.vector)}, "
            f"unknown={list(self.unknown_constructors)}, annotations={self.annotations})"
        )


def game_name(tree: LudemeNode) -> str:
    for child in tree.children:
        if child.kind is NodeKind.STRING:
            return child.value
    return "<unnamed>"


def read_annotations(source: Optional[str]) -> Dict[str, object]:
    """`//@ annotation Name=value` lines; numeric values are converted."""
    annotations = {}
    if not source:
        return annotations
    for name, raw in _ANNOTATION.findall(source):
        try:
            value = int(raw)
        except ValueError:
            try:
                value = float(raw)
            except ValueError:
                value = raw
        annotations[name] = value
    return annotations


def annotated_concepts(annotations: Dict[str, object]) -> Dict[int, float]:
    """
    Numeric compilation concepts named by annotations, with their declared values.

    A name is the concept name without spaces, with or without a leading "Num":
    `PlayableSites` and `NumPlayableSites` both name Num Playable Sites.
    """
    names = {}
    for definition in concept_registry():
        if definition.is_binary or definition.computation is not ConceptComputation.COMPILATION:
            continue
        compact = definition.name.replace(" ", "")
        names[compact] = definition.id
        if compact.startswith("Num"):
            names[compact[3:]] = definition.id
    return {
        names[name]: value
        for name, value in annotations.items()
        if name in names and isinstance(value, (int, float)) and not isinstance(value, bool)
    }


def _contains_qualified(node: LudemeNode, head: str, qualifier: str) -> bool:
    return any(n.is_head(head, qualifier) for n in node.walk())


def static_scan(tree: LudemeNode, registry=None, source: Optional[str] = None) -> ScanReport:
    """
    Detect the compilation concepts of a description.

    Args:
        tree: parsed description.
        registry: concept catalog to scan for; every concept the scanner produces must be in it
            (defaults to the built-in registry).
        source: description text, to read `//@ annotation` lines from.

    Returns:
        ScanReport

    Raises:
        NotAGameError: the root is not `(game ...)`.
        InvalidSizeError: a board dimension below 1.
    """
    if not tree.is_head("game"):
        raise NotAGameError(f"The root of a description must be (game ...), got {tree.label!r}")
    name = game_name(tree)
    found: Dict[int, float] = {}

    def flag(concept):
        found[int(concept)] = 1

    players = tree.child("players")
    player_numbers = players.literals() if players is not None else ()
    num_players = next((v for v in player_numbers if isinstance(v, int)), None)
    if num_players is not None:
        found[int(Concept.NUM_PLAYERS)] = num_players
        if num_players == 2:
            flag(Concept.TWO_PLAYER)
        elif num_players > 2:
            flag(Concept.MULTIPLAYER)

    unknown = set()
    component_types = 0
    stochastic = dice_used = False
    simultaneous = False
    has_no_moves = has_draw_result = False
    opposite_sides_only = None

    for node in tree.walk():
        if not node.is_constructor:
            continue
        head, qualifier = node.head, node.qualifier
        if head not in VOCABULARY:
            unknown.add(head)
            continue
        if head in ("roll", "dice"):
            stochastic = dice_used = True
        if head == "dice":
            component_types += 1
        elif head == "piece" and node.children and node.children[0].kind is NodeKind.STRING:
            # declarations only, `(piece "Dot0")` references are skipped
            if len(node.children) > 1 and node.children[1].is_symbol():
                component_types += 1
                if node.children[1].value == "Neutral":
                    flag(Concept.NEUTRAL_PIECE)
        elif head == "value" and qualifier == "Random":
            stochastic = True
        elif head == "mode" and qualifier == "Simultaneous":
            simultaneous = True
        elif head == "track":
            flag(Concept.TRACK)
        elif head == "place":
            flag(Concept.PIECES_PLACED_ON_BOARD)
        elif head == "remove":
            flag(Concept.REMOVE_EFFECT)
        elif head == "moveAgain":
            flag(Concept.MOVE_AGAIN)
        elif head == "count":
            flag(Concept.COUNTING)
        elif head in _LOGIC:
            flag(Concept.LOGIC)
        elif head in _ARITHMETIC:
            flag(Concept.ARITHMETIC)
        elif head == "no":
            if qualifier == "Repeat":
                flag(Concept.NO_REPETITION)
            elif qualifier == "Moves":
                flag(Concept.NO_MOVES_END)
                has_no_moves = True
        elif head == "is":
            if qualifier in _END_TESTS:
                opposite_sides = qualifier == "Connected" and any(
                    c.is_symbol("OppositeSides") for c in node.children
                )
                opposite_sides_only = opposite_sides and opposite_sides_only is not False
                flag(_END_TESTS[qualifier])
            elif qualifier in ("Even", "Odd"):
                flag(Concept.PARITY)
        elif head == "result":
            if any(c.is_symbol("Draw") for c in node.children):
                has_draw_result = True
        elif head == "byScore":
            has_draw_result = True
        elif head == "move" and qualifier in _MOVEMENT:
            flag(_MOVEMENT[qualifier])
            if qualifier == "Shoot":
                flag(Concept.ADD_MOVE)
            elif qualifier == "Roll":
                stochastic = dice_used = True
            elif qualifier == "Hop" and node.contains("remove"):
                flag(Concept.HOP_CAPTURE)
            elif qualifier in ("Step", "Slide") and _contains_qualified(node, "is", "Enemy"):
                flag(Concept.REPLACEMENT_CAPTURE)

    if stochastic:
        flag(Concept.STOCHASTIC)
    else:
        flag(Concept.DETERMINISTIC)
    if dice_used:
        flag(Concept.DICE_USED)
    if not simultaneous:
        flag(Concept.ALTERNATING_TURNS)
    if component_types:
        found[int(Concept.NUM_COMPONENT_TYPES)] = component_types
    if any(int(c) in found for c in (Concept.REMOVE_EFFECT, Concept.HOP_CAPTURE, Concept.REPLACEMENT_CAPTURE)):
        flag(Concept.CAPTURE)

    board = None
    shape = find_board_node(tree)
    if shape is not None:
        try:
            board = build_board(shape)
        except SemanticError as error:
            logger.debug(f"No board for {name!r}: {error}")
    if board is not None:
        flag(Concept.SQUARE_TILING if board.tiling is Tiling.SQUARE else Concept.HEX_TILING)
        flag(_SHAPES[board.shape])
        found[int(Concept.NUM_PLAYABLE_SITES)] = board.num_sites
        found[int(Concept.NUM_DIRECTIONS)] = mean_degree(board)
        start_pieces = _count_start_pieces(tree, board)
        if start_pieces is not None:
            found[int(Concept.NUM_START_PIECES)] = start_pieces
    elif shape is not None:
        track = track_board_numerics(shape)
        if track is not None:
            flag(Concept.TRACK)
            found[int(Concept.NUM_PLAYABLE_SITES)], found[int(Concept.NUM_DIRECTIONS)] = track

    # filling a hex rhombus always connects one pair of opposite sides
    hex_decided = bool(opposite_sides_only) and board is not None and board.shape is BoardShape.RHOMBUS
    if has_draw_result or (int(Concept.ADD_MOVE) in found and not has_no_moves and not hex_decided):
        flag(Concept.DRAW_POSSIBLE)

    annotations = read_annotations(source)
    for cid in annotated_concepts(annotations):
        if found.pop(cid, None) is not None:
            logger.debug(f"{name!r}: annotated {lookup(cid).name!r} replaces the computed value")

    if registry is not None:
        known = {d.id for d in registry}
        found = {cid: v for cid, v in found.items() if cid in known}

    report = ScanReport(
        game=name,
        vector=ConceptVector(found),
        unknown_constructors=tuple(sorted(unknown)),
        annotations=annotations,
        board=board,
    )
    logger.debug(f"Scanned {name!r}: {len(found)} concepts, {len(unknown)} unknown constructors")
    return report


def _count_start_pieces(tree: LudemeNode, board: BoardGraph) -> Optional[int]:
    places = list(tree.constructors("place"))
    if not places:
        return None
    total = 0
    for place in places:
        for child in place.children[1:]:
            try:
                total += len(resolve_sites(child, board))
            except SemanticError:
                # counts placed pieces only where the sites can be read
                pass
    return total
