"""
The fixed concept catalog.

Ids are stable: corpus matrices written by one version stay comparable with
the next. Frequency concepts sit in the category of their base concept
(Rules) while Metrics only holds aggregate statistics of the playouts.
Visual and Implementation are declared categories without any concept.

Licensed under the Apache License, Version 2.0
"""
import logging
from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, Tuple, Union

from ..validation.exceptions import NoFrequencyPairError, UnknownConceptError
from .taxonomy import ConceptCategory, ConceptComputation, ConceptDataType

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class Concept(IntEnum):
    # Properties
    NUM_PLAYERS = 1
    TWO_PLAYER = 2
    MULTIPLAYER = 3
    STOCHASTIC = 4
    DETERMINISTIC = 5
    ALTERNATING_TURNS = 6
    # Equipment
    SQUARE_TILING = 10
    HEX_TILING = 11
    NEUTRAL_PIECE = 12
    DICE_USED = 13
    NUM_PLAYABLE_SITES = 14
    NUM_COMPONENT_TYPES = 15
    NUM_DIRECTIONS = 16
    SQUARE_SHAPE = 17
    RECTANGLE_SHAPE = 18
    HEXAGON_SHAPE = 19
    RHOMBUS_SHAPE = 20
    STAR_SHAPE = 21
    TRACK = 22
    # Rules: meta and start
    NO_REPETITION = 30
    PIECES_PLACED_ON_BOARD = 31
    NUM_START_PIECES = 32
    # Rules: play
    ADD_MOVE = 40
    SLIDE_MOVE = 41
    SHOOT_MOVE = 42
    HOP_MOVE = 43
    STEP_MOVE = 44
    ROLL_MOVE = 45
    REMOVE_EFFECT = 46
    MOVE_AGAIN = 47
    CAPTURE = 48
    HOP_CAPTURE = 49
    REPLACEMENT_CAPTURE = 50
    # Rules: end
    LINE_END = 60
    CONNECTION_END = 61
    LOOP_END = 62
    NO_MOVES_END = 63
    REACH_END = 64
    CHECKMATE_END = 65
    DRAW_POSSIBLE = 66
    # Math
    LOGIC = 80
    PARITY = 81
    COUNTING = 82
    ARITHMETIC = 83
    # Metrics
    GAME_LENGTH = 100
    BRANCHING_FACTOR = 101
    BALANCE = 102
    DRAWISHNESS = 103
    TIMEOUTS = 104
    # Frequencies of play concepts
    ADD_FREQUENCY = 120
    SLIDE_FREQUENCY = 121
    SHOOT_FREQUENCY = 122
    HOP_FREQUENCY = 123
    STEP_FREQUENCY = 124
    ROLL_FREQUENCY = 125
    REMOVE_EFFECT_FREQUENCY = 126
    CAPTURE_FREQUENCY = 127
    MOVE_AGAIN_FREQUENCY = 128
    # Frequencies of end concepts
    LINE_END_FREQUENCY = 140
    CONNECTION_END_FREQUENCY = 141
    LOOP_END_FREQUENCY = 142
    NO_MOVES_END_FREQUENCY = 143
    REACH_END_FREQUENCY = 144


@dataclass(frozen=True)
class ConceptDef:
    """
    Identity of a concept.

    Attributes:
        id: stable integer id.
        name: game-player term, unique in the registry.
        category: taxonomy category.
        data_type: binary, integer or real.
        computation: computed from the description (Compilation) or from playouts (Playout).
        description: one line.
    """

    id: int
    name: str
    category: ConceptCategory
    data_type: ConceptDataType
    computation: ConceptComputation
    description: str

    @property
    def is_binary(self) -> bool:
        return self.data_type is ConceptDataType.BINARY

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "category": self.category.value,
            "dataType": self.data_type.value,
            "computation": self.computation.value,
            "description": self.description,
        }


_P, _E, _R, _M, _X = (
    ConceptCategory.PROPERTIES,
    ConceptCategory.EQUIPMENT,
    ConceptCategory.RULES,
    ConceptCategory.MATH,
    ConceptCategory.METRICS,
)
_BIN, _INT, _FLT = ConceptDataType.BINARY, ConceptDataType.INT, ConceptDataType.FLOAT
_COMP, _PLAY = ConceptComputation.COMPILATION, ConceptComputation.PLAYOUT

_ROWS = (
    (Concept.NUM_PLAYERS, "Num Players", _P, _INT, _COMP, "Number of players."),
    (Concept.TWO_PLAYER, "Two Player", _P, _BIN, _COMP, "Game played by exactly two players."),
    (Concept.MULTIPLAYER, "Multiplayer", _P, _BIN, _COMP, "Game played by more than two players."),
    (Concept.STOCHASTIC, "Stochastic", _P, _BIN, _COMP, "Chance is involved, through dice or random values."),
    (Concept.DETERMINISTIC, "Deterministic", _P, _BIN, _COMP, "No chance is involved."),
    (Concept.ALTERNATING_TURNS, "Alternating Turns", _P, _BIN, _COMP, "Players move one after the other."),
    (Concept.SQUARE_TILING, "Square Tiling", _E, _BIN, _COMP, "Board made of squares."),
    (Concept.HEX_TILING, "Hex Tiling", _E, _BIN, _COMP, "Board made of hexagons."),
    (Concept.NEUTRAL_PIECE, "Neutral Piece", _E, _BIN, _COMP, "A piece owned by no player."),
    (Concept.DICE_USED, "Dice Used", _E, _BIN, _COMP, "Dice are part of the equipment or rolled."),
    (Concept.NUM_PLAYABLE_SITES, "Num Playable Sites", _E, _INT, _COMP, "Number of sites a piece can stand on."),
    (Concept.NUM_COMPONENT_TYPES, "Num Component Types", _E, _INT, _COMP, "Number of kinds of pieces and dice declared."),
    (Concept.NUM_DIRECTIONS, "Num Directions", _E, _FLT, _COMP, "Average number of neighbours per site."),
    (Concept.SQUARE_SHAPE, "Square Shape", _E, _BIN, _COMP, "Board shaped as a square."),
    (Concept.RECTANGLE_SHAPE, "Rectangle Shape", _E, _BIN, _COMP, "Board shaped as a non-square rectangle."),
    (Concept.HEXAGON_SHAPE, "Hexagon Shape", _E, _BIN, _COMP, "Board shaped as a hexagon."),
    (Concept.RHOMBUS_SHAPE, "Rhombus Shape", _E, _BIN, _COMP, "Board shaped as a rhombus (diamond)."),
    (Concept.STAR_SHAPE, "Star Shape", _E, _BIN, _COMP, "Board shaped as a six-pointed star."),
    (Concept.TRACK, "Track", _E, _BIN, _COMP, "Pieces race along a track."),
    (Concept.NO_REPETITION, "No Repetition", _R, _BIN, _COMP, "A position may not be repeated."),
    (Concept.PIECES_PLACED_ON_BOARD, "Pieces Placed On Board", _R, _BIN, _COMP, "Pieces start on the board."),
    (Concept.NUM_START_PIECES, "Num Start Pieces", _R, _INT, _COMP, "Number of pieces on the board at the start."),
    (Concept.ADD_MOVE, "Add Move", _R, _BIN, _COMP, "A piece is added to an empty site."),
    (Concept.SLIDE_MOVE, "Slide Move", _R, _BIN, _COMP, "A piece slides any distance along a line."),
    (Concept.SHOOT_MOVE, "Shoot Move", _R, _BIN, _COMP, "A piece is shot along a line from the last moved piece."),
    (Concept.HOP_MOVE, "Hop Move", _R, _BIN, _COMP, "A piece jumps over an adjacent piece."),
    (Concept.STEP_MOVE, "Step Move", _R, _BIN, _COMP, "A piece moves to an adjacent site."),
    (Concept.ROLL_MOVE, "Roll Move", _R, _BIN, _COMP, "Dice are rolled to decide the move."),
    (Concept.REMOVE_EFFECT, "Remove Effect", _R, _BIN, _COMP, "Pieces are removed from the board."),
    (Concept.MOVE_AGAIN, "Move Again", _R, _BIN, _COMP, "The mover plays again after a move."),
    (Concept.CAPTURE, "Capture", _R, _BIN, _COMP, "Enemy pieces can be captured."),
    (Concept.HOP_CAPTURE, "Hop Capture", _R, _BIN, _COMP, "Enemy pieces are captured by jumping over them."),
    (Concept.REPLACEMENT_CAPTURE, "Replacement Capture", _R, _BIN, _COMP, "Enemy pieces are captured by moving onto them."),
    (Concept.LINE_END, "Line End", _R, _BIN, _COMP, "Game ends when a line of pieces is made."),
    (Concept.CONNECTION_END, "Connection End", _R, _BIN, _COMP, "Game ends when regions are connected."),
    (Concept.LOOP_END, "Loop End", _R, _BIN, _COMP, "Game ends when a loop of pieces is made."),
    (Concept.NO_MOVES_END, "No Moves End", _R, _BIN, _COMP, "Game ends when a player cannot move."),
    (Concept.REACH_END, "Reach End", _R, _BIN, _COMP, "Game ends when a piece reaches a region."),
    (Concept.CHECKMATE_END, "Checkmate End", _R, _BIN, _COMP, "Game ends on checkmate."),
    (Concept.DRAW_POSSIBLE, "Draw Possible", _R, _BIN, _COMP, "The game can end in a draw."),
    (Concept.LOGIC, "Logic", _M, _BIN, _COMP, "Conditions are combined with or, and, not."),
    (Concept.PARITY, "Parity", _M, _BIN, _COMP, "A value is tested for being even or odd."),
    (Concept.COUNTING, "Counting", _M, _BIN, _COMP, "Something is counted."),
    (Concept.ARITHMETIC, "Arithmetic", _M, _BIN, _COMP, "Values are added, subtracted, multiplied or divided."),
    (Concept.GAME_LENGTH, "Game Length", _X, _FLT, _PLAY, "Mean number of moves per game."),
    (Concept.BRANCHING_FACTOR, "Branching Factor", _X, _FLT, _PLAY, "Mean number of legal moves per decision."),
    (Concept.BALANCE, "Balance", _X, _FLT, _PLAY, "Win fraction of player 1 minus the mean win fraction of all players."),
    (Concept.DRAWISHNESS, "Drawishness", _X, _FLT, _PLAY, "Fraction of games ending in a draw."),
    (Concept.TIMEOUTS, "Timeouts", _X, _FLT, _PLAY, "Fraction of games stopped by the move limit."),
)

# Frequency concept -> the binary concept it counts.
_FREQUENCY_OF = {
    Concept.ADD_FREQUENCY: Concept.ADD_MOVE,
    Concept.SLIDE_FREQUENCY: Concept.SLIDE_MOVE,
    Concept.SHOOT_FREQUENCY: Concept.SHOOT_MOVE,
    Concept.HOP_FREQUENCY: Concept.HOP_MOVE,
    Concept.STEP_FREQUENCY: Concept.STEP_MOVE,
    Concept.ROLL_FREQUENCY: Concept.ROLL_MOVE,
    Concept.REMOVE_EFFECT_FREQUENCY: Concept.REMOVE_EFFECT,
    Concept.CAPTURE_FREQUENCY: Concept.CAPTURE,
    Concept.MOVE_AGAIN_FREQUENCY: Concept.MOVE_AGAIN,
    Concept.LINE_END_FREQUENCY: Concept.LINE_END,
    Concept.CONNECTION_END_FREQUENCY: Concept.CONNECTION_END,
    Concept.LOOP_END_FREQUENCY: Concept.LOOP_END,
    Concept.NO_MOVES_END_FREQUENCY: Concept.NO_MOVES_END,
    Concept.REACH_END_FREQUENCY: Concept.REACH_END,
}
FREQUENCY_PAIRS: Dict[int, int] = {base: freq for freq, base in _FREQUENCY_OF.items()}

# Exactly one of these tags each generated move.
MOVEMENT_CONCEPTS = (
    Concept.ADD_MOVE,
    Concept.SLIDE_MOVE,
    Concept.SHOOT_MOVE,
    Concept.HOP_MOVE,
    Concept.STEP_MOVE,
    Concept.ROLL_MOVE,
)
MOVE_TAG_CONCEPTS = MOVEMENT_CONCEPTS + (
    Concept.REMOVE_EFFECT,
    Concept.CAPTURE,
    Concept.MOVE_AGAIN,
    Concept.HOP_CAPTURE,
    Concept.REPLACEMENT_CAPTURE,
)
END_CONCEPTS = (
    Concept.LINE_END,
    Concept.CONNECTION_END,
    Concept.LOOP_END,
    Concept.NO_MOVES_END,
    Concept.REACH_END,
    Concept.CHECKMATE_END,
)


def _build() -> Tuple[ConceptDef, ...]:
    defs = [ConceptDef(int(cid), name, cat, dtype, comp, desc) for cid, name, cat, dtype, comp, desc in _ROWS]
    by_id = {d.id: d for d in defs}
    for freq, base in _FREQUENCY_OF.items():
        base_name = by_id[base].name
        defs.append(
            ConceptDef(
                int(freq),
                f"{base_name} Frequency",
                by_id[base].category,
                _FLT,
                _PLAY,
                f"Mean per-game frequency of '{base_name}'.",
            )
        )
    return tuple(sorted(defs, key=lambda d: d.id))


_REGISTRY = _build()
_BY_ID = {d.id: d for d in _REGISTRY}
_BY_NAME = {d.name: d for d in _REGISTRY}


def registry() -> Tuple[ConceptDef, ...]:
    """The full catalog, ordered by id."""
    return _REGISTRY


def lookup(key: Union[int, str]) -> ConceptDef:
    """
    Find a concept by id or by name.

    Raises:
        UnknownConceptError: the key is not in the registry.
    """
    found = _BY_NAME.get(key) if isinstance(key, str) else _BY_ID.get(int(key))
    if found is None:
        raise UnknownConceptError(f"Unknown concept {key!r}. The registry has {len(_REGISTRY)} concepts.")
    return found


def is_known(concept_id) -> bool:
    try:
        return int(concept_id) in _BY_ID
    except (TypeError, ValueError):
        return False


def frequency_concept_of(base: int) -> int:
    """
    Playout frequency concept paired with a binary play or end concept.

    Raises:
        UnknownConceptError: base is not in the registry.
        NoFrequencyPairError: base has no frequency concept.
    """
    definition = lookup(base)
    paired = FREQUENCY_PAIRS.get(definition.id)
    if paired is None:
        raise NoFrequencyPairError(
            f"Concept {definition.name!r} (id {definition.id}) has no playout frequency pair"
        )
    return int(paired)


def base_concept_of(frequency: int) -> int:
    """Inverse of frequency_concept_of()."""
    definition = lookup(frequency)
    base = _FREQUENCY_OF.get(definition.id)
    if base is None:
        raise NoFrequencyPairError(f"Concept {definition.name!r} (id {definition.id}) is not a frequency concept")
    return int(base)
