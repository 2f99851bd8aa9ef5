"""
Compiled game: piece types, play rules, end rules and meta rules.

Everything here is immutable once built by compile_game() and is shared
read-only by the engine and the playout workers.

Licensed under the Apache License, Version 2.0
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Mapping, Optional, Tuple

from ..board import BoardGraph
from ..concepts import Concept

NEUTRAL = 0


@dataclass(frozen=True)
class PieceType:
    """
    A piece kind after owner expansion: `(piece "Queen" Each ...)` gives Queen1 and Queen2.

    Attributes:
        index: position in GameSpec.piece_types.
        name: expanded name (base name + owner index).
        base_name: name as written in the description.
        owner: player index, 0 for neutral pieces.
        move_rule: rule used by `(forEach Piece)`, if any.
    """

    index: int
    name: str
    base_name: str
    owner: int
    move_rule: Optional["PlayRule"] = None


# ---------------------------------------------------------------------------
# Play rules
# ---------------------------------------------------------------------------

class PlayRule:
    """Base class of compiled play rules."""

    movement: Optional[int] = None


@dataclass(frozen=True)
class AddRule(PlayRule):
    """Put a piece on an empty site; `pieces` maps each player to the piece type added."""

    pieces: Mapping[int, int]
    targets: Optional[FrozenSet[int]] = None
    move_again: bool = False
    movement = Concept.ADD_MOVE


@dataclass(frozen=True)
class SlideRule(PlayRule):
    """Move a piece any distance along a direction over empty sites."""

    directions: Mapping[int, Tuple[int, ...]]
    capture: bool = False
    move_again: bool = False
    movement = Concept.SLIDE_MOVE


@dataclass(frozen=True)
class ShootRule(PlayRule):
    """Add a piece along a ray starting next to the last moved piece."""

    piece: int
    directions: Tuple[int, ...]
    move_again: bool = False
    movement = Concept.SHOOT_MOVE


@dataclass(frozen=True)
class HopRule(PlayRule):
    """Jump over an adjacent piece to the empty site behind it."""

    directions: Mapping[int, Tuple[int, ...]]
    enemy_only: bool = False
    remove: bool = False
    move_again: bool = False
    movement = Concept.HOP_MOVE


@dataclass(frozen=True)
class StepRule(PlayRule):
    """Move a piece to an adjacent site, empty or (with capture) held by an enemy."""

    directions: Mapping[int, Tuple[int, ...]]
    capture: bool = False
    move_again: bool = False
    movement = Concept.STEP_MOVE


@dataclass(frozen=True)
class RollRule(PlayRule):
    """Roll the dice and advance a piece along the track by the result."""

    pieces: Mapping[int, int]
    move_again: bool = False
    movement = Concept.ROLL_MOVE


@dataclass(frozen=True)
class ForEachPieceRule(PlayRule):
    """Every piece of the mover plays its own move rule."""
    pass


@dataclass(frozen=True)
class ParityRule(PlayRule):
    """`(if (is Even (count Moves)) A B)`: A when the completed-move count has the parity, else B."""

    even: bool
    then_rule: PlayRule
    else_rule: Optional[PlayRule] = None


@dataclass(frozen=True)
class OrRule(PlayRule):
    """Union of the moves of several rules."""

    rules: Tuple[PlayRule, ...]


# ---------------------------------------------------------------------------
# End rules
# ---------------------------------------------------------------------------

class Condition:
    """Base class of compiled end conditions."""

    @property
    def concepts(self) -> FrozenSet[int]:
        return frozenset()


@dataclass(frozen=True)
class NoMovesCondition(Condition):
    who: str = "Next"

    @property
    def concepts(self):
        return frozenset({Concept.NO_MOVES_END})


@dataclass(frozen=True)
class LineCondition(Condition):
    """A line of `length` same-owner pieces through the last move's site; axes are direction index pairs."""

    length: int
    axes: Tuple[Tuple[int, int], ...]

    @property
    def concepts(self):
        return frozenset({Concept.LINE_END})


@dataclass(frozen=True)
class ConnectedCondition(Condition):
    """
    The group of the last move's site touches enough regions.

    Either `count` distinct bits of `mask` (Sides, SidesNoCorners, Corners), or
    every bit of the mover's entry of `required` (OppositeSides).
    """

    kind: str
    count: int = 0
    mask: int = 0
    required: Mapping[int, int] = field(default_factory=dict)

    @property
    def concepts(self):
        return frozenset({Concept.CONNECTION_END})


@dataclass(frozen=True)
class LoopCondition(Condition):
    @property
    def concepts(self):
        return frozenset({Concept.LOOP_END})


@dataclass(frozen=True)
class ReachCondition(Condition):
    """A piece of the mover stands in its target region."""

    regions: Mapping[int, FrozenSet[int]]

    @property
    def concepts(self):
        return frozenset({Concept.REACH_END})


@dataclass(frozen=True)
class OrCondition(Condition):
    children: Tuple[Condition, ...]

    @property
    def concepts(self):
        return frozenset().union(*(c.concepts for c in self.children))


@dataclass(frozen=True)
class AndCondition(Condition):
    children: Tuple[Condition, ...]

    @property
    def concepts(self):
        return frozenset().union(*(c.concepts for c in self.children))


@dataclass(frozen=True)
class NotCondition(Condition):
    child: Condition

    @property
    def concepts(self):
        return self.child.concepts


@dataclass(frozen=True)
class EndRule:
    """`(if condition (result who kind))` with who in Mover/Next/Prev and kind in Win/Loss/Draw."""

    condition: Condition
    who: str
    kind: str


# ---------------------------------------------------------------------------
# Game
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GameSpec:
    """
    A playable game.

    Attributes:
        name: game name.
        num_players: number of players.
        board: the board graph.
        piece_types: expanded piece types.
        placements: (piece type index, sites) pairs of the start rules.
        play_rule: the play rule.
        end_rules: end rules in declaration order.
        no_repetition: whether the `(no Repeat)` meta rule applies.
        track: track sites in race order (dice races).
        dice_faces: faces of the die, 0 when no dice.
        jumps: track jumps (snakes and ladders), site -> site.
        track_index: site -> position on the track.
        region_masks: per site, bitmask of the regions used by connection conditions.
        add_only: pieces are only ever added (groups can be tracked incrementally).
    """

    name: str
    num_players: int
    board: BoardGraph
    piece_types: Tuple[PieceType, ...]
    placements: Tuple[Tuple[int, Tuple[int, ...]], ...]
    play_rule: PlayRule
    end_rules: Tuple[EndRule, ...]
    no_repetition: bool = False
    track: Tuple[int, ...] = ()
    dice_faces: int = 0
    jumps: Mapping[int, int] = field(default_factory=dict)
    track_index: Mapping[int, int] = field(default_factory=dict)
    region_masks: Tuple[int, ...] = ()
    add_only: bool = False

    @property
    def default_move_cap(self) -> int:
        return 2 * self.board.num_sites * self.num_players

    @property
    def uses_connection(self) -> bool:
        return bool(self.region_masks)

    def piece(self, name: str) -> PieceType:
        for piece_type in self.piece_types:
            if piece_type.name == name:
                return piece_type
        raise KeyError(name)

    def pieces_of(self, player: int) -> Tuple[PieceType, ...]:
        return tuple(p for p in self.piece_types if p.owner == player)

    def __repr__(self) -> str:
        return (
            f"GameSpec(name={self.name!r}, players={self.num_players}, board={self.board.name}, "
            f"pieces={[p.name for p in self.piece_types]})"
        )
