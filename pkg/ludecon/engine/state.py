"""
Game states.

Licensed under the Apache License, Version 2.0
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Dict, NamedTuple, Optional, Tuple

from ..compiler import GameSpec
from .unionfind import UnionFind

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class Piece(NamedTuple):
    type_index: int
    owner: int


@dataclass(frozen=True, eq=False)
class GameState:
    """
    An immutable game state; apply() returns a new one.

    Attributes:
        occupancy: per site, the piece standing on it or None.
        mover: player to move, 1-based.
        move_number: completed moves.
        move_again_pending: the last move granted its player another move.
        previous_mover: player who made the last move, 0 before the first move.
        last_from: origin of the last move, -1 if none.
        last_to: destination of the last move, -1 if none.
        seed: seed of the state's random stream (dice rolls).
        dice: last die result, 0 if none.
        history: position keys of earlier states, kept for the no-repetition rule.
        groups: same-owner groups with their region masks, for connection tests.
        cache: memoized legal moves and outcome of this state.
    """

    occupancy: Tuple[Optional[Piece], ...]
    mover: int = 1
    move_number: int = 0
    move_again_pending: bool = False
    previous_mover: int = 0
    last_from: int = -1
    last_to: int = -1
    seed: int = 0
    dice: int = 0
    history: Tuple[int, ...] = ()
    groups: Optional[UnionFind] = field(default=None, repr=False)
    cache: Dict[str, object] = field(default_factory=dict, repr=False, compare=False)

    def owner(self, site: int) -> int:
        """Owner of the piece on a site, -1 for an empty site."""
        piece = self.occupancy[site]
        return -1 if piece is None else piece.owner

    def is_empty(self, site: int) -> bool:
        return self.occupancy[site] is None

    def sites_of(self, player: int) -> Tuple[int, ...]:
        return tuple(s for s, p in enumerate(self.occupancy) if p is not None and p.owner == player)

    def empty_sites(self) -> Tuple[int, ...]:
        return tuple(s for s, p in enumerate(self.occupancy) if p is None)

    def count_pieces(self, player: Optional[int] = None) -> int:
        if player is None:
            return sum(p is not None for p in self.occupancy)
        return len(self.sites_of(player))

    def position_key(self) -> int:
        return hash((self.occupancy, self.mover))

    def with_mover(self, player: int) -> "GameState":
        """The same position with another player to move (used by `(no Moves Mover)`)."""
        return replace(self, mover=player, move_again_pending=False, cache={})

    def __repr__(self) -> str:
        return (
            f"GameState(move_number={self.move_number}, mover={self.mover}, "
            f"pieces={self.count_pieces()}, pending={self.move_again_pending})"
        )


def next_player(spec: GameSpec, player: int) -> int:
    return player % spec.num_players + 1


def previous_player(spec: GameSpec, player: int) -> int:
    return (player - 2) % spec.num_players + 1


def tracks_groups(spec: GameSpec) -> bool:
    """Groups are maintained incrementally only for connection games where pieces never move or leave."""
    return spec.uses_connection and spec.add_only


def link_site(spec: GameSpec, groups: UnionFind, occupancy, site: int) -> None:
    """Register a newly added piece in the union-find and merge it with same-owner neighbours."""
    owner = occupancy[site].owner
    groups.add(site, spec.region_masks[site])
    for other in spec.board.neighbours(site):
        piece = occupancy[other]
        if piece is not None and piece.owner == owner:
            groups.union(site, other)


def initial_state(spec: GameSpec, seed: int = 0) -> GameState:
    """
    Apply the start rules: placements, player 1 to move, no move made.

    Args:
        spec: compiled game.
        seed: seed of the state's random stream.

    Returns:
        GameState
    """
    occupancy = [None] * spec.board.num_sites
    for piece_index, sites in spec.placements:
        piece_type = spec.piece_types[piece_index]
        for site in sites:
            occupancy[site] = Piece(piece_index, piece_type.owner)
    groups = None
    if tracks_groups(spec):
        groups = UnionFind(spec.board.num_sites)
        for site, piece in enumerate(occupancy):
            if piece is not None:
                link_site(spec, groups, occupancy, site)
    state = GameState(occupancy=tuple(occupancy), seed=int(seed), groups=groups)
    if spec.no_repetition:
        state = replace(state, history=(state.position_key(),), cache={})
    logger.debug(f"Initial state of {spec.name!r}: {state.count_pieces()} pieces")
    return state


def apply_actions(occupancy: list, actions, dice: int = 0) -> Tuple[bool, int]:
    """
    Apply atomic actions in order to a mutable occupancy list.

    Returns:
        (move_again, dice): whether the mover plays again, and the last die result.
    """
    move_again = False
    for action in actions:
        kind = action.kind
        if kind == "AddPiece":
            occupancy[action.site] = Piece(action.piece, action.owner)
        elif kind == "RemovePiece":
            occupancy[action.site] = None
        elif kind == "MovePiece":
            occupancy[action.to_site] = occupancy[action.from_site]
            occupancy[action.from_site] = None
        elif kind == "SetMoveAgain":
            move_again = True
        elif kind == "SetDiceResult":
            dice = action.value
    return move_again, dice
