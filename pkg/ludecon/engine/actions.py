"""
Atomic actions, moves, move lists and outcomes.

A move is an ordered sequence of atomic actions plus the concepts it triggers.
Every action tuple carries its kind as last field so that two actions of
different kinds never compare equal.

Licensed under the Apache License, Version 2.0
"""
from dataclasses import dataclass, field
from typing import FrozenSet, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..concepts import Concept, lookup


class AddPiece(NamedTuple):
    site: int
    piece: int
    owner: int
    kind: str = "AddPiece"


class RemovePiece(NamedTuple):
    site: int
    kind: str = "RemovePiece"


class MovePiece(NamedTuple):
    from_site: int
    to_site: int
    kind: str = "MovePiece"


class SetMoveAgain(NamedTuple):
    kind: str = "SetMoveAgain"


class SetDiceResult(NamedTuple):
    value: int
    kind: str = "SetDiceResult"


AtomicAction = Union[AddPiece, RemovePiece, MovePiece, SetMoveAgain, SetDiceResult]

OFF_BOARD = -1


@dataclass(frozen=True)
class Move:
    """
    Attributes:
        actions: atomic actions, applied in order.
        tags: ids of the binary concepts the move triggers.
        from_site: site the moved piece leaves (-1 for additions and rolls without a piece).
        to_site: site where the move ends (-1 when no piece moves).
    """

    actions: Tuple[AtomicAction, ...]
    tags: FrozenSet[int]
    from_site: int = OFF_BOARD
    to_site: int = OFF_BOARD

    @property
    def sort_key(self) -> Tuple[int, int]:
        return self.from_site, self.to_site

    @property
    def movement(self) -> Optional[int]:
        """The movement-type concept of the move."""
        for concept in (Concept.ADD_MOVE, Concept.SLIDE_MOVE, Concept.SHOOT_MOVE,
                        Concept.HOP_MOVE, Concept.STEP_MOVE, Concept.ROLL_MOVE):
            if concept in self.tags:
                return int(concept)
        return None

    @property
    def move_again(self) -> bool:
        return any(action.kind == "SetMoveAgain" for action in self.actions)

    def tag_names(self) -> List[str]:
        return [lookup(t).name for t in sorted(self.tags)]


class MoveList(Sequence):
    """
    Legal moves of a state in canonical order: by (from, to), then generation order.

    Additions of a single piece kind (the bulk of the moves in placement games)
    are kept as a lazy segment of target sites and only turned into Move objects
    when indexed.
    """

    __slots__ = ("_add_sites", "_add_template", "_moves")

    def __init__(
        self,
        moves: Sequence[Move] = (),
        add_sites: Sequence[int] = (),
        add_template: Optional[Tuple[int, int, FrozenSet[int], bool]] = None,
    ):
        self._add_sites = tuple(add_sites)
        # (piece, owner, tags, move_again)
        self._add_template = add_template
        self._moves = tuple(sorted(moves, key=lambda m: m.sort_key))
        if self._add_sites and self._add_template is None:
            raise ValueError("Lazy additions need a template")

    @property
    def k(self) -> int:
        """Branching count of the state."""
        return len(self)

    def __len__(self) -> int:
        return len(self._add_sites) + len(self._moves)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [self[i] for i in range(*index.indices(len(self)))]
        n_add = len(self._add_sites)
        if index < 0:
            index += len(self)
        if not 0 <= index < len(self):
            raise IndexError("move index out of range")
        if index < n_add:
            return self._addition(self._add_sites[index])
        return self._moves[index - n_add]

    def _addition(self, site: int) -> Move:
        piece, owner, tags, move_again = self._add_template
        actions = (AddPiece(site, piece, owner),)
        if move_again:
            actions += (SetMoveAgain(),)
        return Move(actions, tags, OFF_BOARD, site)

    def __contains__(self, move) -> bool:
        if not isinstance(move, Move):
            return False
        if self._add_sites and move.from_site == OFF_BOARD and move.to_site in self._add_sites:
            if move == self._addition(move.to_site):
                return True
        return move in self._moves

    def filter(self, keep) -> "MoveList":
        """A materialized MoveList of the moves for which keep(move) is true."""
        return MoveList([m for m in self if keep(m)])

    def __repr__(self) -> str:
        return f"MoveList(k={len(self)})"


@dataclass(frozen=True)
class Outcome:
    """
    How a game ended.

    Attributes:
        winner: winning player, None for a draw.
        tags: end concepts of the rule that fired; a draw carries Draw Possible.
        rule: index of the end rule that fired, None when the game ended because the mover was stuck.
    """

    winner: Optional[int]
    tags: FrozenSet[int] = field(default_factory=frozenset)
    rule: Optional[int] = None

    @property
    def is_draw(self) -> bool:
        return self.winner is None

    @property
    def kind(self) -> str:
        return "Draw" if self.is_draw else "Win"

    def describe(self) -> str:
        names = ", ".join(lookup(t).name for t in sorted(self.tags))
        result = "Draw" if self.is_draw else f"Win P{self.winner}"
        return f"{result} [{names}]"
