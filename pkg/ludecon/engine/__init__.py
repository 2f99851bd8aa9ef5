"""
Game engine: states, tagged legal moves, atomic actions and end rules.

Licensed under the Apache License, Version 2.0
"""
from .actions import (
    AddPiece,
    Move,
    MoveList,
    MovePiece,
    Outcome,
    RemovePiece,
    SetDiceResult,
    SetMoveAgain,
)
from .end_rules import group_mask, is_loop, line_length
from .game import apply, describe_move, is_terminal, legal_moves, outcome
from .generation import roll_die
from .state import GameState, Piece, initial_state, next_player
from .unionfind import UnionFind

__all__ = [
    "AddPiece",
    "Move",
    "MoveList",
    "MovePiece",
    "Outcome",
    "RemovePiece",
    "SetDiceResult",
    "SetMoveAgain",
    "group_mask",
    "is_loop",
    "line_length",
    "apply",
    "describe_move",
    "is_terminal",
    "legal_moves",
    "outcome",
    "roll_die",
    "GameState",
    "Piece",
    "initial_state",
    "next_player",
    "UnionFind",
]
