"""
Public engine operations: legal moves, move application, outcomes and traces.

Licensed under the Apache License, Version 2.0
"""
import logging
from typing import Optional

from ..compiler import GameSpec
from ..validation.exceptions import IllegalMoveError, TerminalStateError
from .actions import Move, MoveList, Outcome
from .end_rules import evaluate_outcome
from .generation import generate_moves
from .state import GameState, apply_actions, link_site, next_player

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

_UNSET = object()


def outcome(spec: GameSpec, state: GameState) -> Optional[Outcome]:
    """
    How the game ended in `state`, None while it goes on.

    End rules are tried in declaration order and the first satisfied one decides.
    When none fires and the mover has no legal move, the game is a draw.
    """
    found = state.cache.get("outcome", _UNSET)
    if found is _UNSET:
        found = state.cache["outcome"] = evaluate_outcome(spec, state)
    return found


def is_terminal(spec: GameSpec, state: GameState) -> bool:
    return outcome(spec, state) is not None


def legal_moves(spec: GameSpec, state: GameState) -> MoveList:
    """
    Legal moves of the mover, tagged with the concepts they trigger.

    Raises:
        TerminalStateError: the game is already over.
    """
    if outcome(spec, state) is not None:
        raise TerminalStateError(
            f"{spec.name!r} is over after {state.move_number} moves: {outcome(spec, state).describe()}"
        )
    return generate_moves(spec, state)


def apply(spec: GameSpec, state: GameState, move: Move, check: bool = False) -> GameState:
    """
    Play a move: its actions in order, then the turn passes unless the move grants another.

    The given state is never modified.

    Args:
        spec: compiled game.
        state: state to play from.
        move: one of legal_moves(spec, state).
        check: verify that the game goes on and that the move is legal.

    Returns:
        GameState

    Raises:
        TerminalStateError: with `check`, the game is already over.
        IllegalMoveError: with `check`, the move is not legal in `state`.
    """
    if check:
        moves = legal_moves(spec, state)
        if move not in moves:
            raise IllegalMoveError(
                f"Move {describe_move(spec, state, move)!r} is not among the {len(moves)} legal moves of {state!r}"
            )
    occupancy = list(state.occupancy)
    move_again, dice = apply_actions(occupancy, move.actions, state.dice)
    groups = state.groups
    if groups is not None:
        added = [a.site for a in move.actions if a.kind == "AddPiece"]
        if added:
            groups = groups.copy()
            for site in added:
                link_site(spec, groups, occupancy, site)
    mover = state.mover if move_again else next_player(spec, state.mover)
    occupancy = tuple(occupancy)
    history = state.history
    if spec.no_repetition:
        history = history + (hash((occupancy, mover)),)
    return GameState(
        occupancy=occupancy,
        mover=mover,
        move_number=state.move_number + 1,
        move_again_pending=move_again,
        previous_mover=state.mover,
        last_from=move.from_site,
        last_to=move.to_site,
        seed=state.seed,
        dice=dice,
        history=history,
        groups=groups,
    )


def _site(spec: GameSpec, site: int) -> str:
    return spec.board.label(site) if site >= 0 else "-"


def describe_action(spec: GameSpec, action) -> str:
    kind = action.kind
    if kind == "AddPiece":
        return f"Add({spec.piece_types[action.piece].name}@{_site(spec, action.site)})"
    if kind == "RemovePiece":
        return f"Remove({_site(spec, action.site)})"
    if kind == "MovePiece":
        return f"Move({_site(spec, action.from_site)}->{_site(spec, action.to_site)})"
    if kind == "SetDiceResult":
        return f"Dice({action.value})"
    return "MoveAgain"


def describe_move(spec: GameSpec, state: GameState, move: Move) -> str:
    """
    One trace line: move number, mover, from->to, actions and concept tags.

    Example:
        "1 P1 D1->D7 Move(D1->D7),MoveAgain [Slide Move, Move Again]"
    """
    actions = ",".join(describe_action(spec, a) for a in move.actions)
    tags = ", ".join(move.tag_names())
    return (
        f"{state.move_number + 1} P{state.mover} "
        f"{_site(spec, move.from_site)}->{_site(spec, move.to_site)} {actions} [{tags}]"
    )
