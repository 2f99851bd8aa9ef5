"""
End-rule evaluation: no moves, lines, connections, loops and reached regions.

Conditions are evaluated from the point of view of the player who made the
last move, on the site where that move ended.

Licensed under the Apache License, Version 2.0
"""
import logging
from typing import FrozenSet, Optional

from ..board import BoardGraph
from ..compiler import (
    AndCondition,
    ConnectedCondition,
    GameSpec,
    LineCondition,
    LoopCondition,
    NoMovesCondition,
    NotCondition,
    OrCondition,
    ReachCondition,
)
from ..concepts import Concept
from .actions import Outcome
from .generation import generate_moves
from .state import GameState, next_player, previous_player

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

DRAW_TAGS = frozenset({int(Concept.DRAW_POSSIBLE)})


def line_length(board: BoardGraph, state: GameState, site: int, axis) -> int:
    """Length of the run of same-owner pieces through `site` along a pair of opposite directions."""
    owner = state.owner(site)
    table = board.step_table
    length = 1
    for column in axis:
        current = table[site][column]
        while current >= 0 and state.owner(current) == owner:
            length += 1
            current = table[current][column]
    return length


def group_mask(spec: GameSpec, state: GameState, site: int) -> int:
    """Regions touched by the group of `site`: union-find when tracked, flood fill otherwise."""
    if state.groups is not None:
        return state.groups.group_mask(site)
    owner = state.owner(site)
    masks = spec.region_masks
    seen = {site}
    frontier = [site]
    mask = 0
    while frontier:
        current = frontier.pop()
        mask |= masks[current]
        for other in spec.board.neighbours(current):
            if other not in seen and state.owner(other) == owner:
                seen.add(other)
                frontier.append(other)
    return mask


def is_loop(board: BoardGraph, state: GameState, site: int, player: Optional[int] = None) -> bool:
    """
    Whether the group of `player` through `site` forms a ring enclosing at least one site.

    Enclosed sites may be empty or hold pieces of either player, including
    pieces of the ring's own group. A neighbour of `site` is enclosed when it
    cannot reach the board boundary through sites outside the group (the
    neighbour itself excepted).
    """
    if site < 0:
        return False
    if player is None:
        player = state.owner(site)
    if state.owner(site) != player:
        return False
    group = {site}
    frontier = [site]
    while frontier:
        current = frontier.pop()
        for other in board.neighbours(current):
            if other not in group and state.owner(other) == player:
                group.add(other)
                frontier.append(other)
    boundary = board.boundary
    # outside the group first: what they reach stays open once walls are removed
    starts = sorted(board.neighbours(site), key=lambda n: n in group)
    escaped = set()
    for start in starts:
        if start in boundary or start in escaped:
            continue
        inside = start in group
        seen = {start}
        frontier = [start]
        opened = False
        while frontier:
            current = frontier.pop()
            if current in boundary or current in escaped:
                opened = True
                break
            for other in board.neighbours(current):
                if other not in seen and other not in group:
                    seen.add(other)
                    frontier.append(other)
        if not opened:
            return True
        if not inside:
            escaped |= seen
    return False


def _popcount(value: int) -> int:
    return bin(value).count("1")


def condition_tags(spec: GameSpec, state: GameState, condition, player: int) -> Optional[FrozenSet[int]]:
    """
    End concepts of a satisfied condition, None when it does not hold.

    `or` reports the first satisfied child only, so one rule firing yields one end concept.
    """
    site = state.last_to
    if isinstance(condition, OrCondition):
        for child in condition.children:
            tags = condition_tags(spec, state, child, player)
            if tags is not None:
                return tags
        return None
    if isinstance(condition, AndCondition):
        found = frozenset()
        for child in condition.children:
            tags = condition_tags(spec, state, child, player)
            if tags is None:
                return None
            found |= tags
        return found
    if isinstance(condition, NotCondition):
        if condition_tags(spec, state, condition.child, player) is None:
            return condition.child.concepts
        return None
    if isinstance(condition, NoMovesCondition):
        target = state if condition.who == "Next" else state.with_mover(player)
        return condition.concepts if len(generate_moves(spec, target)) == 0 else None
    if isinstance(condition, ReachCondition):
        regions = condition.regions.get(player, ())
        if any(state.owner(s) == player for s in regions):
            return condition.concepts
        return None
    if site < 0 or state.owner(site) != player:
        return None
    if isinstance(condition, LineCondition):
        if any(line_length(spec.board, state, site, axis) >= condition.length for axis in condition.axes):
            return condition.concepts
        return None
    if isinstance(condition, ConnectedCondition):
        mask = group_mask(spec, state, site)
        if condition.kind == "OppositeSides":
            required = condition.required.get(player, 0)
            satisfied = bool(required) and mask & required == required
        else:
            satisfied = _popcount(mask & condition.mask) >= condition.count
        return condition.concepts if satisfied else None
    if isinstance(condition, LoopCondition):
        return condition.concepts if is_loop(spec.board, state, site, player) else None
    raise TypeError(f"Unknown end condition {condition!r}")


def _relative(spec: GameSpec, who: str, player: int) -> int:
    if who == "Next":
        return next_player(spec, player)
    if who == "Prev":
        return previous_player(spec, player)
    return player


def end_rules_outcome(spec: GameSpec, state: GameState) -> Optional[Outcome]:
    """
    First end rule satisfied after a completed turn.

    Rules are not evaluated between the parts of a turn (while a move-again is pending),
    nor before the first move.
    """
    if state.move_number == 0 or state.move_again_pending:
        return None
    player = state.previous_mover
    for index, rule in enumerate(spec.end_rules):
        tags = condition_tags(spec, state, rule.condition, player)
        if tags is None:
            continue
        who = _relative(spec, rule.who, player)
        if rule.kind == "Draw":
            return Outcome(None, DRAW_TAGS, index)
        if rule.kind == "Loss":
            winner = next_player(spec, who) if spec.num_players > 1 else None
            return Outcome(winner, tags if winner is not None else DRAW_TAGS, index)
        return Outcome(who, tags, index)
    return None


def evaluate_outcome(spec: GameSpec, state: GameState) -> Optional[Outcome]:
    """End rules in declaration order; a mover left without moves ends the game in a draw."""
    found = end_rules_outcome(spec, state)
    if found is not None:
        return found
    if len(generate_moves(spec, state)) == 0:
        return Outcome(None, DRAW_TAGS, None)
    return None
