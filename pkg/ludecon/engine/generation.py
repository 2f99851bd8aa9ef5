"""
Legal move generation.

Each generated move carries the concepts it triggers: exactly one movement
concept (Add, Slide, Shoot, Hop, Step or Roll) plus the effects it has
(Remove Effect, Capture, Hop Capture, Replacement Capture, Move Again).

Licensed under the Apache License, Version 2.0
"""
import logging
from typing import List, Optional

import numpy as np

from ..compiler import (
    NEUTRAL,
    AddRule,
    ForEachPieceRule,
    GameSpec,
    HopRule,
    OrRule,
    ParityRule,
    RollRule,
    ShootRule,
    SlideRule,
    StepRule,
)
from ..concepts import Concept
from .actions import OFF_BOARD, AddPiece, Move, MoveList, MovePiece, RemovePiece, SetDiceResult, SetMoveAgain
from .state import GameState, apply_actions, next_player

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

_ADD = frozenset({int(Concept.ADD_MOVE)})
_CAPTURE = (int(Concept.CAPTURE),)


def _tags(movement, move_again: bool, *effects) -> frozenset:
    tags = {int(movement), *(int(e) for e in effects)}
    if move_again:
        tags.add(int(Concept.MOVE_AGAIN))
    return frozenset(tags)


def _finish(actions: tuple, move_again: bool) -> tuple:
    return actions + (SetMoveAgain(),) if move_again else actions


def is_enemy(state: GameState, site: int, player: int) -> bool:
    owner = state.owner(site)
    return owner not in (-1, NEUTRAL, player)


def roll_die(spec: GameSpec, state: GameState) -> int:
    """Die result of a state: drawn from a stream seeded by the state's seed and move number."""
    rng = np.random.default_rng([state.seed, state.move_number])
    return int(rng.integers(1, spec.dice_faces + 1))


def select_rule(rule, state: GameState):
    """Resolve parity guards against the completed-move count."""
    while isinstance(rule, ParityRule):
        even = state.move_number % 2 == 0
        rule = rule.then_rule if even == rule.even else rule.else_rule
    return rule


class _Generator:
    def __init__(self, spec: GameSpec, state: GameState):
        self.spec = spec
        self.state = state
        self.board = spec.board
        self.player = state.mover
        self.moves: List[Move] = []

    def origins(self, origin: Optional[int]):
        if origin is not None:
            return (origin,)
        return self.state.sites_of(self.player)

    def collect(self, rule, origin: Optional[int] = None) -> None:
        rule = select_rule(rule, self.state)
        if rule is None:
            return
        if isinstance(rule, OrRule):
            for child in rule.rules:
                self.collect(child, origin)
        elif isinstance(rule, ForEachPieceRule):
            for site in self.state.sites_of(self.player):
                move_rule = self.spec.piece_types[self.state.occupancy[site].type_index].move_rule
                if move_rule is not None:
                    self.collect(move_rule, site)
        elif isinstance(rule, AddRule):
            self.add(rule)
        elif isinstance(rule, SlideRule):
            self.slide(rule, origin)
        elif isinstance(rule, ShootRule):
            self.shoot(rule)
        elif isinstance(rule, HopRule):
            self.hop(rule, origin)
        elif isinstance(rule, StepRule):
            self.step(rule, origin)
        elif isinstance(rule, RollRule):
            self.roll(rule)
        else:
            raise TypeError(f"Unknown play rule {rule!r}")

    def add(self, rule: AddRule) -> None:
        piece = rule.pieces.get(self.player)
        if piece is None:
            return
        owner = self.spec.piece_types[piece].owner
        tags = _tags(Concept.ADD_MOVE, rule.move_again)
        for site in add_targets(rule, self.state):
            self.moves.append(Move(_finish((AddPiece(site, piece, owner),), rule.move_again), tags, OFF_BOARD, site))

    def slide(self, rule: SlideRule, origin: Optional[int]) -> None:
        state, table = self.state, self.board.step_table
        plain = _tags(Concept.SLIDE_MOVE, rule.move_again)
        taking = _tags(Concept.SLIDE_MOVE, rule.move_again, Concept.REPLACEMENT_CAPTURE, *_CAPTURE)
        for start in self.origins(origin):
            for column in rule.directions.get(self.player, ()):
                current = table[start][column]
                while current >= 0 and state.occupancy[current] is None:
                    self.moves.append(Move(_finish((MovePiece(start, current),), rule.move_again), plain, start, current))
                    current = table[current][column]
                if rule.capture and current >= 0 and is_enemy(state, current, self.player):
                    actions = (RemovePiece(current), MovePiece(start, current))
                    self.moves.append(Move(_finish(actions, rule.move_again), taking, start, current))

    def shoot(self, rule: ShootRule) -> None:
        state, table = self.state, self.board.step_table
        start = state.last_to
        if start < 0 or state.occupancy[start] is None:
            return
        owner = self.spec.piece_types[rule.piece].owner
        tags = _tags(Concept.SHOOT_MOVE, rule.move_again)
        for column in rule.directions:
            current = table[start][column]
            while current >= 0 and state.occupancy[current] is None:
                actions = (AddPiece(current, rule.piece, owner),)
                self.moves.append(Move(_finish(actions, rule.move_again), tags, start, current))
                current = table[current][column]

    def hop(self, rule: HopRule, origin: Optional[int]) -> None:
        state, table = self.state, self.board.step_table
        for start in self.origins(origin):
            for column in rule.directions.get(self.player, ()):
                over = table[start][column]
                if over < 0 or state.occupancy[over] is None:
                    continue
                enemy = is_enemy(state, over, self.player)
                if rule.enemy_only and not enemy:
                    continue
                landing = table[over][column]
                if landing < 0 or state.occupancy[landing] is not None:
                    continue
                actions = (MovePiece(start, landing),)
                effects = ()
                if rule.remove:
                    actions += (RemovePiece(over),)
                    effects = (Concept.REMOVE_EFFECT,)
                    if enemy:
                        effects += (Concept.HOP_CAPTURE, Concept.CAPTURE)
                tags = _tags(Concept.HOP_MOVE, rule.move_again, *effects)
                self.moves.append(Move(_finish(actions, rule.move_again), tags, start, landing))

    def step(self, rule: StepRule, origin: Optional[int]) -> None:
        state, table = self.state, self.board.step_table
        plain = _tags(Concept.STEP_MOVE, rule.move_again)
        taking = _tags(Concept.STEP_MOVE, rule.move_again, Concept.REPLACEMENT_CAPTURE, *_CAPTURE)
        for start in self.origins(origin):
            for column in rule.directions.get(self.player, ()):
                target = table[start][column]
                if target < 0:
                    continue
                if state.occupancy[target] is None:
                    self.moves.append(Move(_finish((MovePiece(start, target),), rule.move_again), plain, start, target))
                elif rule.capture and is_enemy(state, target, self.player):
                    actions = (RemovePiece(target), MovePiece(start, target))
                    self.moves.append(Move(_finish(actions, rule.move_again), taking, start, target))

    def roll(self, rule: RollRule) -> None:
        """
        Advance a piece along the track by a die roll; a player without a piece on the
        track enters one. Landing beyond the end or on an occupied site leaves the piece
        in place, the roll being the whole move.
        """
        spec, state = self.spec, self.state
        piece = rule.pieces.get(self.player)
        if piece is None:
            return
        value = roll_die(spec, state)
        roll = SetDiceResult(value)
        tags = _tags(Concept.ROLL_MOVE, rule.move_again)
        on_track = [
            site for site in state.sites_of(self.player)
            if site in spec.track_index and state.occupancy[site].type_index == piece
        ]
        starts = on_track or [OFF_BOARD]
        found = []
        for start in starts:
            index = (spec.track_index[start] if start >= 0 else -1) + value
            if index >= len(spec.track):
                continue
            target = spec.track[index]
            final = spec.jumps.get(target, target)
            if state.occupancy[target] is not None or (final != start and state.occupancy[final] is not None):
                continue
            if start >= 0:
                actions = (roll, MovePiece(start, target))
            else:
                actions = (roll, AddPiece(target, piece, self.player))
            if final != target:
                actions += (MovePiece(target, final),)
            found.append(Move(_finish(actions, rule.move_again), tags, start, final))
        if not found:
            found.append(Move(_finish((roll,), rule.move_again), tags, OFF_BOARD, OFF_BOARD))
        self.moves.extend(found)


def add_targets(rule: AddRule, state: GameState):
    if rule.targets is None:
        return state.empty_sites()
    return tuple(s for s in sorted(rule.targets) if state.occupancy[s] is None)


def _repeats(spec: GameSpec, state: GameState, move: Move) -> bool:
    occupancy = list(state.occupancy)
    move_again, _ = apply_actions(occupancy, move.actions, state.dice)
    mover = state.mover if move_again else next_player(spec, state.mover)
    return hash((tuple(occupancy), mover)) in state.history


def generate_moves(spec: GameSpec, state: GameState) -> MoveList:
    """
    Every legal move of the mover, without checking whether the game is over.

    The list is memoized on the state.

    Returns:
        MoveList in canonical order.
    """
    cached = state.cache.get("moves")
    if cached is None:
        cached = state.cache["moves"] = _generate(spec, state)
    return cached


def _generate(spec: GameSpec, state: GameState) -> MoveList:
    rule = select_rule(spec.play_rule, state)
    if rule is None:
        return MoveList()
    if isinstance(rule, AddRule) and not spec.no_repetition:
        piece = rule.pieces.get(state.mover)
        if piece is None:
            return MoveList()
        owner = spec.piece_types[piece].owner
        tags = _ADD | ({int(Concept.MOVE_AGAIN)} if rule.move_again else set())
        return MoveList(
            add_sites=add_targets(rule, state),
            add_template=(piece, owner, frozenset(tags), rule.move_again),
        )
    generator = _Generator(spec, state)
    generator.collect(rule)
    moves = generator.moves
    if spec.no_repetition:
        moves = [m for m in moves if not _repeats(spec, state, m)]
    return MoveList(moves)
