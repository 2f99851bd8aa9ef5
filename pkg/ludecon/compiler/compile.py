"""
Compilation of the playable ludeme subset into a GameSpec.

Licensed under the Apache License, Version 2.0
"""
import logging
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..board import OPPOSITE, BoardGraph
from ..language import LudemeNode, NodeKind
from ..validation.exceptions import NotAGameError, SemanticError, UnsupportedLudemeError
from .equipment import build_board, find_board_node, is_empty_sites, resolve_sites
from .scan import game_name
from .spec import (
    NEUTRAL,
    AddRule,
    AndCondition,
    Condition,
    ConnectedCondition,
    EndRule,
    ForEachPieceRule,
    GameSpec,
    HopRule,
    LineCondition,
    LoopCondition,
    NoMovesCondition,
    NotCondition,
    OrCondition,
    OrRule,
    ParityRule,
    PieceType,
    PlayRule,
    ReachCondition,
    RollRule,
    ShootRule,
    SlideRule,
    StepRule,
)

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

# head -> allowed qualifiers (None: any)
SUPPORTED = {
    "game": None, "players": None, "equipment": None, "board": None,
    "square": None, "rectangle": None, "hex": None,
    "piece": None, "dice": None, "track": None, "map": None, "pair": None, "regions": None,
    "rules": None, "meta": None, "start": None, "place": None, "play": None, "end": None,
    "move": frozenset({"Add", "Slide", "Shoot", "Hop", "Step", "Roll"}),
    "then": None, "moveAgain": None, "if": None,
    "is": frozenset({"Even", "Odd", "Line", "Connected", "Loop", "Reach", "Enemy"}),
    "count": frozenset({"Moves"}),
    "forEach": frozenset({"Piece"}),
    "sites": None, "to": None, "result": None, "remove": None,
    "no": frozenset({"Moves", "Repeat"}),
    "or": None, "and": None, "not": None,
}
DIRECTION_NAMES = frozenset(
    {"All", "Orthogonal", "Diagonal", "Forward", "Backward", "ForwardDiagonal",
     "N", "NE", "E", "SE", "S", "SW", "W", "NW"}
)
_PLAYERS_WHO = frozenset({"Mover", "Next", "Prev"})
_RESULTS = frozenset({"Win", "Loss", "Draw"})


def unsupported_ludemes(tree: LudemeNode) -> List[Tuple[str, object]]:
    """Every constructor outside the playable subset, as (label, span) in source order."""
    found = []
    for node in tree.constructors():
        allowed = SUPPORTED.get(node.head, False)
        if allowed is False or (allowed is not None and node.qualifier not in allowed):
            found.append((node.label, node.span))
    return found


def _children(node: LudemeNode) -> Tuple[LudemeNode, ...]:
    """Constructor children, looking through sets: `(x {(a) (b)})` and `(x (a) (b))` alike."""
    items = []
    for child in node.children:
        if child.is_set:
            items.extend(c for c in child.children if c.is_constructor)
        elif child.is_constructor:
            items.append(child)
    return tuple(items)


class _Compiler:
    def __init__(self, tree: LudemeNode):
        self.tree = tree
        self.name = game_name(tree)
        self.num_players = 0
        self.board: Optional[BoardGraph] = None
        self.piece_types: List[PieceType] = []
        self.player_regions: Dict[int, Tuple[int, ...]] = {}
        self.track: Tuple[int, ...] = ()
        self.track_name: Optional[str] = None
        self.dice_faces = 0
        self.jumps: Dict[int, int] = {}
        self.region_bits: Dict[Tuple[str, str], int] = {}
        self.region_sites: List[FrozenSet[int]] = []

    # -- helpers -----------------------------------------------------------

    @property
    def players(self) -> range:
        return range(1, self.num_players + 1)

    def piece_index(self, name: str, node: LudemeNode) -> int:
        for piece_type in self.piece_types:
            if piece_type.name == name:
                return piece_type.index
        known = ", ".join(p.name for p in self.piece_types)
        raise SemanticError(f"Unknown piece {name!r}. Known pieces: {known}", node.span)

    def first_piece_of(self, player: int, node: LudemeNode) -> int:
        for piece_type in self.piece_types:
            if piece_type.owner == player:
                return piece_type.index
        raise SemanticError(f"Player {player} has no piece to play", node.span)

    def direction_indices(self, name: str, player: int) -> Tuple[int, ...]:
        return tuple(self.board.directions.index(d) for d in self.board.direction_class(name, player))

    def directions_for(self, node: LudemeNode, owner: Optional[int]) -> Dict[int, Tuple[int, ...]]:
        name = next(
            (c.value for c in node.children[1:] if c.is_symbol() and c.value in DIRECTION_NAMES),
            "All",
        )
        players = (owner,) if owner else tuple(self.players)
        return {p: self.direction_indices(name, p) for p in players}

    @staticmethod
    def then_move_again(node: LudemeNode) -> bool:
        return any(n.is_head("moveAgain") for then in node.constructors("then") for n in then.walk())

    @staticmethod
    def has_enemy_marker(node: LudemeNode) -> bool:
        return any(n.is_head("is", "Enemy") for n in node.walk())

    def region_bit(self, key: Tuple[str, str], sites: FrozenSet[int]) -> int:
        if key not in self.region_bits:
            self.region_bits[key] = 1 << len(self.region_sites)
            self.region_sites.append(sites)
        return self.region_bits[key]

    # -- sections ----------------------------------------------------------

    def compile(self) -> GameSpec:
        players = self.tree.child("players")
        numbers = players.literals() if players is not None else ()
        if not numbers or not isinstance(numbers[0], int) or numbers[0] < 1:
            raise SemanticError("(players n) with n >= 1 is required", getattr(players, "span", None))
        self.num_players = numbers[0]

        shape = find_board_node(self.tree)
        if shape is None:
            raise SemanticError("The equipment has no board", self.tree.span)
        self.board = build_board(shape)
        if self.board is None:
            raise UnsupportedLudemeError([(shape.label, shape.span)])

        equipment = self.tree.child("equipment")
        items = _children(equipment) if equipment is not None else ()
        for item in items:
            if item.head == "piece":
                self.declare_piece(item)
        for item in items:
            if item.head == "dice":
                numbers = item.literals()
                self.dice_faces = int(numbers[0]) if numbers and isinstance(numbers[0], int) else 6
            elif item.head == "track":
                self.declare_track(item)
        for item in items:
            if item.head == "map":
                self.declare_map(item)
            elif item.head == "regions":
                self.declare_regions(item)
        # piece move rules need the track and regions
        self.piece_types = [self.with_move_rule(p, items) for p in self.piece_types]

        rules = self.tree.child("rules")
        if rules is None:
            raise SemanticError("The description has no (rules ...)", self.tree.span)
        placements = []
        start = rules.child("start")
        if start is not None:
            for place in _children(start):
                placements.append(self.compile_place(place))
        play = rules.child("play")
        play_nodes = _children(play) if play is not None else ()
        if len(play_nodes) != 1:
            raise SemanticError("(play ...) needs exactly one rule", getattr(play, "span", rules.span))
        play_rule = self.compile_play(play_nodes[0], None)
        end = rules.child("end")
        end_rules = tuple(self.compile_end(node) for node in _children(end)) if end is not None else ()
        meta = rules.child("meta")
        no_repetition = meta is not None and meta.contains("no", "Repeat")

        region_masks = ()
        if self.region_sites:
            region_masks = tuple(
                sum(bit for bit, sites in zip(self.region_bits.values(), self.region_sites) if site in sites)
                for site in self.board.sites
            )
        spec = GameSpec(
            name=self.name,
            num_players=self.num_players,
            board=self.board,
            piece_types=tuple(self.piece_types),
            placements=tuple(placements),
            play_rule=play_rule,
            end_rules=end_rules,
            no_repetition=no_repetition,
            track=self.track,
            dice_faces=self.dice_faces,
            jumps=dict(self.jumps),
            track_index={site: i for i, site in enumerate(self.track)},
            region_masks=region_masks,
            add_only=self.is_add_only(play_rule),
        )
        logger.debug(f"Compiled {spec!r}")
        return spec

    def declare_piece(self, node: LudemeNode) -> None:
        literals = node.children
        if len(literals) < 2 or literals[0].kind is not NodeKind.STRING or not literals[1].is_symbol():
            raise SemanticError('(piece "Name" <owner> ...) expected', node.span)
        base, owner = literals[0].value, literals[1].value
        if owner == "Each":
            owners = list(self.players)
        elif owner == "Neutral":
            owners = [NEUTRAL]
        elif owner.startswith("P") and owner[1:].isdigit() and 1 <= int(owner[1:]) <= self.num_players:
            owners = [int(owner[1:])]
        else:
            raise SemanticError(f"Unknown piece owner {owner!r}", node.span)
        for player in owners:
            self.piece_types.append(
                PieceType(index=len(self.piece_types), name=f"{base}{player}", base_name=base, owner=player)
            )

    def with_move_rule(self, piece_type: PieceType, items) -> PieceType:
        for item in items:
            if item.head != "piece" or item.children[0].value != piece_type.base_name:
                continue
            rules = [c for c in item.children[2:] if c.is_constructor]
            if rules and piece_type.owner != NEUTRAL:
                rule = self.compile_play(rules[0], piece_type.owner)
                return PieceType(piece_type.index, piece_type.name, piece_type.base_name, piece_type.owner, rule)
        return piece_type

    def declare_track(self, node: LudemeNode) -> None:
        kind = next((c.value for c in node.children if c.is_symbol()), "Boustrophedon")
        self.track_name = next((c.value for c in node.children if c.kind is NodeKind.STRING), "Track")
        self.track = self.board.track(kind)
        logger.debug(f"Track {self.track_name!r} of {len(self.track)} sites")

    def declare_map(self, node: LudemeNode) -> None:
        for pair in node.constructors("pair"):
            labels = [c.value for c in pair.children if c.kind is NodeKind.STRING]
            if len(labels) != 2:
                raise SemanticError('(pair "From" "To") expected', pair.span)
            source, target = (self.board.site(label) for label in labels)
            self.jumps[source] = target

    def declare_regions(self, node: LudemeNode) -> None:
        owner = node.children[0] if node.children else None
        if owner is None or not owner.is_symbol() or not owner.value.startswith("P"):
            raise SemanticError("(regions P<k> <sites>) expected", node.span)
        player = int(owner.value[1:])
        sites = ()
        for child in node.children[1:]:
            sites += resolve_sites(child, self.board)
        self.player_regions[player] = sites

    def compile_place(self, node: LudemeNode) -> Tuple[int, Tuple[int, ...]]:
        if not node.is_head("place") or not node.children or node.children[0].kind is not NodeKind.STRING:
            raise SemanticError('(place "Piece" <sites>) expected', node.span)
        index = self.piece_index(node.children[0].value, node)
        sites = ()
        for child in node.children[1:]:
            sites += resolve_sites(child, self.board)
        return index, sites

    # -- play --------------------------------------------------------------

    def compile_play(self, node: LudemeNode, owner: Optional[int]) -> PlayRule:
        head, qualifier = node.head, node.qualifier
        move_again = self.then_move_again(node)
        if head == "or":
            return OrRule(tuple(self.compile_play(child, owner) for child in _children(node)))
        if head == "forEach":
            return ForEachPieceRule()
        if head == "if":
            parts = [c for c in node.children if c.is_constructor]
            test = parts[0] if parts else None
            if test is None or not (test.is_head("is", "Even") or test.is_head("is", "Odd")):
                raise SemanticError("Play rules can only be guarded by (is Even|Odd (count Moves))", node.span)
            else_rule = self.compile_play(parts[2], owner) if len(parts) > 2 else None
            return ParityRule(test.qualifier == "Even", self.compile_play(parts[1], owner), else_rule)
        if head != "move":
            raise SemanticError(f"{node.label!r} is not a play rule", node.span)

        if qualifier == "Add":
            piece = node.child("piece")
            if piece is not None:
                fixed = self.piece_index(piece.children[0].value, piece)
                pieces = {p: fixed for p in self.players}
            else:
                pieces = {p: self.first_piece_of(p, node) for p in ((owner,) if owner else self.players)}
            target = node.child("to")
            targets = None
            if target is not None and not is_empty_sites(target):
                targets = frozenset(resolve_sites(target, self.board))
            return AddRule(pieces, targets, move_again)
        if qualifier == "Slide":
            return SlideRule(self.directions_for(node, owner), self.has_enemy_marker(node), move_again)
        if qualifier == "Shoot":
            piece = node.child("piece")
            if piece is None or not piece.children or piece.children[0].kind is not NodeKind.STRING:
                raise SemanticError('(move Shoot (piece "Name")) expected', node.span)
            index = self.piece_index(piece.children[0].value, piece)
            return ShootRule(index, self.directions_for(node, 1)[1], move_again)
        if qualifier == "Hop":
            return HopRule(
                self.directions_for(node, owner), self.has_enemy_marker(node), node.contains("remove"), move_again
            )
        if qualifier == "Step":
            return StepRule(self.directions_for(node, owner), self.has_enemy_marker(node), move_again)
        if qualifier == "Roll":
            if not self.track or not self.dice_faces:
                raise SemanticError("(move Roll ...) needs a track and dice in the equipment", node.span)
            names = [c.value for c in node.children if c.kind is NodeKind.STRING]
            if names and names[0] != self.track_name:
                raise SemanticError(f"Unknown track {names[0]!r}", node.span)
            pieces = {p: self.first_piece_of(p, node) for p in ((owner,) if owner else self.players)}
            return RollRule(pieces, move_again)
        raise SemanticError(f"Unsupported move {node.label!r}", node.span)

    def is_add_only(self, rule: PlayRule) -> bool:
        if isinstance(rule, (AddRule, ShootRule)):
            return True
        if isinstance(rule, OrRule):
            return all(self.is_add_only(r) for r in rule.rules)
        if isinstance(rule, ParityRule):
            return self.is_add_only(rule.then_rule) and (rule.else_rule is None or self.is_add_only(rule.else_rule))
        if isinstance(rule, ForEachPieceRule):
            return all(p.move_rule is None or self.is_add_only(p.move_rule) for p in self.piece_types)
        return False

    # -- end ---------------------------------------------------------------

    def compile_end(self, node: LudemeNode) -> EndRule:
        parts = [c for c in node.children if c.is_constructor]
        if not node.is_head("if") or len(parts) != 2 or not parts[1].is_head("result"):
            raise SemanticError("End rules are written (if <condition> (result <who> <kind>))", node.span)
        result = [c.value for c in parts[1].children if c.is_symbol()]
        if len(result) != 2 or result[0] not in _PLAYERS_WHO or result[1] not in _RESULTS:
            raise SemanticError("(result Mover|Next|Prev Win|Loss|Draw) expected", parts[1].span)
        return EndRule(self.compile_condition(parts[0]), result[0], result[1])

    def compile_condition(self, node: LudemeNode) -> Condition:
        head, qualifier = node.head, node.qualifier
        if head in ("or", "and"):
            children = tuple(self.compile_condition(c) for c in _children(node))
            return OrCondition(children) if head == "or" else AndCondition(children)
        if head == "not":
            children = _children(node)
            if len(children) != 1:
                raise SemanticError("(not <condition>) expected", node.span)
            return NotCondition(self.compile_condition(children[0]))
        if head == "no" and qualifier == "Moves":
            who = node.children[1].value if len(node.children) > 1 and node.children[1].is_symbol() else "Next"
            if who not in ("Next", "Mover"):
                raise SemanticError(f"(no Moves {who}) is not supported", node.span)
            return NoMovesCondition(who)
        if head == "is" and qualifier == "Line":
            numbers = [c.value for c in node.children if c.kind is NodeKind.NUMBER]
            if not numbers:
                raise SemanticError("(is Line n) needs a length", node.span)
            name = next((c.value for c in node.children[1:] if c.is_symbol() and c.value in DIRECTION_NAMES), "All")
            names = self.board.direction_class(name)
            axes = []
            for direction in names:
                opposite = OPPOSITE[direction]
                if opposite in names and (self.board.directions.index(opposite), self.board.directions.index(direction)) not in axes:
                    axes.append((self.board.directions.index(direction), self.board.directions.index(opposite)))
            return LineCondition(int(numbers[0]), tuple(axes))
        if head == "is" and qualifier == "Connected":
            return self.compile_connected(node)
        if head == "is" and qualifier == "Loop":
            return LoopCondition()
        if head == "is" and qualifier == "Reach":
            target = node.children[1] if len(node.children) > 1 else None
            if target is None:
                raise SemanticError("(is Reach Mover|<sites>) expected", node.span)
            if target.is_symbol("Mover"):
                missing = [p for p in self.players if p not in self.player_regions]
                if missing:
                    raise SemanticError(f"Players {missing} have no (regions ...) to reach", node.span)
                return ReachCondition({p: frozenset(self.player_regions[p]) for p in self.players})
            sites = frozenset(resolve_sites(target, self.board))
            return ReachCondition({p: sites for p in self.players})
        raise SemanticError(f"{node.label!r} is not an end condition", node.span)

    def compile_connected(self, node: LudemeNode) -> ConnectedCondition:
        board = self.board
        numbers = [c.value for c in node.children if c.kind is NodeKind.NUMBER]
        kinds = [c.value for c in node.children[1:] if c.is_symbol()]
        kind = kinds[0] if kinds else "Sides"
        if kind == "OppositeSides":
            if self.num_players != 2:
                raise SemanticError("OppositeSides connections need exactly 2 players", node.span)
            bits = {side: self.region_bit(("Side", side), board.region(side)) for side in ("N", "S", "E", "W")}
            return ConnectedCondition(kind, required={1: bits["N"] | bits["S"], 2: bits["E"] | bits["W"]})
        if not numbers:
            raise SemanticError(f"(is Connected k {kind}) needs a count", node.span)
        mask = 0
        if kind == "Corners":
            for corner in sorted(board.corners):
                mask |= self.region_bit(("Corner", str(corner)), frozenset({corner}))
        elif kind == "SidesNoCorners":
            for side in board.sides:
                mask |= self.region_bit(("SideNoCorners", side), board.sides_without_corners(side))
        elif kind == "Sides":
            for side in board.sides:
                mask |= self.region_bit(("SideWithCorners", side), board.sides_with_corners(side))
        else:
            raise SemanticError(f"Unknown connection target {kind!r}", node.span)
        return ConnectedCondition(kind, count=int(numbers[0]), mask=mask)


def compile_game(tree: LudemeNode) -> GameSpec:
    """
    Compile a description into a playable GameSpec.

    Raises:
        NotAGameError: the root is not `(game ...)`.
        UnsupportedLudemeError: listing every constructor outside the playable subset.
        SemanticError: dangling piece, site, region or track references.
    """
    if not tree.is_head("game"):
        raise NotAGameError(f"The root of a description must be (game ...), got {tree.label!r}")
    unsupported = unsupported_ludemes(tree)
    if unsupported:
        raise UnsupportedLudemeError(unsupported)
    return _Compiler(tree).compile()
