"""
Game compiler: static concept scan and compilation of the playable subset.

Licensed under the Apache License, Version 2.0
"""
from .scan import ScanReport, VOCABULARY, annotated_concepts, game_name, read_annotations, static_scan
from .compile import SUPPORTED, compile_game, unsupported_ludemes
from .equipment import build_board, resolve_sites
from .spec import (
    NEUTRAL,
    AddRule,
    AndCondition,
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
    ReachCondition,
    RollRule,
    ShootRule,
    SlideRule,
    StepRule,
)

__all__ = [
    "ScanReport",
    "VOCABULARY",
    "game_name",
    "annotated_concepts",
    "read_annotations",
    "static_scan",
    "SUPPORTED",
    "compile_game",
    "unsupported_ludemes",
    "build_board",
    "resolve_sites",
    "NEUTRAL",
    "AddRule",
    "AndCondition",
    "ConnectedCondition",
    "EndRule",
    "ForEachPieceRule",
    "GameSpec",
    "HopRule",
    "LineCondition",
    "LoopCondition",
    "NoMovesCondition",
    "NotCondition",
    "OrCondition",
    "OrRule",
    "ParityRule",
    "PieceType",
    "ReachCondition",
    "RollRule",
    "ShootRule",
    "SlideRule",
    "StepRule",
]
