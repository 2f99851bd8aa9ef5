"""
Command line interface.

    ludecon scan GAME.lud                       compilation concepts
    ludecon concepts GAME.lud --trials N        compilation and playout concepts
    ludecon concepts --list                     the concept registry
    ludecon playout GAME.lud --seed S           outcome of one playout, --verbose for the trace
    ludecon board hex 8                         site count, --describe for the degree histogram
    ludecon corpus DIR --out matrix.csv         concept matrix of a game library
    ludecon nearest --corpus matrix.csv GAME    closest games
    ludecon recommend --corpus matrix.csv --like GAME ... [--dislike GAME ...]
    ludecon search --corpus matrix.csv --require CONCEPT ... [--exclude CONCEPT ...]
    ludecon coverage --corpus matrix.csv -k N   benchmark subset covering most concepts

Exit codes: 0 success, 1 invalid input, 2 missing input file, 3 description
that does not parse, 4 unknown game id (or no liked game).

Licensed under the Apache License, Version 2.0
"""
import argparse
import io
import json
import logging
import sys
from typing import List, Optional

import pandas as pd

from . import __version__
from .board import build_hex_hexagon, build_hex_rhombus, build_hex_star, build_rectangle, build_square
from .concepts import registry
from .diagnostics.reports import compute_board_summary
from .engine import describe_move
from .pipeline import analyze_file
from .playout import FIRST_LEGAL, UNIFORM_RANDOM, PlayoutConfig, run_trial, trial_seed
from .recommender import build_corpus, corpus_files, coverage_subset, load_corpus, nearest, recommend, save_corpus, search
from .validation.exceptions import (
    EmptyLikesError,
    InvalidSizeError,
    LudeconError,
    LudemeSyntaxError,
    NotAGameError,
    UnknownGameError,
)

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISSING_INPUT = 2
EXIT_PARSE_ERROR = 3
EXIT_UNKNOWN_GAME = 4

POLICY_ALIASES = {
    "random": UNIFORM_RANDOM,
    "first": FIRST_LEGAL,
    UNIFORM_RANDOM.lower(): UNIFORM_RANDOM,
    FIRST_LEGAL.lower(): FIRST_LEGAL,
}
BOARDS = {
    "square": build_square,
    "rectangle": build_rectangle,
    "hex": build_hex_hexagon,
    "diamond": build_hex_rhombus,
    "star": build_hex_star,
}


def _policy(value: str) -> str:
    try:
        return POLICY_ALIASES[value.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"unknown policy {value!r}, choose random or first")


def _concept_key(value: str):
    return int(value) if value.isdigit() else value


def _playout_config(args) -> Optional[PlayoutConfig]:
    if args.trials == 0:
        return None
    return PlayoutConfig(trials=args.trials, master_seed=args.seed, policy=args.policy, move_cap=args.move_cap)


def _emit(text: str, out) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _report_text(report, fmt: str) -> str:
    if fmt == "csv":
        buffer = io.StringIO()
        columns = ["id", "name", "category", "dataType", "computation", "value"]
        rows = sorted(report.concepts, key=lambda entry: entry["id"])
        pd.DataFrame(rows, columns=columns).to_csv(buffer, index=False)
        return buffer.getvalue()
    return report.to_json()


def _registry_text(fmt: str) -> str:
    entries = [definition.to_dict() for definition in registry()]
    if fmt == "csv":
        buffer = io.StringIO()
        pd.DataFrame(entries).to_csv(buffer, index=False)
        return buffer.getvalue()
    return json.dumps(entries, indent=2)


# -- commands ---------------------------------------------------------------

def cmd_scan(args, out) -> int:
    analysis = analyze_file(args.path, config=None, compile=False)
    _emit(_report_text(analysis.report(), args.format), out)
    return EXIT_OK


def cmd_concepts(args, out) -> int:
    if args.list:
        _emit(_registry_text(args.format), out)
        return EXIT_OK
    if args.path is None:
        raise FileNotFoundError("concepts needs a description path, or --list")
    analysis = analyze_file(args.path, _playout_config(args), compile=True, n_workers=args.threads)
    _emit(_report_text(analysis.report(), args.format), out)
    return EXIT_OK


def cmd_playout(args, out) -> int:
    analysis = analyze_file(args.path, config=None, compile=True)
    if analysis.spec is None:
        raise LudeconError(f"{args.path} cannot be played: {analysis.compile_error}")
    spec = analysis.spec

    def trace(state, move):
        _emit(describe_move(spec, state, move), out)

    seed = trial_seed(args.seed, 0)
    trial = run_trial(spec, args.policy, seed, args.move_cap, on_move=trace if args.verbose else None)
    if trial.truncated:
        _emit(f"Truncated after {trial.length} moves", out)
    else:
        _emit(f"{trial.outcome.describe()} after {trial.length} moves", out)
    return EXIT_OK


def cmd_board(args, out) -> int:
    builder = BOARDS[args.kind]
    if args.kind == "rectangle":
        if args.columns is None:
            raise InvalidSizeError("A rectangle needs rows and columns")
        board = builder(args.size, args.columns)
    else:
        board = builder(args.size)
    if args.describe:
        _emit(compute_board_summary(board).to_json(), out)
    else:
        _emit(f"{board.name}: {board.num_sites} sites", out)
    return EXIT_OK


def cmd_corpus(args, out) -> int:
    files = corpus_files(args.directory)
    if not files:
        raise FileNotFoundError(f"No .lud files in {args.directory}")
    corpus = build_corpus(files, _playout_config(args), n_workers=args.threads)
    sidecar = save_corpus(corpus, args.out)
    _emit(f"{len(corpus)} games ({len(corpus.playable)} playable) written to {args.out} and {sidecar}", out)
    return EXIT_OK


def cmd_nearest(args, out) -> int:
    corpus = load_corpus(args.corpus)
    for game_id, d in nearest(corpus, args.game, args.k):
        _emit(f"{game_id} {d:.6f}", out)
    return EXIT_OK


def cmd_recommend(args, out) -> int:
    corpus = load_corpus(args.corpus)
    for game_id, score in recommend(corpus, args.like, args.dislike, args.k):
        _emit(f"{game_id} {score:.6f}", out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    corpus = load_corpus(args.corpus)
    require = [_concept_key(v) for v in args.require]
    exclude = [_concept_key(v) for v in args.exclude]
    for game_id in search(corpus, require, exclude):
        _emit(game_id, out)
    return EXIT_OK


def cmd_coverage(args, out) -> int:
    corpus = load_corpus(args.corpus)
    for game_id in coverage_subset(corpus, args.k):
        _emit(game_id, out)
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def _add_playout_options(parser, default_trials: int) -> None:
    parser.add_argument("--trials", type=int, default=default_trials, help="number of playouts, 0 to skip them")
    parser.add_argument("--seed", type=int, default=0, help="master seed")
    parser.add_argument("--policy", type=_policy, default=UNIFORM_RANDOM, help="random (default) or first")
    parser.add_argument("--move-cap", type=int, default=None, help="maximum moves per playout")
    parser.add_argument("--threads", type=int, default=None, help="worker processes (default: LUDECON_THREADS)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ludecon", description="Game concepts from ludeme descriptions")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level", type=str.upper, default="WARNING", choices=("DEBUG", "INFO", "WARNING", "ERROR")
    )
    commands = parser.add_subparsers(dest="command", required=True)

    scan = commands.add_parser("scan", help="compilation concepts of a description")
    scan.add_argument("path")
    scan.add_argument("--format", choices=("json", "csv"), default="json")
    scan.set_defaults(handler=cmd_scan)

    concepts = commands.add_parser("concepts", help="compilation and playout concepts of a description")
    concepts.add_argument("path", nargs="?", default=None)
    concepts.add_argument("--list", action="store_true", help="print the concept registry and exit")
    concepts.add_argument("--format", choices=("json", "csv"), default="json")
    _add_playout_options(concepts, default_trials=10000)
    concepts.set_defaults(handler=cmd_concepts)

    playout = commands.add_parser("playout", help="trace of one playout")
    playout.add_argument("path")
    playout.add_argument("--seed", type=int, default=0)
    playout.add_argument("--policy", type=_policy, default=UNIFORM_RANDOM)
    playout.add_argument("--move-cap", type=int, default=None)
    playout.add_argument("--verbose", action="store_true", help="print every move before the outcome, and log debug messages")
    playout.set_defaults(handler=cmd_playout)

    board = commands.add_parser("board", help="describe a board")
    board.add_argument("kind", choices=sorted(BOARDS))
    board.add_argument("size", type=int)
    board.add_argument("columns", type=int, nargs="?", default=None, help="rectangle columns")
    board.add_argument("--describe", action="store_true", help="print sides, corners, degree histogram and components as JSON")
    board.set_defaults(handler=cmd_board)

    corpus = commands.add_parser("corpus", help="concept matrix of every .lud file of a directory")
    corpus.add_argument("directory")
    corpus.add_argument("--out", required=True, help="CSV matrix; the JSON sidecar goes next to it")
    _add_playout_options(corpus, default_trials=10000)
    corpus.set_defaults(handler=cmd_corpus)

    near = commands.add_parser("nearest", help="games closest to a game")
    near.add_argument("--corpus", required=True)
    near.add_argument("game")
    near.add_argument("-k", type=int, default=5)
    near.set_defaults(handler=cmd_nearest)

    rec = commands.add_parser("recommend", help="games for a player's likes and dislikes")
    rec.add_argument("--corpus", required=True)
    rec.add_argument("--like", nargs="+", default=[])
    rec.add_argument("--dislike", nargs="+", default=[])
    rec.add_argument("-k", type=int, default=5)
    rec.set_defaults(handler=cmd_recommend)

    find = commands.add_parser("search", help="games with and without given concepts")
    find.add_argument("--corpus", required=True)
    find.add_argument("--require", nargs="+", default=[], help="concept names or ids")
    find.add_argument("--exclude", nargs="+", default=[], help="concept names or ids")
    find.set_defaults(handler=cmd_search)

    cover = commands.add_parser("coverage", help="benchmark subset covering the most concepts")
    cover.add_argument("--corpus", required=True)
    cover.add_argument("-k", type=int, default=5)
    cover.set_defaults(handler=cmd_coverage)
    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(level=level.upper(), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.captureWarnings(True)


def main(argv: Optional[List[str]] = None, out=None) -> int:
    """
    Run one command.

    Returns:
        int: the exit code.
    """
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    level = "DEBUG" if getattr(args, "verbose", False) else args.log_level
    _configure_logging(level)
    try:
        return args.handler(args, out)
    except EmptyLikesError as error:
        parser.print_usage(sys.stderr)
        print(f"error: {error}", file=sys.stderr)
        return EXIT_UNKNOWN_GAME
    except UnknownGameError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_UNKNOWN_GAME
    except (LudemeSyntaxError, NotAGameError) as error:
        print(f"error: {args_path(args)}: {error}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except LudeconError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_MISSING_INPUT


def args_path(args) -> str:
    return getattr(args, "path", None) or getattr(args, "directory", "")


if __name__ == "__main__":
    sys.exit(main())
