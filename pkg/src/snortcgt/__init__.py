"""Exact values, thermographs and temperatures for Snort on arbitrary graphs."""

from snortcgt.dyadic import Dyadic
from snortcgt.games import (
    STAR,
    ZERO,
    Game,
    GameKind,
    Kind,
    Outcome,
    add,
    canonical_sum,
    canonicalize,
    eq,
    integer,
    kind_of,
    leq,
    make_game,
    negate,
    number,
    outcome,
)
from snortcgt.notation import ParseError, format_game, parse_game
from snortcgt.snort import (
    IllegalMove,
    Player,
    Position,
    Tint,
    canonical_key,
    components,
    degree,
    legal_moves,
    normalize,
    play,
    position_temperature,
    second_degree,
    value,
)
from snortcgt.thermography import Thermograph, Trajectory, temperature, thermograph, trajectory_eval

__version__ = "0.1.0"

__all__ = [
    "Dyadic", "Game", "GameKind", "Kind", "Outcome", "STAR", "ZERO",
    "add", "canonical_sum", "canonicalize", "eq", "integer", "kind_of", "leq",
    "make_game", "negate", "number", "outcome",
    "ParseError", "format_game", "parse_game",
    "IllegalMove", "Player", "Position", "Tint", "canonical_key", "components",
    "degree", "legal_moves", "normalize", "play", "position_temperature",
    "second_degree", "value",
    "Thermograph", "Trajectory", "temperature", "thermograph", "trajectory_eval",
]
