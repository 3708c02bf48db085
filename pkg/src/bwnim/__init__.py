"""Coloring-restricted Nim on k heaps.

Tokens are pre-colored black or white by a set S of heights; a position is
legal while at least one heap shows black on top (empty heaps count as
black).  This package bundles exact quadratic-irrational arithmetic, the
coloring sets, move generation, an exhaustive solver, closed-form P-position
oracles with constructive strategies for the two resolved two-heap families,
exploration tools for the open variants, and a CLI plus HTTP play service.
"""

from .coloring import (
    BeattyIrrational,
    ColoringSet,
    ComplementarityReport,
    Explicit,
    Modular,
    RationalBeatty,
    parse_coloring,
    verify_complementary,
)
from .exactnum import QuadraticIrrational, compare, isqrt, parse_quadratic, sqrt_of
from .gamecore import (
    Bichromatic,
    BichromaticMode,
    BlackWhite,
    GameSpec,
    Interpretation,
    Move,
    PartizanBlackWhite,
    Player,
    Spectrum,
    black_white_spec,
    canonical,
    color_of_heap,
    format_position,
    heap_is_black,
    is_legal,
    legal_moves,
    parse_game_spec,
    parse_position,
    partizan_legal_moves,
)
from .oracles import (
    OracleReport,
    beatty_index,
    beatty_is_p,
    beatty_winning_move,
    cross_validate,
    modular_is_p,
    modular_winning_move,
    nonmultiple_member,
    nonmultiple_rank,
    oracle_for_spec,
)
from .solver import (
    GrundyTable,
    OutcomeTable,
    grundy_table,
    mex,
    nim_xor_check,
    outcome_table,
    partizan_outcomes,
    tables_to_csv,
    winning_moves,
)
from .engine import delaying_move, engine_move, self_play

__version__ = "0.1.0"

__all__ = [
    "BeattyIrrational",
    "Bichromatic",
    "BichromaticMode",
    "BlackWhite",
    "ColoringSet",
    "ComplementarityReport",
    "Explicit",
    "GameSpec",
    "GrundyTable",
    "Interpretation",
    "Modular",
    "Move",
    "OracleReport",
    "OutcomeTable",
    "PartizanBlackWhite",
    "Player",
    "QuadraticIrrational",
    "RationalBeatty",
    "Spectrum",
    "beatty_index",
    "beatty_is_p",
    "beatty_winning_move",
    "black_white_spec",
    "canonical",
    "color_of_heap",
    "compare",
    "cross_validate",
    "delaying_move",
    "engine_move",
    "format_position",
    "grundy_table",
    "heap_is_black",
    "is_legal",
    "isqrt",
    "legal_moves",
    "mex",
    "modular_is_p",
    "modular_winning_move",
    "nim_xor_check",
    "nonmultiple_member",
    "nonmultiple_rank",
    "oracle_for_spec",
    "outcome_table",
    "parse_coloring",
    "parse_game_spec",
    "parse_position",
    "parse_quadratic",
    "partizan_legal_moves",
    "partizan_outcomes",
    "self_play",
    "sqrt_of",
    "tables_to_csv",
    "verify_complementary",
    "winning_moves",
]
