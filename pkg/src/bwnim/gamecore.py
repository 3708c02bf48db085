"""Positions, heap colors, legality, and move generation.

A position is the unordered multiset of the k heap sizes, always stored as
an ascending tuple.  Moves are ordinary Nim lowerings of one heap, filtered
by a legality predicate on the target position only; which predicate applies
depends on the rule variant.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .coloring import ColoringSet, parse_coloring


class Interpretation(enum.Enum):
    """Which feasibility branch the full-spectrum rule uses."""

    ALL_COLORS_WHEN_FEASIBLE = "all-colors-when-feasible"
    DISTINCT_COLORS = "distinct-colors"


class BichromaticMode(enum.Enum):
    AT_MOST = "atmost"
    EXACTLY = "exactly"
    AT_LEAST = "atleast"


class Player(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT


@dataclass(frozen=True)
class BlackWhite:
    coloring: ColoringSet


@dataclass(frozen=True)
class Spectrum:
    colors: int
    interpretation: Interpretation = Interpretation.ALL_COLORS_WHEN_FEASIBLE

    def __post_init__(self):
        if self.colors < 2:
            raise ValueError("spectrum rules need at least 2 colors")


@dataclass(frozen=True)
class Bichromatic:
    colors: int
    mode: BichromaticMode

    def __post_init__(self):
        if self.colors < 2:
            raise ValueError("bichromatic rules need at least 2 colors")


@dataclass(frozen=True)
class PartizanBlackWhite:
    coloring: ColoringSet


Rules = Union[BlackWhite, Spectrum, Bichromatic, PartizanBlackWhite]


@dataclass(frozen=True)
class GameSpec:
    """Heap count k (fixed for the whole game) plus the rule variant."""

    k: int
    rules: Rules

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")

    def describe(self) -> str:
        r = self.rules
        if isinstance(r, BlackWhite):
            return r.coloring.spec_string()
        if isinstance(r, Spectrum):
            return f"spectrum:{r.colors}:{r.interpretation.value}"
        if isinstance(r, Bichromatic):
            return f"bichromatic:{r.colors}:{r.mode.value}"
        return f"partizan:{r.coloring.spec_string()}"


def black_white_spec(coloring: ColoringSet, k: int) -> GameSpec:
    return GameSpec(k=k, rules=BlackWhite(coloring))


def parse_game_spec(text: str, k: int) -> GameSpec:
    """Game spec from the coloring grammar (black & white rules)."""
    return black_white_spec(parse_coloring(text), k)


# -- positions ----------------------------------------------------------------

Position = tuple[int, ...]


def canonical(sizes) -> Position:
    """Ascending tuple form of a heap multiset."""
    pos = tuple(sorted(sizes))
    if any(s < 0 for s in pos):
        raise ValueError("heap sizes must be nonnegative")
    return pos


def parse_position(text: str, k: Optional[int] = None) -> Position:
    pos = canonical(int(v) for v in text.split(","))
    if k is not None and len(pos) != k:
        raise ValueError(f"expected {k} heap sizes, got {len(pos)}")
    return pos


def format_position(pos: Position) -> str:
    return ",".join(str(s) for s in pos)


@dataclass(frozen=True)
class Move:
    """One Nim lowering: heap of size heap_from drops to heap_to."""

    source: Position
    target: Position
    heap_from: int
    heap_to: int

    def __post_init__(self):
        if not (0 <= self.heap_to < self.heap_from):
            raise ValueError("a move must strictly lower one heap")


def _lowering(pos: Position, size: int, new: int) -> Position:
    out = list(pos)
    out.remove(size)
    out.append(new)
    out.sort()
    return tuple(out)


# -- heap colors ---------------------------------------------------------------

def heap_is_black(coloring: ColoringSet, size: int) -> bool:
    """Empty heaps count as black; otherwise the top token decides."""
    if size < 0:
        raise ValueError("heap sizes must be nonnegative")
    return size == 0 or coloring.contains(size)


def color_of_heap(colors: int, size: int) -> Optional[int]:
    """Top-token color index modulo `colors`, or None for an empty heap."""
    if colors < 2:
        raise ValueError("need at least 2 colors")
    if size < 0:
        raise ValueError("heap sizes must be nonnegative")
    if size == 0:
        return None
    return size % colors


def spectrum_legal(colors: int, interpretation: Interpretation, pos: Position) -> bool:
    """Full-spectrum color rule; empty heaps carry no color.

    All-empty positions are vacuously legal under either interpretation.
    """
    tops = [color_of_heap(colors, s) for s in pos]
    present = [c for c in tops if c is not None]
    if not present:
        return True
    if interpretation is Interpretation.ALL_COLORS_WHEN_FEASIBLE and colors <= len(pos):
        return set(present) == set(range(colors))
    return len(set(present)) == len(present)


def bichromatic_legal(colors: int, mode: BichromaticMode, pos: Position) -> bool:
    """Two-color representation rule over the non-empty heap tops."""
    distinct = len({color_of_heap(colors, s) for s in pos if s > 0})
    if mode is BichromaticMode.AT_MOST:
        return distinct <= 2
    if mode is BichromaticMode.EXACTLY:
        return distinct == 2
    return distinct >= 2


# -- legality and moves ---------------------------------------------------------

def is_legal(spec: GameSpec, pos: Position) -> bool:
    if len(pos) != spec.k:
        raise ValueError(f"position has {len(pos)} heaps, spec wants {spec.k}")
    r = spec.rules
    if isinstance(r, BlackWhite):
        return any(heap_is_black(r.coloring, s) for s in pos)
    if isinstance(r, Spectrum):
        return spectrum_legal(r.colors, r.interpretation, pos)
    if isinstance(r, Bichromatic):
        return bichromatic_legal(r.colors, r.mode, pos)
    return True  # partizan positions are unrestricted; legality lives on moves


def legal_moves(spec: GameSpec, pos: Position) -> list[Move]:
    """Every lowering of one heap whose target is legal, one move per
    distinct target multiset, sorted by target."""
    pos = canonical(pos)
    if not is_legal(spec, pos):
        raise ValueError("position violates color rule")
    moves = []
    for size in sorted(set(pos)):
        for new in range(size):
            target = _lowering(pos, size, new)
            if is_legal(spec, target):
                moves.append(Move(pos, target, size, new))
    moves.sort(key=lambda m: (m.target, m.heap_from))
    return moves


def partizan_legal_moves(
    coloring: ColoringSet, pos: Position, player: Player
) -> list[Move]:
    """Lowerings filtered per player: Left needs a white heap in the target,
    Right a black one."""
    pos = canonical(pos)

    def allowed(target: Position) -> bool:
        if player is Player.LEFT:
            return any(not heap_is_black(coloring, s) for s in target)
        return any(heap_is_black(coloring, s) for s in target)

    moves = []
    for size in sorted(set(pos)):
        for new in range(size):
            target = _lowering(pos, size, new)
            if allowed(target):
                moves.append(Move(pos, target, size, new))
    moves.sort(key=lambda m: (m.target, m.heap_from))
    return moves
