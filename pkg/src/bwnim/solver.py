"""Exhaustive outcome and Grundy classification over bounded boxes.

Backward induction over canonical positions, iterative (moves strictly
shrink the total, so ordering by total is a topological order).  Legality
couples the heaps, so these are whole-graph values; no disjunctive-sum
shortcut exists for these games and none is offered.

Two-heap boxes run on a dense grid sweep; the general path works for any k.
Both are exhaustive and the test suite holds them against each other.
"""

from __future__ import annotations

import math
import os
import threading
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .coloring import ColoringSet
from .gamecore import (
    BlackWhite,
    GameSpec,
    Move,
    Player,
    Position,
    canonical,
    heap_is_black,
    is_legal,
    legal_moves,
)

OUTCOME_P = "P"
OUTCOME_N = "N"
OUTCOME_ILLEGAL = "Illegal"

DEFAULT_MAX_TABLE_ENTRIES = 50_000_000
MAX_ENTRIES_ENV = "BWNIM_MAX_TABLE_ENTRIES"


def mex(values) -> int:
    """Least nonnegative integer absent from the collection."""
    vals = set(values)
    m = 0
    while m in vals:
        m += 1
    return m


def nim_xor_check(pos: Position) -> bool:
    """Nim law for positions with an empty heap: P exactly when the xor of
    the sizes is zero.  Requires an empty heap to be present."""
    if 0 not in pos:
        raise ValueError("precondition: empty heap required")
    x = 0
    for s in pos:
        x ^= s
    return x == 0


def _entry_limit(max_entries: int | None) -> int:
    if max_entries is not None:
        return max_entries
    env = os.environ.get(MAX_ENTRIES_ENV)
    if env:
        return int(env)
    return DEFAULT_MAX_TABLE_ENTRIES


def _guard(k: int, bound: int, max_entries: int | None) -> None:
    n = math.comb(bound + k, k)
    limit = _entry_limit(max_entries)
    if n > limit:
        raise ValueError(
            f"solving [0,{bound}]^{k} needs {n} table entries, over the limit of {limit}"
        )


@dataclass
class OutcomeTable:
    """P/N/Illegal for every canonical position with all sizes <= bound."""

    spec: GameSpec
    bound: int
    entries: dict[Position, str] = field(repr=False)

    def outcome(self, pos) -> str:
        return self.entries[canonical(pos)]

    def p_positions(self) -> list[Position]:
        return [p for p, o in self.entries.items() if o == OUTCOME_P]


@dataclass
class GrundyTable:
    """Grundy values for every legal canonical position in the box."""

    spec: GameSpec
    bound: int
    entries: dict[Position, int] = field(repr=False)

    def value(self, pos) -> int:
        return self.entries[canonical(pos)]


def _positions(k: int, bound: int):
    return combinations_with_replacement(range(bound + 1), k)


def _legal_pair_fn(spec: GameSpec, bound: int):
    """Per-cell legality for two-heap grids; black-white gets a table."""
    rules = spec.rules
    if isinstance(rules, BlackWhite):
        members = set(rules.coloring.prefix(bound))
        black = [s == 0 or s in members for s in range(bound + 1)]
        return lambda x, y: black[x] or black[y]
    return lambda x, y: is_legal(spec, (x, y))


def _outcome_dense_two_heaps(spec: GameSpec, bound: int) -> dict[Position, str]:
    # Sweep canonical cells (x <= y) row by row.  A cell is N exactly when a
    # P entry sits strictly below it in its row or column: P positions are
    # legal by construction and a Nim move onto any legal position is legal.
    legal = _legal_pair_fn(spec, bound)
    col_p = [False] * (bound + 1)
    entries: dict[Position, str] = {}
    for x in range(bound + 1):
        row_p = col_p[x]  # mirrored column covers targets (y', x) with y' < x
        for y in range(x, bound + 1):
            if not legal(x, y):
                entries[(x, y)] = OUTCOME_ILLEGAL
                continue
            if row_p or col_p[y]:
                entries[(x, y)] = OUTCOME_N
            else:
                entries[(x, y)] = OUTCOME_P
                row_p = True
                col_p[y] = True
    return entries


def _outcome_generic(spec: GameSpec, bound: int) -> dict[Position, str]:
    buckets = defaultdict(list)
    for pos in _positions(spec.k, bound):
        buckets[sum(pos)].append(pos)
    entries: dict[Position, str] = {}
    for total in sorted(buckets):
        for pos in buckets[total]:
            if not is_legal(spec, pos):
                entries[pos] = OUTCOME_ILLEGAL
                continue
            out = OUTCOME_P
            for i, size in enumerate(pos):
                if i and size == pos[i - 1]:
                    continue
                rest = list(pos[:i] + pos[i + 1:])
                for new in range(size):
                    if entries[tuple(sorted(rest + [new]))] == OUTCOME_P:
                        out = OUTCOME_N
                        break
                if out == OUTCOME_N:
                    break
            entries[pos] = out
    return {pos: entries[pos] for pos in _positions(spec.k, bound)}


def outcome_table(
    spec: GameSpec, bound: int, *, max_entries: int | None = None
) -> OutcomeTable:
    """Classify every canonical position in [0, bound]^k as P, N, or Illegal."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    _guard(spec.k, bound, max_entries)
    if spec.k == 2:
        entries = _outcome_dense_two_heaps(spec, bound)
    else:
        entries = _outcome_generic(spec, bound)
    return OutcomeTable(spec=spec, bound=bound, entries=entries)


def grundy_table(
    spec: GameSpec, bound: int, *, max_entries: int | None = None
) -> GrundyTable:
    """Grundy value (mex over option values) for every legal position."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    _guard(spec.k, bound, max_entries)
    buckets = defaultdict(list)
    for pos in _positions(spec.k, bound):
        buckets[sum(pos)].append(pos)
    values: dict[Position, int] = {}
    for total in sorted(buckets):
        for pos in buckets[total]:
            if not is_legal(spec, pos):
                continue
            opts = set()
            for i, size in enumerate(pos):
                if i and size == pos[i - 1]:
                    continue
                rest = list(pos[:i] + pos[i + 1:])
                for new in range(size):
                    g = values.get(tuple(sorted(rest + [new])))
                    if g is not None:
                        opts.add(g)
            values[pos] = mex(opts)
    ordered = {pos: values[pos] for pos in _positions(spec.k, bound) if pos in values}
    return GrundyTable(spec=spec, bound=bound, entries=ordered)


def winning_moves(
    spec: GameSpec, pos, table: OutcomeTable | None = None
) -> list[Move]:
    """Exactly the legal moves onto P targets; empty when pos itself is P."""
    pos = canonical(pos)
    if table is None:
        table = cached_outcome_table(spec, max(pos))
    if table.entries.get(pos) in (None, OUTCOME_ILLEGAL):
        raise ValueError("position violates color rule")
    return [m for m in legal_moves(spec, pos) if table.entries[m.target] == OUTCOME_P]


# -- partizan variant ----------------------------------------------------------

PARTIZAN_CONVENTION = "normal play: a player without a legal move loses"


def partizan_outcomes(
    coloring: ColoringSet, k: int, bound: int, *, max_entries: int | None = None
) -> dict[Position, str]:
    """Classes P/L/R/N from the two move-first predicates.

    L means Left wins no matter who starts; N means the first mover wins;
    P the second.  Positions themselves are unrestricted here.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    _guard(k, bound, max_entries)
    buckets = defaultdict(list)
    for pos in _positions(k, bound):
        buckets[sum(pos)].append(pos)
    has_black: dict[Position, bool] = {}
    has_white: dict[Position, bool] = {}
    wins_first: dict[tuple[Position, Player], bool] = {}
    for total in sorted(buckets):
        for pos in buckets[total]:
            has_black[pos] = any(heap_is_black(coloring, s) for s in pos)
            has_white[pos] = any(not heap_is_black(coloring, s) for s in pos)
            for player in (Player.LEFT, Player.RIGHT):
                ok = has_white if player is Player.LEFT else has_black
                win = False
                for i, size in enumerate(pos):
                    if i and size == pos[i - 1]:
                        continue
                    rest = list(pos[:i] + pos[i + 1:])
                    for new in range(size):
                        t = tuple(sorted(rest + [new]))
                        if ok[t] and not wins_first[(t, player.opponent)]:
                            win = True
                            break
                    if win:
                        break
                wins_first[(pos, player)] = win
    classes: dict[Position, str] = {}
    for pos in _positions(k, bound):
        l = wins_first[(pos, Player.LEFT)]
        r = wins_first[(pos, Player.RIGHT)]
        classes[pos] = {(False, False): "P", (True, True): "N",
                        (True, False): "L", (False, True): "R"}[(l, r)]
    return classes


# -- shared tables ---------------------------------------------------------------

_table_cache: dict[tuple[GameSpec, int], OutcomeTable] = {}
_cache_lock = threading.Lock()


def cached_outcome_table(
    spec: GameSpec, bound: int, *, max_entries: int | None = None
) -> OutcomeTable:
    """Outcome table shared across callers; finished tables are immutable."""
    key = (spec, bound)
    with _cache_lock:
        hit = _table_cache.get(key)
    if hit is not None:
        return hit
    table = outcome_table(spec, bound, max_entries=max_entries)
    with _cache_lock:
        return _table_cache.setdefault(key, table)


def clear_table_cache() -> None:
    with _cache_lock:
        _table_cache.clear()


# -- exports ---------------------------------------------------------------------

def tables_to_csv(outcome: OutcomeTable, grundy: GrundyTable) -> str:
    """CSV "x1,...,xk,outcome,grundy" in canonical lexicographic row order;
    the grundy column is blank for illegal positions."""
    if outcome.spec != grundy.spec or outcome.bound != grundy.bound:
        raise ValueError("outcome and grundy tables describe different boxes")
    k = outcome.spec.k
    lines = [",".join(f"x{i + 1}" for i in range(k)) + ",outcome,grundy"]
    for pos, verdict in outcome.entries.items():
        g = grundy.entries.get(pos)
        lines.append(
            ",".join(str(s) for s in pos)
            + f",{verdict},{'' if g is None else g}"
        )
    return "\n".join(lines) + "\n"


def partizan_to_csv(classes: dict[Position, str], k: int) -> str:
    lines = [f"# convention: {PARTIZAN_CONVENTION}"]
    lines.append(",".join(f"x{i + 1}" for i in range(k)) + ",class")
    for pos in sorted(classes):
        lines.append(",".join(str(s) for s in pos) + f",{classes[pos]}")
    return "\n".join(lines) + "\n"
