"""Closed-form P-position tests and constructive winning moves for the two
resolved two-heap families, plus cross-validation against the exhaustive
solver.

Both families share one shape: the m-th P-position pairs the m-th member of
the black set S with the m-th member of its complement (the positive
integers not in S), plus the terminal (0,0).

* Modular family (S = multiples of an integer beta >= 2): the complement is
  the non-multiples in order, so the pairs are (c_m, beta*m) with
  c_m = m + (m-1)//(beta-1).  Equivalently (beta*n + t, beta*((beta-1)*n + t))
  for n >= 0, t in 1..beta-1.
* Beatty family (S = floors of multiples of an irrational beta > 2): the
  complement is floor(alpha*n) with 1/alpha + 1/beta = 1, so the pairs are
  (floor(alpha*n), floor(beta*n)) for n >= 0.

In both cases a position with an empty heap plays as plain one-heap Nim, so
the xor move handles that regime before the pair forms apply.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .coloring import BeattyIrrational, Modular
from .exactnum import QuadraticIrrational
from .gamecore import (
    BlackWhite,
    GameSpec,
    Move,
    Position,
    _lowering,
    canonical,
    is_legal,
)
from .solver import OUTCOME_ILLEGAL, OUTCOME_P, outcome_table


# -- modular family -------------------------------------------------------------

def nonmultiple_rank(beta: int, value: int) -> int:
    """Index of value within the ascending non-multiples of beta (1-based);
    value must not be a multiple."""
    if value <= 0 or value % beta == 0:
        raise ValueError("value must be a positive non-multiple")
    return value - value // beta


def nonmultiple_member(beta: int, index: int) -> int:
    """The index-th positive integer that is not a multiple of beta."""
    if index < 1:
        raise ValueError("index must be >= 1")
    return index + (index - 1) // (beta - 1)


def _require_two_heaps(pos: Position) -> tuple[int, int]:
    if len(pos) != 2:
        raise ValueError("closed forms cover two heaps only")
    lo, hi = sorted(pos)
    return lo, hi


def modular_is_p(beta: int, pos) -> bool:
    """Closed-form P test for S = multiples of beta (beta >= 2 integer)."""
    if beta < 2:
        raise ValueError("beta must be an integer >= 2")
    lo, hi = _require_two_heaps(canonical(pos))
    if lo == 0:
        return hi == 0
    if lo % beta == 0:
        return False
    return hi == beta * nonmultiple_rank(beta, lo)


def modular_winning_move(beta: int, pos) -> Move:
    """A move onto a closed-form P position, from any legal N position.

    Ladder: an empty heap plays the Nim xor move; with a multiple beta*i on
    board and a non-multiple y of rank m, lower the multiple to beta*m when
    m < i, else lower y to the i-th non-multiple; with two multiples, lower
    the larger onto the i-th non-multiple of the smaller's index.
    """
    if beta < 2:
        raise ValueError("beta must be an integer >= 2")
    pos = canonical(pos)
    lo, hi = _require_two_heaps(pos)
    if modular_is_p(beta, pos):
        raise ValueError("no winning move exists")
    if lo == 0:
        return Move(pos, (0, 0), hi, 0)
    multiples = [v for v in (lo, hi) if v % beta == 0]
    if not multiples:
        raise ValueError("position violates color rule")
    if len(multiples) == 2:
        i = lo // beta
        c = nonmultiple_member(beta, i)
        return Move(pos, canonical((lo, c)), hi, c)
    x = multiples[0]
    y = lo if x == hi else hi
    i = x // beta
    m = nonmultiple_rank(beta, y)
    if m < i:
        return Move(pos, canonical((y, beta * m)), x, beta * m)
    # m == i would make the position P, excluded above
    c = nonmultiple_member(beta, i)
    return Move(pos, canonical((c, x)), y, c)


# -- Beatty family ----------------------------------------------------------------

def beatty_index(beta: QuadraticIrrational, v: int) -> Optional[int]:
    """The n with floor(beta*n) = v, or None when v is not in the sequence.

    The only candidate is floor(v/beta) + 1, computed exactly."""
    if v < 1:
        raise ValueError("v must be >= 1")
    if beta.compare(1) <= 0:
        raise ValueError("beta must exceed 1")
    n = beta.reciprocal().floor_times(v) + 1
    return n if beta.floor_times(n) == v else None


def _beatty_pair(beta: QuadraticIrrational):
    if beta.is_rational:
        raise ValueError("beta must be irrational")
    if beta.compare(2) <= 0:
        raise ValueError("beta must exceed 2")
    return beta.complement()


def beatty_is_p(beta: QuadraticIrrational, pos) -> bool:
    """Closed-form P test for S = floors of beta-multiples, beta > 2
    irrational: P positions are (floor(alpha*n), floor(beta*n))."""
    alpha = _beatty_pair(beta)
    lo, hi = _require_two_heaps(canonical(pos))
    if lo == 0:
        return hi == 0
    n = beatty_index(beta, hi)
    return n is not None and alpha.floor_times(n) == lo


def beatty_winning_move(beta: QuadraticIrrational, pos) -> Move:
    """A move onto a closed-form P position, from any legal N position.

    Each positive coordinate sits in exactly one of the two complementary
    sequences; comparing the two indices tells which heap to lower onto the
    pair with the smaller index.
    """
    alpha = _beatty_pair(beta)
    pos = canonical(pos)
    lo, hi = _require_two_heaps(pos)
    if beatty_is_p(beta, pos):
        raise ValueError("no winning move exists")
    if lo == 0:
        return Move(pos, (0, 0), hi, 0)

    lo_b, hi_b = beatty_index(beta, lo), beatty_index(beta, hi)
    lo_a = None if lo_b is not None else beatty_index(alpha, lo)
    hi_a = None if hi_b is not None else beatty_index(alpha, hi)

    if lo_a is not None and hi_a is not None:
        raise ValueError("position violates color rule")
    if lo_b is not None and hi_b is not None:
        # both heaps in S; pair the smaller index n and lower the larger heap
        n = lo_b
        return Move(pos, canonical((alpha.floor_times(n), lo)), hi,
                    alpha.floor_times(n))
    a_value, a_idx = (lo, lo_a) if lo_a is not None else (hi, hi_a)
    b_value, b_idx = (lo, lo_b) if lo_b is not None else (hi, hi_b)
    if a_idx > b_idx:
        # complement heap outranks the S heap: lower it onto the S heap's pair
        new = alpha.floor_times(b_idx)
        return Move(pos, canonical((new, b_value)), a_value, new)
    # S heap outranks: lower it onto the complement heap's pair
    new = beta.floor_times(a_idx)
    return Move(pos, canonical((a_value, new)), b_value, new)


# -- cross-validation ---------------------------------------------------------------

@dataclass
class OracleReport:
    """Agreement record between a closed form and the exhaustive solver."""

    spec: str
    oracle: str
    bound: int
    positions_checked: int
    mismatches: list[dict] = field(default_factory=list)
    move_errors: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0
    notes: str = ""

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.move_errors

    def to_json(self) -> str:
        payload = {
            "spec": self.spec,
            "oracle": self.oracle,
            "bound": self.bound,
            "positions_checked": self.positions_checked,
            "mismatch_count": len(self.mismatches),
            "mismatches": self.mismatches,
            "move_error_count": len(self.move_errors),
            "move_errors": self.move_errors,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "notes": self.notes,
        }
        return json.dumps(payload, sort_keys=True)


def oracle_for_spec(spec: GameSpec):
    """(name, is_p, winning_move) for specs a closed form covers, else None."""
    if spec.k != 2 or not isinstance(spec.rules, BlackWhite):
        return None
    coloring = spec.rules.coloring
    if isinstance(coloring, Modular):
        beta = coloring.beta
        return (
            "modular",
            lambda pos: modular_is_p(beta, pos),
            lambda pos: modular_winning_move(beta, pos),
        )
    if isinstance(coloring, BeattyIrrational) and coloring.beta.compare(2) > 0:
        beta = coloring.beta
        return (
            "beatty",
            lambda pos: beatty_is_p(beta, pos),
            lambda pos: beatty_winning_move(beta, pos),
        )
    return None


def _cross_validate(
    spec: GameSpec,
    bound: int,
    is_p: Callable[[Position], bool],
    winning_move: Optional[Callable[[Position], Move]],
    oracle_name: str,
    notes: str = "",
) -> OracleReport:
    started = time.perf_counter()
    table = outcome_table(spec, bound)
    report = OracleReport(
        spec=spec.describe(), oracle=oracle_name, bound=bound,
        positions_checked=0, notes=notes,
    )
    for pos, verdict in table.entries.items():
        if verdict == OUTCOME_ILLEGAL:
            continue
        report.positions_checked += 1
        oracle_p = is_p(pos)
        solver_p = verdict == OUTCOME_P
        if oracle_p != solver_p:
            report.mismatches.append({
                "position": list(pos),
                "oracle": "P" if oracle_p else "N",
                "solver": "P" if solver_p else "N",
            })
            continue
        if not oracle_p and winning_move is not None:
            move = winning_move(pos)
            target_ok = is_p(move.target)
            legal_ok = (
                move.source == pos
                and move.heap_from in pos
                and move.heap_to < move.heap_from
                and move.target == _lowering(pos, move.heap_from, move.heap_to)
                and is_legal(spec, move.target)
            )
            if not (target_ok and legal_ok):
                report.move_errors.append({
                    "position": list(pos),
                    "target": list(move.target),
                    "target_is_p": target_ok,
                    "move_is_legal": legal_ok,
                })
    report.elapsed_ms = (time.perf_counter() - started) * 1000.0
    return report


def cross_validate(spec: GameSpec, oracle: str, bound: int) -> OracleReport:
    """Compare a closed form against the solver on every legal position of
    the box, and check every constructive move lands on a closed-form P."""
    found = oracle_for_spec(spec)
    if found is None or found[0] != oracle:
        raise ValueError(f"spec {spec.describe()!r} has no {oracle!r} closed form")
    name, is_p, move = found
    return _cross_validate(spec, bound, is_p, move, name)
