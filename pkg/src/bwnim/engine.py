"""Move selection for live play.

From a winning position the engine plays a closed-form constructive move
when one covers the spec, otherwise any solver-backed winning move (the
first in canonical target order).  From a losing position it plays a fixed
delaying move so behavior stays deterministic: take one token off the
largest heap if that is legal, else the legal move removing the fewest
tokens (ties broken toward the larger heap, then canonical target order).
"""

from __future__ import annotations

from .gamecore import GameSpec, Move, canonical, legal_moves
from .oracles import oracle_for_spec
from .solver import OUTCOME_N, cached_outcome_table, winning_moves


def delaying_move(spec: GameSpec, pos) -> Move:
    pos = canonical(pos)
    moves = legal_moves(spec, pos)
    if not moves:
        raise ValueError("game over")
    largest = max(pos)
    for m in moves:
        if m.heap_from == largest and m.heap_to == largest - 1:
            return m
    return min(moves, key=lambda m: (m.heap_from - m.heap_to, -m.heap_from, m.target))


def engine_move(spec: GameSpec, pos) -> Move:
    """Best move per the policy above; raises on terminal or illegal input."""
    pos = canonical(pos)
    if all(s == 0 for s in pos):
        raise ValueError("game over")
    oracle = oracle_for_spec(spec)
    if oracle is not None:
        _, is_p, winning = oracle
        if is_p(pos):
            return delaying_move(spec, pos)
        return winning(pos)
    table = cached_outcome_table(spec, max(pos))
    if table.entries[pos] == OUTCOME_N:
        return winning_moves(spec, pos, table)[0]
    return delaying_move(spec, pos)


def self_play(spec: GameSpec, start) -> dict:
    """Engine vs engine from `start`; reports which mover made the last move.

    Returns {"winner": 1 or 2, "moves": [Move, ...]} with movers numbered
    from the player who moved first.
    """
    pos = canonical(start)
    trace: list[Move] = []
    mover = 1
    while legal_moves(spec, pos):
        move = engine_move(spec, pos)
        trace.append(move)
        pos = move.target
        mover = 3 - mover
    return {"winner": 3 - mover, "moves": trace, "final": pos}
