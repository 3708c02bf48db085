"""Tiny naive implementations used as independent cross-checks.

Everything here favors obviousness over speed: plain recursion with
memoization, no sharing with the package internals.  Keep boxes small.
"""

from functools import lru_cache
from itertools import combinations_with_replacement


def naive_outcomes(legal, k, bound):
    """{canonical pos: 'P'|'N'|'Illegal'} by direct recursion.

    `legal` is a predicate on sorted tuples.
    """

    @lru_cache(maxsize=None)
    def wins(pos):
        for i in range(k):
            for v in range(pos[i]):
                tgt = tuple(sorted(pos[:i] + (v,) + pos[i + 1:]))
                if legal(tgt) and not wins(tgt):
                    return True
        return False

    out = {}
    for pos in combinations_with_replacement(range(bound + 1), k):
        if not legal(pos):
            out[pos] = "Illegal"
        else:
            out[pos] = "N" if wins(pos) else "P"
    return out


def naive_grundy(legal, k, bound):
    """{canonical pos: grundy value} for legal positions, by direct recursion."""

    @lru_cache(maxsize=None)
    def g(pos):
        seen = set()
        for i in range(k):
            for v in range(pos[i]):
                tgt = tuple(sorted(pos[:i] + (v,) + pos[i + 1:]))
                if legal(tgt):
                    seen.add(g(tgt))
        value = 0
        while value in seen:
            value += 1
        return value

    return {
        pos: g(pos)
        for pos in combinations_with_replacement(range(bound + 1), k)
        if legal(pos)
    }


def naive_partizan(is_black_heap, k, bound):
    """{canonical pos: 'P'|'L'|'R'|'N'} under normal play.

    Left must leave a white heap, Right a black one; `is_black_heap` maps a
    size to a bool.
    """

    def has_black(pos):
        return any(is_black_heap(s) for s in pos)

    def has_white(pos):
        return any(not is_black_heap(s) for s in pos)

    @lru_cache(maxsize=None)
    def wins_first(pos, left_to_move):
        ok = has_white if left_to_move else has_black
        for i in range(k):
            for v in range(pos[i]):
                tgt = tuple(sorted(pos[:i] + (v,) + pos[i + 1:]))
                if ok(tgt) and not wins_first(tgt, not left_to_move):
                    return True
        return False

    out = {}
    for pos in combinations_with_replacement(range(bound + 1), k):
        l, r = wins_first(pos, True), wins_first(pos, False)
        out[pos] = {(False, False): "P", (True, True): "N",
                    (True, False): "L", (False, True): "R"}[(l, r)]
    return out


def naive_mex(values):
    values = sorted(set(values))
    m = 0
    for v in values:
        if v == m:
            m += 1
        elif v > m:
            break
    return m
