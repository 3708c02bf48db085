"""Ground truth by exhaustive backward induction.

Outcome tables classify every position of a bounded box as P (previous
player wins), N (next player wins), or Illegal; Grundy tables refine the
legal ones.  Legality couples the heaps, so these are whole-graph values:
positions here do not decompose as disjunctive sums.
"""

from bwnim import (
    Modular,
    QuadraticIrrational,
    BeattyIrrational,
    black_white_spec,
    grundy_table,
    nim_xor_check,
    outcome_table,
    winning_moves,
)

spec = black_white_spec(Modular(2), 2)
table = outcome_table(spec, 10)
print("P positions, multiples-of-2 coloring, M=10:")
print("  ", table.p_positions())

g = grundy_table(spec, 10)
print("grundy of (1,2):", g.entries[(1, 2)], " of (2,2):", g.entries[(2, 2)])
print("one empty heap plays as plain Nim: G(0,x) =",
      [g.entries[(0, x)] for x in range(11)])

# with an empty heap on board the coloring stops mattering entirely
ok = all(
    (table.entries[pos] == "P") == nim_xor_check(pos)
    for pos in table.entries
    if 0 in pos and table.entries[pos] != "Illegal"
)
print("empty-heap positions follow the xor law:", ok)

print("winning replies at (2,2):",
      [m.target for m in winning_moves(spec, (2, 2))])

beta = QuadraticIrrational.parse("(1+1*sqrt(2))/1")
spec_b = black_white_spec(BeattyIrrational(beta), 2)
print("P positions, beatty coloring, M=12:",
      outcome_table(spec_b, 12).p_positions())
