"""Exploration tables for the variants without known closed forms.

Nothing here claims a formula; the tables exist to be stared at.  The
rational family's P pairs do line up with (ceil(alpha*n) - 1, floor(beta*n))
on every box we print, which is the obvious guess by analogy, but the
package asserts no such thing.
"""

from bwnim import (
    Bichromatic,
    BichromaticMode,
    GameSpec,
    Interpretation,
    RationalBeatty,
    Spectrum,
    black_white_spec,
    grundy_table,
    outcome_table,
    partizan_outcomes,
    Modular,
)

# rational beta = 5/2
spec = black_white_spec(RationalBeatty(5, 2), 2)
print("rational 5/2, M=30, P positions:")
print(" ", outcome_table(spec, 30).p_positions())

# spectrum nim, both readings of the feasibility side condition
for interp in Interpretation:
    spec = GameSpec(k=2, rules=Spectrum(2, interp))
    ps = outcome_table(spec, 10).p_positions()
    print(f"spectrum l=2 k=2 [{interp.value}] P:", ps)

# bi-chromatic nim in its three modes
for mode in BichromaticMode:
    spec = GameSpec(k=3, rules=Bichromatic(3, mode))
    g = grundy_table(spec, 8)
    zeros = [p for p, v in g.entries.items() if v == 0]
    print(f"bichromatic l=3 k=3 [{mode.value}]: {len(zeros)} grundy-0 positions"
          f" up to 8, first few {zeros[:5]}")

# partizan coloring game: L wins regardless of mover, R likewise, N first
# mover, P second mover
classes = partizan_outcomes(Modular(2), 2, 8)
from collections import Counter
print("partizan evens, M=8 class counts:", dict(Counter(classes.values())))
print("  (0,1) ->", classes[(0, 1)], "  (2,3) ->", classes[(2, 3)])
