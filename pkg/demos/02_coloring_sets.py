"""The black-index sets S and the complementary-sequence check.

A coloring set decides which token heights are black.  Four flavors exist:
integer multiples, Beatty sets of an irrational, rational floors, and
explicit finite sets.  Membership and direct generation are independent
code paths that must agree.
"""

from bwnim import (
    BeattyIrrational,
    Explicit,
    Modular,
    QuadraticIrrational,
    RationalBeatty,
    parse_coloring,
    verify_complementary,
)

beta = QuadraticIrrational.parse("(1+1*sqrt(2))/1")

for s in (Modular(3), BeattyIrrational(beta), RationalBeatty(5, 2),
          Explicit((2, 5, 9))):
    print(f"{s.spec_string():28s} prefix(20) = {s.prefix(20)}")

s = BeattyIrrational(beta)
print("7 in beatty set:", s.contains(7), " 5 in beatty set:", s.contains(5))

# two floor sequences are complementary when 1/alpha + 1/beta = 1
alpha = beta.complement()
print("alpha sequence:", [alpha.floor_times(n) for n in range(1, 12)])
print("beta sequence: ", [beta.floor_times(n) for n in range(1, 8)])
print("coverage check:", verify_complementary(alpha, beta, 10**4))

# a sequence cannot complement itself
print("self pairing:  ", verify_complementary(beta, beta, 3))

# the CLI/service grammar round-trips
print("parsed:", parse_coloring("beatty:(1+1*sqrt(2))/1").spec_string())
