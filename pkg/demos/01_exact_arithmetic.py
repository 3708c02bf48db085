"""Quadratic irrationals with zero rounding error.

Values of the form (p + q*sqrt(d))/r support exact floors of multiples,
exact comparison, and the Beatty complement a = b/(b-1).  No floats anywhere,
so nothing drifts at large n.
"""

from bwnim import QuadraticIrrational, sqrt_of

beta = QuadraticIrrational.parse("(1+1*sqrt(2))/1")
print("beta               =", beta, "~ 2.41421")
print("floor(3 * beta)    =", beta.floor_times(3))

alpha = beta.complement()
print("alpha = beta/(beta-1) =", alpha, "~ 1.70711")
print("1/alpha + 1/beta   =", alpha.reciprocal() + beta.reciprocal())

# the floors stay exact at any scale; a float version would misround
n = 10**18
print(f"floor({n} * beta) =", beta.floor_times(n))

# exact ordering, including embedded rationals
print("alpha < 2          :", alpha < QuadraticIrrational.from_int(2))
print("sqrt(5) complement =", sqrt_of(5).complement())
