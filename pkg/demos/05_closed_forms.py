"""Closed-form P tests and constructive strategies, cross-validated.

Both solved two-heap families share one shape: the m-th P position pairs
the m-th member of S with the m-th member of its complement, plus (0,0).

For S = multiples of beta the complement is the non-multiples in order, so
the pairs are (beta*n + t, beta*((beta-1)*n + t)).  Note the (beta-1):
the superficially similar pairing (beta*n + t, beta*(n + t)) coincides with
this one at beta = 2 but is provably wrong for beta >= 3; exhaustive search
rejects it (its smallest false P at beta = 3 is (4,6), which has the
winning move to the true P position (2,6)).

For S = floors of an irrational beta > 2 the complement is the Beatty
partner alpha = beta/(beta-1), giving pairs (floor(alpha*n), floor(beta*n)).
"""

from bwnim import (
    BeattyIrrational,
    Modular,
    QuadraticIrrational,
    beatty_is_p,
    beatty_winning_move,
    black_white_spec,
    cross_validate,
    modular_is_p,
    modular_winning_move,
)

print("modular beta=3 P pairs:",
      [(n, 3 * (n - n // 3)) for n in range(1, 12) if n % 3],
      "formatted (complement member, 3*rank)")
print("(4,9)  P?", modular_is_p(3, (4, 9)))
print("(4,6)  P?", modular_is_p(3, (4, 6)), " <- the weaker pairing calls this P")
print("win from (4,6):", modular_winning_move(3, (4, 6)).target)
print("win from (3,8), beta=2:", modular_winning_move(2, (3, 8)).target)

beta = QuadraticIrrational.parse("(1+1*sqrt(2))/1")
print("beatty (5,7) P?", beatty_is_p(beta, (5, 7)))
print("beatty (2,4) P?", beatty_is_p(beta, (2, 4)),
      "-> play", beatty_winning_move(beta, (2, 4)).target)

# the solver double-checks every verdict and every constructive move
for beta_int in (2, 3, 4, 5):
    spec = black_white_spec(Modular(beta_int), 2)
    report = cross_validate(spec, "modular", 120)
    print(f"modular beta={beta_int}, M=120: {len(report.mismatches)} mismatches,"
          f" {len(report.move_errors)} bad moves,"
          f" {report.positions_checked} positions")

spec = black_white_spec(BeattyIrrational(beta), 2)
report = cross_validate(spec, "beatty", 120)
print(f"beatty 1+sqrt(2), M=120: {len(report.mismatches)} mismatches,"
      f" {len(report.move_errors)} bad moves")
