"""
Piecewise-linear profiles
=========================

Profiles are exact piecewise-linear functions on [0, 1] with slopes in
{-n, -n+2, ..., n}.  When f(0) = -1 the distance from the trivial line
n(t - 1) is largest at an endpoint.
"""

from fractions import Fraction

from braidband import endpoint_max_holds, make_profile, max_gap, random_admissible, trivial_profile
from braidband.annular_pl import gap

f = trivial_profile(3)
print([str(f(t)) for t in (0, Fraction(1, 2), 1)], max_gap(f))

# A zig-zag on three strands.
g = make_profile(3, [0, Fraction(1, 4), Fraction(1, 2), 1], [-1, Fraction(-1, 4), Fraction(-1, 2), 1])
value, where = max_gap(g)
print("max gap", value, "at t =", where, "| gap at 0:", gap(g, 0), "| endpoint max:", endpoint_max_holds(g))

###############################################################################
# Random profiles never beat the endpoints.

bad = 0
for n in range(2, 7):
    for seed in range(500):
        bad += not endpoint_max_holds(random_admissible(n, 5, seed, fixed_start=-1))
print("counterexamples:", bad)

# Slopes off the lattice are rejected.
try:
    make_profile(3, [0, 1], [-1, -1])
except ValueError as exc:
    print("rejected:", exc)
