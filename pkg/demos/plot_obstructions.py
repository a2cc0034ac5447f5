"""
The obstruction framework
=========================

An invariant phi that is conjugation invariant, grows by one under
stabilization and never exceeds the band rank obstructs ribbonness as soon
as phi > n - 1 on some knot representative.
"""

from braidband import BraidWord, check_properties, finite_order_writhe_filter, ribbon_obstruction, slice_consistency
from braidband.annular_pl import random_admissible
from braidband.obstruction import abs_writhe_phi, components_phi, endpoint_phi, profile_gap_phi, writhe_phi

samples = [BraidWord(2, (1, 1, 1)), BraidWord(3, (1, -2)), BraidWord(4, (1, 2, -3, 2))]

# The signed writhe is not stable under negative stabilization.
for r in check_properties(writhe_phi(), samples).to_json()["properties"]:
    print(r["property"], r["status"], r["counterexample"] or "")

###############################################################################
# The trefoil is not slice: |writhe| = 3 > 1 at q = 0.

trefoil = BraidWord(2, (1, 1, 1))
print(finite_order_writhe_filter(trefoil))
for row in slice_consistency(abs_writhe_phi(), trefoil, 2).to_json()["rows"]:
    print(row)

# With s = 2 the endpoint invariant is 3 > 1.
print(ribbon_obstruction(endpoint_phi(2), trefoil).verdict)
print(ribbon_obstruction(components_phi(), trefoil).verdict)

###############################################################################
# A profile starting at -1 whose end equals the writhe gives nothing new.

fig8 = BraidWord(3, (1, -2, 1, -2))
f = random_admissible(3, 4, seed=11, fixed_start=-1, fixed_end=0)
print(ribbon_obstruction(profile_gap_phi(f), fig8).to_json())
