"""
A braided banded surface
========================

Disks D_1, ..., D_4 with a single band attached along w sigma_1 w^-1 where
w = sigma_3^-1 sigma_2.  The free end of the band travels from D_2 to D_4
and punctures D_3 on the way.
"""

import json

from braidband import Band, BandPresentation, BraidWord, build_surface, ribbon_summary
from braidband.bands import letter_presentation
from braidband.surface import band_trajectory

w = BraidWord(4, (-3, 2))
p = BandPresentation(4, (Band(4, w, 1),))
s = build_surface(p)

for step in band_trajectory(w):
    print(f"D{step.start} -> D{step.position}", "over" if step.over else "under")

print(json.dumps(ribbon_summary(s), indent=2))

###############################################################################
# Letter-by-letter presentations of positive braids give embedded surfaces:
# every band is a standard band and nothing is pierced.

fence = build_surface(letter_presentation(BraidWord(6, (1, 2, 3, 4, 5))))
print("singularities:", fence.total_singularities(), " chi:", fence.euler_characteristic())
