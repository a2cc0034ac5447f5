"""
Bands and band rank
===================

A band is a conjugate w sigma_1^{+-1} w^-1.  Every generator is a band, and
the band rank counts how few bands a braid needs.
"""

from braidband import band_rank_bracket, band_word, parse_word, standard_band, words_equal
from braidband.garside import is_band

# sigma_3 in B_5 is the band with conjugator (2 3)(1 2).
b = standard_band(3, 5)
print("conjugator:", b.conjugator, " band word:", band_word(b))
print("equals sigma_3:", words_equal(band_word(b), parse_word("3", 5)))

# Recognizing a band from an arbitrary word.
print(is_band(parse_word("-3 2 1 -2 3", 4)))
print(is_band(parse_word("1 1", 4)))

###############################################################################
# The lower bound max(n - components, |writhe|) against explicit
# presentations.  For sigma_1 ... sigma_{n-1} the bracket closes at n - 1.

for n in range(2, 6):
    w = parse_word(" ".join(str(i) for i in range(1, n)), n)
    r = band_rank_bracket(w)
    print(n, r.lower, r.upper, "exact" if r.exact else "")

# The figure-eight knot is not ribbon, so it has no 2-band presentation in
# B_3 and parity forces 4.  The counting bound only sees 2, so the bracket
# stays open.
r = band_rank_bracket(parse_word("1 -2 1 -2", 3))
print(r.to_json())
