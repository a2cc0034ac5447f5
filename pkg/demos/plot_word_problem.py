"""
Normal forms and conjugacy
==========================

Two words in the braid group are compared through their left normal forms,
and conjugacy is decided on super summit sets.
"""

from braidband import BraidWord, conjugacy_test, conjugate, normal_form, parse_word, words_equal

# The braid relation: 1 2 1 and 2 1 2 give the same normal form.
a = parse_word("1 2 1", 3)
b = parse_word("2 1 2", 3)
print(normal_form(a))
print(normal_form(b))
print("equal:", words_equal(a, b))

# Negative letters pull in powers of Delta^-1.
print(normal_form(parse_word("-1 2 -1 -2", 3)))

###############################################################################
# Conjugate a braid by some word, then ask for a conjugator back.  The
# returned witness g satisfies g a g^-1 = b.

x = parse_word("1 2 2 -3", 4)
g = parse_word("3 -1 2", 4)
y = conjugate(x, g)
ok, witness = conjugacy_test(x, y)
print("conjugate:", ok, "witness:", witness)
print("witness checks out:", words_equal(conjugate(x, witness), y))

# Writhe differs, so these are not conjugate.
print(conjugacy_test(BraidWord(3, (1,)), BraidWord(3, (-2,))))
