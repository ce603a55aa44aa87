"""Kernel canonical forms, level strata and the standard decomposition.

A word with zero t-exponent sum factors uniquely as a product of conjugates
g^(t^level); the multiset of levels places it in the strata H, H', J, X, Y, Z
for a parameter m.  Every exponent-sum-one word is then conjugate to
b0 a0^t b1 a1^t ... c t with the b's in X, the a's (shifted) in Z and c in J.
"""
from onerelator import (
    build_two_variable_word,
    free_alphabet,
    kernel_canonical_form,
    lemma2_decompose,
    level_bounds,
    parse_word,
    stratum_membership,
    substitute_aux,
)

alphabet = free_alphabet(3)

k = kernel_canonical_form(parse_word("TatA", alphabet))
print(f"kernel form    {k}")
print(f"level bounds   {level_bounds(k)}")
flags = stratum_membership(k, 2)
print(f"strata (m=2)   h={flags.h} h'={flags.h_prime} j={flags.j} "
      f"x={flags.x} y={flags.y} z={flags.z}")

w = parse_word("bTatct", alphabet)
d = lemma2_decompose(w)
print(f"\nword           {w}")
print(f"m              {d.m}")
print(f"pairs (b, a)   {[(str(b), str(a)) for b, a in d.pairs]}")
print(f"tail c         {d.c}")
print(f"conjugator     {d.conjugator}")
assert d.source() == w  # the decomposition reassembles to a conjugate of w

# the two-variable rewrite replaces a^t with a fresh letter s, exposing the
# word as an element of a rank-two free product
two = build_two_variable_word(d)
print(f"two-variable   {two}")
assert substitute_aux(two, parse_word("t", alphabet)) == d.reassemble()

# a gt-form decomposes with no pairs at all: that is the collapsing case
simple = lemma2_decompose(parse_word("ct", alphabet))
print(f"\ngt-form        pairs={simple.pairs}, c={simple.c}, m={simple.m}")
