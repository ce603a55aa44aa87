"""Tour of the word algebra in G*<t>.

Words live in the free product of a free group G (lowercase letters, with
uppercase meaning inverse) and an infinite cyclic group generated by the
stable letter t.  Everything downstream is built on the handful of
operations shown here.
"""
from onerelator import (
    blocks,
    coefficients,
    conjugacy_canonical,
    cyclic_reduce,
    exponent_sum,
    free_alphabet,
    is_conjugate_to_gt,
    parse_word,
    t_shape,
)

alphabet = free_alphabet(3)  # {a, b, c}; t is always implicit

w = parse_word("bTatct", alphabet)
print(f"word           {w}")
print(f"exponent sum   {exponent_sum(w)}")
print(f"t-shape        {t_shape(w)}")
print(f"coefficients   {[str(g) for g in coefficients(w)]}")

head, blks = blocks(w)
print(f"blocks         head={head}, then {[(q, str(g)) for q, g in blks]}")

# cyclic reduction rotates a mixed word into coefficient-first, t-last form
messy = parse_word("A b t a T a", alphabet)
reduced, u = cyclic_reduce(messy)
print(f"\ncyclic reduce  {messy} -> {reduced} (conjugator {u})")
assert u.inverse() * reduced * u == messy

# conjugacy classes get a canonical representative: the least rotation
for text in ("btaT", "aTbt", "taTb"):
    v = parse_word(text, alphabet)
    print(f"canonical({v})  = {conjugacy_canonical(v)}")

# relators of the form g t^(+-1) are the surjective (collapsing) case
for text in ("cat C", "atbT"):
    v = parse_word(text, alphabet)
    print(f"gt-form({v})    = {is_conjugate_to_gt(v)}")
