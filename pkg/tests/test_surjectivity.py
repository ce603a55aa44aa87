"""Verdicts, collapse witnesses, closure search and finite quotients."""
from __future__ import annotations

import random

import pytest

from onerelator import (
    Presentation,
    QuotientCertificate,
    STABLE,
    Word,
    amenable_shape,
    analyze,
    collapse_isomorphism,
    exponent_sum,
    free_alphabet,
    normal_closure_search,
    one_relator_presentation,
    order_evidence,
    parse_word,
    quotient_certificate,
    t_shape,
    verify_certificate,
)
from onerelator.surjectivity import _reduced_words
from conftest import AB, w


def wab(text):
    return w(text, AB)


# -- presentations and the gt collapse ---------------------------------------


def test_presentation_validation():
    with pytest.raises(ValueError):
        Presentation(generators=("a", "t"), relators=())
    with pytest.raises(ValueError):
        Presentation(generators=("a",), relators=(Word(),))
    with pytest.raises(ValueError):
        Presentation(generators=("a",), relators=(wab("Tat"),))
    pres = one_relator_presentation(wab("AatbA"), 2)
    assert pres.relators[0] == wab("bAt")  # cyclically reduced on entry


def test_collapse_examples():
    c = collapse_isomorphism(wab("at"))
    assert (c.g, c.epsilon, c.t_image) == (wab("a"), 1, wab("A"))
    assert c.verified
    c2 = collapse_isomorphism(wab("abTA"))
    assert (c2.g, c2.epsilon, c2.t_image) == (wab("b"), -1, wab("b"))
    with pytest.raises(ValueError):
        collapse_isomorphism(wab("atbT"))


def test_collapse_random_conjugates():
    rng = random.Random(5)
    pool = [(s, e) for s in ("a", "b", STABLE) for e in (1, -1)]
    for _ in range(50):
        g_raw = [rng.choice([("a", 1), ("a", -1), ("b", 1), ("b", -1)]) for _ in range(rng.randint(0, 3))]
        from onerelator import free_reduce

        g = free_reduce(g_raw)
        u = free_reduce([rng.choice(pool) for _ in range(rng.randint(0, 4))])
        eps = rng.choice([1, -1])
        word = u * g * Word(((STABLE, eps),)) * u.inverse()
        c = collapse_isomorphism(word)
        assert c.verified and c.epsilon == eps


# -- verdicts ----------------------------------------------------------------


def test_analyze_exponent_sum():
    v = analyze(wab("att"), 2)
    assert (v.status, v.reason) == ("NotSurjective", "ExponentSum")
    assert v.evidence["exponent_sum"] == 2
    assert analyze(wab("ab"), 2).reason == "ExponentSum"


def test_analyze_gt_collapse():
    v = analyze(wab("bat B"), 2)
    assert (v.status, v.reason) == ("Surjective", "GtCollapse")
    assert v.evidence["t_image"] == "A"


def test_analyze_main_theorem():
    v = analyze(w("bTatct"), 3)
    assert (v.status, v.reason) == ("NotSurjective", "MainTheorem")
    assert v.evidence["t_shape"] == [-1, 1, 1]
    assert v.evidence["authority"] == "theorem"


def test_analyze_rejects_identity():
    with pytest.raises(ValueError):
        analyze(Word(), 2)


def test_amenable_shapes():
    assert amenable_shape((1,)) == amenable_shape((-1,))
    assert amenable_shape((1,)).amenable and amenable_shape((1,)).known
    assert amenable_shape((-1, 1, 1)).amenable
    assert amenable_shape((-1, 1, -1, 1, 1)).amenable
    unknown = amenable_shape((1, 1))
    assert not unknown.amenable and not unknown.known
    reg = {(1, 1): True, (2,): False}
    hit = amenable_shape((1, 1), reg)
    assert hit.amenable and hit.known
    miss = amenable_shape((2,), reg)
    assert not miss.amenable and miss.known


# -- bounded normal-closure search -------------------------------------------


def product_of(hit, base):
    """Recompute the element from the recorded factors."""
    out = Word()
    for u, sign in hit.factors:
        out = out * (u * (base if sign > 0 else base.inverse()) * u.inverse())
    return out


def test_search_finds_base_word():
    base = wab("at")
    hit = normal_closure_search(base, (1,), 2, 2)
    assert hit is not None
    assert t_shape(hit.element) == (1,)
    assert product_of(hit, base) == hit.element
    assert hit.factors == ((Word(), 1),)


def test_search_inverse_target():
    base = wab("at")
    hit = normal_closure_search(base, (-1,), 2, 2)
    assert hit is not None and t_shape(hit.element) == (-1,)
    assert product_of(hit, base) == hit.element


def test_search_deterministic():
    base = wab("bta")
    h1 = normal_closure_search(base, (1,), 2, 2)
    h2 = normal_closure_search(base, (1,), 2, 2)
    assert h1 == h2 and h1 is not h2


def test_search_exhausts_to_none():
    """No bounded conjugate product of a t t a t a t^-1 has shape (+1)."""
    base = wab("atataT")
    assert normal_closure_search(base, (1,), 3, 3) is None


def test_search_bound_validation():
    with pytest.raises(ValueError):
        normal_closure_search(wab("at"), (1,), 0, 2)
    with pytest.raises(ValueError):
        normal_closure_search(wab("at"), (1,), 2, 0)


def naive_search_exists(base, target, conj_len, products):
    """Existence oracle: plain depth-first product enumeration."""
    symbols = sorted({s for s, _ in base.letters if s != STABLE}) + [STABLE]
    factors = []
    seen = set()
    for u in _reduced_words(symbols, conj_len):
        for sign in (1, -1):
            elem = u * (base if sign > 0 else base.inverse()) * u.inverse()
            if elem.letters not in seen:
                seen.add(elem.letters)
                factors.append(elem)
    target = tuple(target)

    def rec(cur, depth):
        if t_shape(cur) == target and depth > 0:
            return True
        if depth == products:
            return False
        return any(rec(cur * f, depth + 1) for f in factors)

    return rec(Word(), 0)


@pytest.mark.parametrize(
    "text,target",
    [
        ("at", (1,)),
        ("at", (2,)),
        ("at", (1, 1)),
        ("bAt", (1,)),
        ("bAt", (-1,)),
        ("tBB", (2,)),
        ("bAAT", (2,)),
        ("abtAB", (1, -1, 1)),
    ],
)
def test_search_matches_naive_oracle(text, target):
    base = wab(text)
    got = normal_closure_search(base, target, 2, 2)
    expect = naive_search_exists(base, target, 2, 2)
    assert (got is not None) == expect
    if got is not None:
        assert t_shape(got.element) == tuple(target)
        assert product_of(got, base) == got.element


# -- finite permutation quotients --------------------------------------------


def test_certificate_for_nonsurjective_relator():
    """a t^-1 a t t kills no quotient shortcut: t escapes <a> in degree 3."""
    pres = one_relator_presentation(parse_word("aTatt", free_alphabet(1)), 1)
    cert = quotient_certificate(pres, 4)
    assert cert is not None and cert.degree == 3
    assert verify_certificate(pres, cert)
    # the base image subgroup misses t's image by construction
    assert sorted(cert.images) == ["a", STABLE]


def test_no_certificate_for_gt_relator():
    pres = one_relator_presentation(parse_word("at", free_alphabet(1)), 1)
    assert quotient_certificate(pres, 4) is None


def test_verify_rejects_tampering():
    pres = one_relator_presentation(parse_word("aTatt", free_alphabet(1)), 1)
    cert = quotient_certificate(pres, 4)
    n = cert.degree
    ident = tuple(range(n))
    in_subgroup = QuotientCertificate(
        degree=n,
        images={**cert.images, STABLE: cert.images["a"]},
        witness=cert.witness,
    )
    assert not verify_certificate(pres, in_subgroup)
    not_a_perm = QuotientCertificate(
        degree=n, images={**cert.images, "a": (0,) * n}, witness=cert.witness
    )
    assert not verify_certificate(pres, not_a_perm)
    relator_broken = QuotientCertificate(
        degree=4,
        images={"a": (1, 0, 2, 3), STABLE: (0, 1, 3, 2)},
        witness="",
    )
    assert not verify_certificate(pres, relator_broken)


def test_degree_cap():
    pres = one_relator_presentation(parse_word("at", free_alphabet(1)), 1)
    with pytest.raises(ValueError):
        quotient_certificate(pres, 9)
    with pytest.raises(ValueError):
        order_evidence(wab("t"), pres, 9)


def test_order_evidence():
    a1 = free_alphabet(1)
    gt = one_relator_presentation(parse_word("at", a1), 1)
    assert order_evidence(parse_word("t", a1), gt, 4) == 4
    tw = one_relator_presentation(parse_word("aTatt", a1), 1)
    assert order_evidence(parse_word("t", a1), tw, 4) == 3
    with pytest.raises(ValueError):
        order_evidence(parse_word("taT", a1), gt, 4)
