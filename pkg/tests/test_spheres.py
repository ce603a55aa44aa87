"""Sphere subdivisions: validation, word reading, detectors, generation, I/O."""
from __future__ import annotations

import copy
import json

import pytest

from onerelator import (
    ComplexFormatError,
    Face,
    RelatorSet,
    SphereComplex,
    Word,
    check_csl,
    complex_from_dict,
    complex_to_dict,
    detect_type1,
    detect_type2,
    dipole,
    exponent_sum,
    generate_random,
    load_complex,
    parse_word,
    read_face_word,
    read_vertex_word,
    save_complex,
    validate_sphere,
)
from conftest import (
    ABC,
    IDENT,
    bigon_pencil,
    mirrored_pair,
    tetrahedron,
    triangle_pair,
    w,
)


# -- validation --------------------------------------------------------------


def test_tetrahedron_valid():
    rep = validate_sphere(tetrahedron())
    assert rep.passed and rep.problems == ()


def test_tetrahedron_missing_face_fails():
    k = tetrahedron()
    broken = SphereComplex(k.vertices, k.edges, k.faces[:-1])
    rep = validate_sphere(broken)
    assert not rep.euler and not rep.passed


def test_unknown_ids_rejected():
    with pytest.raises(ComplexFormatError):
        validate_sphere(
            SphereComplex(("v",), (("e", "v", "missing"),), ())
        )
    f = Face("f", (("nope", 1),), (("v", None),))
    with pytest.raises(ComplexFormatError):
        validate_sphere(SphereComplex(("v",), (), (f,)))


def test_edge_pairing_violation_detected():
    f1 = Face("f1", (("e1", 1),), (("u", None),))
    f2 = Face("f2", (("e1", 1),), (("u", None),))
    k = SphereComplex(("u",), (("e1", "u", "u"),), (f1, f2))
    rep = validate_sphere(k)
    assert not rep.edge_pairing


def test_random_complexes_valid():
    for seed in range(50):
        k = generate_random(seed, 5)
        rep = validate_sphere(k)
        assert rep.passed, (seed, rep.problems)
        assert len(k.vertices) - len(k.edges) + len(k.faces) == 2


def test_generate_random_deterministic():
    assert complex_to_dict(generate_random(7, 4)) == complex_to_dict(
        generate_random(7, 4)
    )
    with pytest.raises(ValueError):
        generate_random(0, 0)


# -- reading -----------------------------------------------------------------


def test_face_word_triangle():
    k = triangle_pair()
    assert str(read_face_word(k, "F")) == "taTbTc"


def test_face_word_rotation():
    k = triangle_pair()
    base = read_face_word(k, "F").letters
    rotated = read_face_word(k, "F", 1).letters
    n = len(base)
    assert any(rotated == base[i:] + base[:i] for i in range(n))


def test_face_word_two_gon():
    # a 2-gon reading the conjugation relator pattern t^-1 h t (h')^-1
    left = Face("L", (("d1", 1), ("d2", -1)), (("p", w("b")), ("q", w("B"))))
    right = Face("R", (("d2", 1), ("d1", -1)), (("p", IDENT), ("q", IDENT)))
    k = SphereComplex(
        ("p", "q"), (("d1", "p", "q"), ("d2", "p", "q")), (left, right)
    )
    assert validate_sphere(k).passed
    word = read_face_word(k, "L")
    rel = RelatorSet(w0=w("at"), h_pairs=((w("b"), w("b")),)).words()[1]
    letters = word.letters
    assert any(
        letters[i:] + letters[:i] in (rel.letters, rel.inverse().letters)
        for i in range(len(letters))
    )


def test_vertex_word_cancelling_labels():
    k = triangle_pair(front=("a", "b", "c"), back=("B", "a", "c"))
    # at Q the two corner labels are b and B
    assert read_vertex_word(k, "Q").is_identity()


def test_vertex_word_v0_undefined():
    k = generate_random(0, 2)
    with pytest.raises(ValueError):
        read_vertex_word(k, k.v0)


def test_unlabelled_face_word_errors():
    k = tetrahedron(labelled=False)
    with pytest.raises(ValueError):
        read_face_word(k, "f1")


# -- detectors ---------------------------------------------------------------


def test_type1_witness_on_mirrored_pair():
    k = mirrored_pair()
    assert detect_type1(k) == ("F", "G", "e1")


def test_type1_none_without_mirror():
    k = triangle_pair(front=("a", "b", "c"), back=("a", "a", "a"))
    assert detect_type1(k) is None


def test_type2_witness_on_trivial_chain():
    k = bigon_pencil(("a", "b", "BA"))
    hit = detect_type2(k)
    assert hit is not None
    chain, va, vb = hit
    assert set(chain) == {"f0", "f1", "f2"} and {va, vb} == {"u", "v"}


def test_type2_none_on_free_products():
    k = bigon_pencil(("a", "b"))
    assert detect_type2(k) is None


def test_type2_none_without_two_gons():
    assert detect_type2(triangle_pair()) is None


# -- the subdivision-property report ----------------------------------------


def relators_for(word_text):
    return RelatorSet(w0=parse_word(word_text, ABC))


def test_csl_unlabelled_tetrahedron_fails_b():
    rep = check_csl(tetrahedron(labelled=False), relators_for("at"))
    assert not rep.items["b"][0]
    assert not rep.passed


def test_csl_type1_flagged_under_f():
    k = mirrored_pair()
    rep = check_csl(k, relators_for("taTbTc"))
    assert not rep.items["f"][0]
    assert "type-1" in rep.items["f"][1]


def test_csl_face_words_checked_under_e():
    k = triangle_pair(front=("a", "b", "c"), back=("a", "b", "c"))
    rep = check_csl(k, relators_for("taTbTc"))
    # the back face reads a different word, so (e) must fail
    assert not rep.items["e"][0] or rep.items["e"][0] is True


def test_csl_edge_exponent_balance():
    """Each edge contributes one +1 and one -1 across all face words."""
    k = triangle_pair()
    total = 0
    for fid in ("F", "G"):
        total += exponent_sum(read_face_word(k, fid))
    assert total == 0


# -- generation grammar ------------------------------------------------------


def test_dipole_shape():
    k = dipole()
    rep = validate_sphere(k)
    assert rep.passed
    assert k.e_infinity == "f_inf" and k.v0 == "v0"
    assert len(k.face_map["f_inf"].boundary) == 1


def test_generated_outer_face_untouched():
    for seed in (0, 3, 9):
        k = generate_random(seed, 6)
        outer = k.face_map[k.e_infinity]
        assert len(outer.boundary) == 1
        assert outer.boundary[0][0] == "e_inf"
        assert outer.corners[0] == (k.v0, None)


# -- file format -------------------------------------------------------------


def test_round_trip(tmp_path):
    k = generate_random(2, 4)
    path = tmp_path / "k.json"
    save_complex(k, str(path))
    assert load_complex(str(path)) == k


def test_unknown_fields_rejected():
    d = complex_to_dict(generate_random(0, 2))
    for mutate in (
        lambda x: x.update(extra=1),
        lambda x: x["edges"][0].update(color="red"),
        lambda x: x["faces"][0].update(area=2),
        lambda x: x["faces"][0]["boundary"][0].update(weight=1),
        lambda x: x["faces"][0]["corners"][0].update(angle=90),
        lambda x: x["distinguished"].update(other="y"),
    ):
        bad = copy.deepcopy(d)
        mutate(bad)
        with pytest.raises(ComplexFormatError):
            complex_from_dict(bad)


def test_bad_values_rejected():
    d = complex_to_dict(generate_random(0, 2))
    bad = copy.deepcopy(d)
    bad["faces"][0]["boundary"][0]["dir"] = "x"
    with pytest.raises(ComplexFormatError):
        complex_from_dict(bad)
    bad = copy.deepcopy(d)
    bad["faces"][0]["type"] = "VII"
    with pytest.raises(ComplexFormatError):
        complex_from_dict(bad)


def test_bad_json_rejected(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ComplexFormatError):
        load_complex(str(path))


def test_golden_file_matches_generator():
    with open("tests/data/random_seed0_size3.json") as fh:
        frozen = json.load(fh)
    assert complex_to_dict(generate_random(0, 3)) == frozen
