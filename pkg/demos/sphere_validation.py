"""Building, validating and reading labelled sphere subdivisions.

A complex is a combinatorial subdivision of the 2-sphere with oriented
edges and group-labelled face corners.  Faces read boundary words in
G*<t>; vertices read products of the corner labels around their link.
"""
import json

from onerelator import (
    Face,
    SphereComplex,
    Word,
    complex_to_dict,
    detect_type1,
    detect_type2,
    free_alphabet,
    generate_random,
    parse_word,
    read_face_word,
    read_vertex_word,
    validate_sphere,
)

alphabet = free_alphabet(3)


def w(text):
    return parse_word(text, alphabet)


# two triangles glued along three edges, front corners labelled a, b, c
front = Face(
    "F",
    (("e1", -1), ("e2", -1), ("e3", 1)),
    (("P", w("a")), ("Q", w("b")), ("R", w("c"))),
)
back = Face(
    "G",
    (("e1", 1), ("e3", -1), ("e2", 1)),
    (("Q", Word()), ("P", Word()), ("R", Word())),
)
k = SphereComplex(
    vertices=("P", "Q", "R"),
    edges=(("e1", "Q", "P"), ("e2", "R", "Q"), ("e3", "R", "P")),
    faces=(front, back),
)

report = validate_sphere(k)
print(f"valid sphere   {report.passed}")
print(f"front reads    {read_face_word(k, 'F')}")
print(f"vertex Q reads {read_vertex_word(k, 'Q')}")

# a mirrored pair of faces is redundant: it carries a type-1 witness
mirrored = SphereComplex(
    vertices=k.vertices,
    edges=k.edges,
    faces=(
        front,
        Face(
            "G",
            (("e1", 1), ("e3", -1), ("e2", 1)),
            (("Q", w("B")), ("P", w("A")), ("R", w("C"))),
        ),
    ),
)
print(f"type-1 witness {detect_type1(mirrored)}")

# a pencil of 2-gons whose corner labels multiply to 1 carries a type-2 one
labels = ("a", "b", "BA")
faces = tuple(
    Face(
        f"f{i}",
        ((f"d{i}", 1), (f"d{(i + 1) % 3}", -1)),
        (("u", w(labels[i])), ("v", w(labels[i]))),
    )
    for i in range(3)
)
pencil = SphereComplex(
    vertices=("u", "v"),
    edges=tuple((f"d{i}", "u", "v") for i in range(3)),
    faces=faces,
)
print(f"type-2 witness {detect_type2(pencil)}")

# seeded generation always yields valid complexes with a one-edge outer face
rand = generate_random(seed=0, size=3)
print(f"\ngenerated      {len(rand.vertices)} vertices, "
      f"{len(rand.edges)} edges, {len(rand.faces)} faces; "
      f"valid={validate_sphere(rand).passed}")
print("json preview  ", json.dumps(complex_to_dict(rand))[:76], "...")
