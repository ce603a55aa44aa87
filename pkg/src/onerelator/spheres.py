"""Combinatorial cell subdivisions of the 2-sphere with oriented edges and
group-labelled corners, plus the validity and irreducibility checks used by
the crash simulation.

Faces list their boundary as (edge, direction) steps in anticlockwise order;
corner ``i`` of a face sits at the start vertex of boundary step ``i``.
Exactly one corner of a fully labelled complex is unlabelled: the corner of
the outer face at the distinguished vertex.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterator, Optional, Sequence

from .words import RESERVED, Word, free_reduce, parse_word, word_key

LABEL_ALPHABET = frozenset(
    chr(c) for c in range(ord("a"), ord("z") + 1) if chr(c) not in RESERVED
)

FACE_TYPES = ("I", "I'", "II", "II'", "infinity")


class ComplexFormatError(ValueError):
    """Malformed complex description (unknown ids, bad fields, bad JSON)."""


@dataclass(frozen=True)
class Face:
    id: str
    boundary: tuple[tuple[str, int], ...]  # (edge id, +1 with / -1 against)
    corners: tuple[tuple[str, Optional[Word]], ...]  # (vertex id, label)
    type: Optional[str] = None


@dataclass(frozen=True)
class SphereComplex:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]  # (id, tail, head)
    faces: tuple[Face, ...]
    e_infinity: Optional[str] = None
    v0: Optional[str] = None

    @cached_property
    def edge_map(self) -> dict[str, tuple[str, str]]:
        return {e: (t, h) for e, t, h in self.edges}

    @cached_property
    def face_map(self) -> dict[str, Face]:
        return {f.id: f for f in self.faces}

    def step_start(self, step: tuple[str, int]) -> str:
        tail, head = self.edge_map[step[0]]
        return tail if step[1] > 0 else head

    def step_end(self, step: tuple[str, int]) -> str:
        tail, head = self.edge_map[step[0]]
        return head if step[1] > 0 else tail

    def edge_incidences(self, edge_id: str) -> list[tuple[str, int]]:
        """(face id, boundary index) pairs using the edge, in either direction."""
        out = []
        for f in self.faces:
            for i, (e, _) in enumerate(f.boundary):
                if e == edge_id:
                    out.append((f.id, i))
        return out


@dataclass(frozen=True)
class RelatorSet:
    """The relator family {w0} together with the H-relator 2-gon words."""

    w0: Word
    h_pairs: tuple[tuple[Word, Word], ...] = ()  # (h, image of h under phi)
    m: int = 1

    def words(self) -> tuple[Word, ...]:
        from .words import STABLE

        out = [self.w0]
        for h, h_phi in self.h_pairs:
            raw = [(STABLE, -1)] + list(h.letters) + [(STABLE, 1)]
            raw += [(s, -e) for s, e in reversed(h_phi.letters)]
            out.append(free_reduce(raw))
        return tuple(out)


@dataclass(frozen=True)
class ValidationReport:
    euler: bool
    connected: bool
    edge_pairing: bool
    links: bool
    problems: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.euler and self.connected and self.edge_pairing and self.links


def _check_references(k: SphereComplex) -> None:
    vset = set(k.vertices)
    if len(vset) != len(k.vertices):
        raise ComplexFormatError("duplicate vertex ids")
    eids = [e for e, _, _ in k.edges]
    if len(set(eids)) != len(eids):
        raise ComplexFormatError("duplicate edge ids")
    for e, t, h in k.edges:
        if t not in vset or h not in vset:
            raise ComplexFormatError(f"edge {e} references unknown vertex")
    fids = [f.id for f in k.faces]
    if len(set(fids)) != len(fids):
        raise ComplexFormatError("duplicate face ids")
    for f in k.faces:
        if len(f.boundary) != len(f.corners):
            raise ComplexFormatError(f"face {f.id}: corner/boundary length mismatch")
        if not f.boundary:
            raise ComplexFormatError(f"face {f.id}: empty boundary")
        for e, d in f.boundary:
            if e not in k.edge_map:
                raise ComplexFormatError(f"face {f.id} references unknown edge {e}")
            if d not in (1, -1):
                raise ComplexFormatError(f"face {f.id}: bad direction {d}")
        for v, _ in f.corners:
            if v not in vset:
                raise ComplexFormatError(f"face {f.id} references unknown vertex {v}")
    if k.e_infinity is not None and k.e_infinity not in k.face_map:
        raise ComplexFormatError("unknown distinguished face")
    if k.v0 is not None and k.v0 not in vset:
        raise ComplexFormatError("unknown distinguished vertex")


def _corner_ends(
    k: SphereComplex, f: Face, i: int
) -> tuple[tuple[str, int], tuple[str, int]]:
    """Edge-end slots flanking corner i: (incoming end, outgoing end).

    An end is (edge id, 0 for the tail end, 1 for the head end).
    """
    prev = f.boundary[i - 1]
    nxt = f.boundary[i]
    in_end = (prev[0], 1 if prev[1] > 0 else 0)
    out_end = (nxt[0], 0 if nxt[1] > 0 else 1)
    return in_end, out_end


def validate_sphere(k: SphereComplex) -> ValidationReport:
    """Check Euler characteristic, connectivity, edge pairing and vertex links."""
    _check_references(k)
    problems: list[str] = []

    v, e, f = len(k.vertices), len(k.edges), len(k.faces)
    euler = v - e + f == 2
    if not euler:
        problems.append(f"Euler characteristic {v - e + f} != 2")

    adjacency: dict[str, set[str]] = {vid: set() for vid in k.vertices}
    for _, t, h in k.edges:
        adjacency[t].add(h)
        adjacency[h].add(t)
    seen: set[str] = set()
    if k.vertices:
        stack = [k.vertices[0]]
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            stack.extend(adjacency[cur] - seen)
    connected = seen == set(k.vertices)
    if not connected:
        problems.append("1-skeleton is not connected")

    usage: dict[str, list[int]] = {eid: [] for eid, _, _ in k.edges}
    for face in k.faces:
        for eid, d in face.boundary:
            usage[eid].append(d)
    edge_pairing = all(sorted(ds) == [-1, 1] for ds in usage.values())
    if not edge_pairing:
        bad = [eid for eid, ds in usage.items() if sorted(ds) != [-1, 1]]
        problems.append(f"edges not used once per direction: {bad}")

    links = True
    corner_ok = True
    for face in k.faces:
        for i, (vid, _) in enumerate(face.corners):
            if k.step_start(face.boundary[i]) != vid or k.step_end(
                face.boundary[i - 1]
            ) != vid:
                corner_ok = False
                problems.append(f"face {face.id}: corner {i} off its boundary vertex")
    if corner_ok and edge_pairing:
        for vid in k.vertices:
            slots = []  # (in_end, out_end) per corner at vid
            for face in k.faces:
                for i, (cv, _) in enumerate(face.corners):
                    if cv == vid:
                        slots.append(_corner_ends(k, face, i))
            ins = sorted(s[0] for s in slots)
            outs = sorted(s[1] for s in slots)
            if ins != outs or len(set(ins)) != len(ins):
                links = False
                problems.append(f"vertex {vid}: edge-end slots do not match up")
                continue
            nxt = {s_in: s_out for s_in, s_out in slots}
            if not slots:
                links = False
                problems.append(f"vertex {vid}: no incident corners")
                continue
            start = slots[0][0]
            count, cur = 0, start
            while True:
                cur = nxt[cur]
                count += 1
                if cur == start or count > len(slots):
                    break
            if count != len(slots):
                links = False
                problems.append(f"vertex {vid}: link is not a single cycle")
    else:
        links = corner_ok and links

    return ValidationReport(
        euler=euler,
        connected=connected,
        edge_pairing=edge_pairing,
        links=links and corner_ok,
        problems=tuple(problems),
    )


# -- reading words ----------------------------------------------------------


def read_face_word(k: SphereComplex, face_id: str, start: int = 0) -> Word:
    """Anticlockwise boundary word of a face, starting at the given corner.

    A t (resp. t^-1) is inserted for each boundary edge traversed with
    (resp. against) its orientation; the edge *entering* the start corner is
    read first, matching the triangle convention t a t^-1 b t^-1 c.
    """
    from .words import STABLE

    face = k.face_map[face_id]
    if k.e_infinity is not None and face_id == k.e_infinity:
        raise ValueError("the outer face has no boundary word")
    n = len(face.corners)
    raw: list[tuple[str, int]] = []
    for off in range(n):
        i = (start + off) % n
        _, d = face.boundary[i - 1]
        raw.append((STABLE, d))
        label = face.corners[i][1]
        if label is None:
            raise ValueError(f"face {face_id}: unlabelled corner {i}")
        raw.extend(label.letters)
    return free_reduce(raw)


def _vertex_cycle(k: SphereComplex, vertex_id: str) -> list[tuple[str, int]]:
    """Corners (face id, corner index) at a vertex, in link-cycle order."""
    slots: dict[tuple[str, int], tuple[str, int]] = {}
    corners: dict[tuple[str, int], tuple[str, int]] = {}
    for face in k.faces:
        for i, (cv, _) in enumerate(face.corners):
            if cv == vertex_id:
                in_end, out_end = _corner_ends(k, face, i)
                slots[out_end] = in_end  # traverse against the face orientation
                corners[out_end] = (face.id, i)
    if not slots:
        raise ValueError(f"vertex {vertex_id}: no incident corners")
    start = min(slots)
    order = []
    cur = start
    while True:
        order.append(corners[cur])
        cur_in = slots[cur]
        if cur_in not in corners and cur_in not in slots:
            raise ValueError(f"vertex {vertex_id}: broken link")
        # the next corner is the one whose outgoing slot is our incoming slot
        cur = cur_in
        if cur == start:
            break
        if len(order) > len(slots):
            raise ValueError(f"vertex {vertex_id}: link is not a single cycle")
    return order


def read_vertex_word(k: SphereComplex, vertex_id: str) -> Word:
    """Clockwise product of the corner labels around a vertex."""
    if k.v0 is not None and vertex_id == k.v0:
        raise ValueError("the corner product at the distinguished vertex is undefined")
    raw: list[tuple[str, int]] = []
    for face_id, i in _vertex_cycle(k, vertex_id):
        label = k.face_map[face_id].corners[i][1]
        if label is None:
            raise ValueError(f"unlabelled corner at vertex {vertex_id}")
        raw.extend(label.letters)
    return free_reduce(raw)


# -- irreducibility ---------------------------------------------------------


def _face_word_from_edge(k: SphereComplex, face_id: str, pos: int) -> tuple[
    tuple[str, int], ...
]:
    """Boundary word starting with the t-letter of boundary step ``pos``."""
    face = k.face_map[face_id]
    n = len(face.boundary)
    return read_face_word(k, face_id, start=(pos + 1) % n).letters


def detect_type1(
    k: SphereComplex, w: Optional[RelatorSet] = None
) -> Optional[tuple[str, str, str]]:
    """A pair of distinct faces reading inverse words across a shared edge.

    Returns (face, face, edge) or None.  The shared edge must represent the
    same t-occurrence in both words, which the alignment at the edge enforces.
    """
    skip = {k.e_infinity} if k.e_infinity is not None else set()
    for eid, _, _ in k.edges:
        inc = k.edge_incidences(eid)
        if len(inc) != 2:
            continue
        (f1, i1), (f2, i2) = inc
        if f1 == f2 or f1 in skip or f2 in skip:
            continue
        try:
            w1 = _face_word_from_edge(k, f1, i1)
            w2 = _face_word_from_edge(k, f2, i2)
        except ValueError:
            continue  # unlabelled corners: no word to compare
        inv = tuple((s, -e) for s, e in reversed(w1))
        aligned = inv[-1:] + inv[:-1]  # move the shared-edge letter to the front
        if w2 == aligned:
            return (f1, f2, eid)
    return None


def detect_type2(
    k: SphereComplex, w: Optional[RelatorSet] = None
) -> Optional[tuple[tuple[str, ...], str, str]]:
    """A chain of 2-gons between common vertices whose label product is 1.

    Returns (face chain, vertex a, vertex b) or None.  The product is checked
    at both vertices; a witness is returned if it is trivial at either one.
    """
    skip = {k.e_infinity} if k.e_infinity is not None else set()
    bigons = [
        f
        for f in k.faces
        if len(f.boundary) == 2
        and f.id not in skip
        and all(lbl is not None for _, lbl in f.corners)
        and f.corners[0][0] != f.corners[1][0]
    ]
    by_pair: dict[frozenset[str], list[Face]] = {}
    for f in bigons:
        key = frozenset(v for v, _ in f.corners)
        by_pair.setdefault(key, []).append(f)
    for key, group in sorted(by_pair.items(), key=lambda kv: sorted(kv[0])):
        a, b = sorted(key)
        adjacency: dict[str, set[str]] = {f.id: set() for f in group}
        ids = {f.id for f in group}
        for f in group:
            for eid, _ in f.boundary:
                for other, _ in k.edge_incidences(eid):
                    if other != f.id and other in ids:
                        adjacency[f.id].add(other)

        def label_at(face: Face, vertex: str) -> Word:
            for cv, lbl in face.corners:
                if cv == vertex:
                    assert lbl is not None
                    return lbl
            raise AssertionError

        def extend(chain: list[str]) -> Optional[tuple[tuple[str, ...], str, str]]:
            prod_a = free_reduce(
                [l for fid in chain for l in label_at(k.face_map[fid], a).letters]
            )
            prod_b = free_reduce(
                [l for fid in chain for l in label_at(k.face_map[fid], b).letters]
            )
            if prod_a.is_identity() or prod_b.is_identity():
                return (tuple(chain), a, b)
            for nxt in sorted(adjacency[chain[-1]]):
                if nxt not in chain:
                    hit = extend(chain + [nxt])
                    if hit is not None:
                        return hit
            return None

        for f in sorted(ids):
            hit = extend([f])
            if hit is not None:
                return hit
    return None


# -- cell subdivision lemma report ------------------------------------------


@dataclass(frozen=True)
class CSLReport:
    items: dict[str, tuple[bool, str]]

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.items.values())


def _cyclic_letter_classes(letters: tuple[tuple[str, int], ...]) -> tuple:
    if not letters:
        return ()
    return min(
        (letters[i:] + letters[:i] for i in range(len(letters))), key=word_key
    )


def check_csl(k: SphereComplex, relators: RelatorSet) -> CSLReport:
    """Per-property report for the cell subdivision lemma conditions (a)-(g)."""
    report: dict[str, tuple[bool, str]] = {}
    base = validate_sphere(k)
    if not base.passed:
        raise ValueError(f"not a valid sphere subdivision: {base.problems}")

    report["a"] = (True, "all edges carry an orientation by construction")

    unlabelled = [
        (f.id, i)
        for f in k.faces
        for i, (_, lbl) in enumerate(f.corners)
        if lbl is None
    ]
    b_ok = (
        len(unlabelled) == 1
        and k.e_infinity is not None
        and k.v0 is not None
        and unlabelled[0][0] == k.e_infinity
        and k.face_map[k.e_infinity].corners[unlabelled[0][1]][0] == k.v0
    )
    report["b"] = (b_ok, f"unlabelled corners: {unlabelled}")

    c_ok, c_detail = True, "all vertex words trivial"
    for vid in k.vertices:
        if vid == k.v0:
            continue
        try:
            wv = read_vertex_word(k, vid)
        except ValueError as exc:
            c_ok, c_detail = False, str(exc)
            break
        if not wv.is_identity():
            c_ok, c_detail = False, f"vertex {vid} reads {wv}"
            break
    report["c"] = (c_ok, c_detail)

    if k.e_infinity is None:
        report["d"] = (False, "no distinguished outer face")
    else:
        fo = k.face_map[k.e_infinity]
        d_ok = (
            len(fo.boundary) == 1
            and k.v0 is not None
            and {k.step_start(fo.boundary[0]), k.step_end(fo.boundary[0])} == {k.v0}
        )
        report["d"] = (d_ok, f"outer boundary {fo.boundary}")

    targets = set()
    for w in relators.words():
        targets.add(_cyclic_letter_classes(w.letters))
        targets.add(_cyclic_letter_classes(w.inverse().letters))
    e_ok, e_detail = True, "all face words lie in the relator family"
    for f in k.faces:
        if k.e_infinity is not None and f.id == k.e_infinity:
            continue
        try:
            fw = read_face_word(k, f.id)
        except ValueError as exc:
            e_ok, e_detail = False, str(exc)
            break
        if _cyclic_letter_classes(fw.letters) not in targets:
            e_ok, e_detail = False, f"face {f.id} reads {fw}"
            break
    report["e"] = (e_ok, e_detail)

    t1 = detect_type1(k, relators)
    t2 = detect_type2(k, relators)
    report["f"] = (
        t1 is None and t2 is None,
        f"type-1 witness {t1}, type-2 witness {t2}",
    )

    g_ok = len(k.vertices) >= 2 and len(k.faces) >= 3
    g_detail = f"{len(k.vertices)} vertices, {len(k.faces)} faces"
    if g_ok and k.e_infinity is not None:
        outer_edges = {e for e, _ in k.face_map[k.e_infinity].boundary}
        proper = any(
            f.id != k.e_infinity
            and outer_edges <= {e for e, _ in f.boundary}
            and len(f.boundary) > len(outer_edges)
            for f in k.faces
        )
        g_ok = proper
        g_detail += "; outer boundary properly contained" if proper else (
            "; no face properly contains the outer boundary"
        )
    elif k.e_infinity is None:
        g_ok = False
        g_detail += "; no distinguished outer face"
    report["g"] = (g_ok, g_detail)

    return CSLReport(items=report)


# -- construction and random generation -------------------------------------

IDENTITY = Word()


def dipole(outer_label: Optional[Word] = IDENTITY) -> SphereComplex:
    """One vertex, one loop edge, two faces; the first face is the outer one."""
    f_inf = Face(
        id="f_inf", boundary=(("e_inf", 1),), corners=(("v0", None),), type="infinity"
    )
    f_out = Face(id="f0", boundary=(("e_inf", -1),), corners=(("v0", outer_label),))
    return SphereComplex(
        vertices=("v0",),
        edges=(("e_inf", "v0", "v0"),),
        faces=(f_inf, f_out),
        e_infinity="f_inf",
        v0="v0",
    )


def split_edge(k: SphereComplex, edge_id: str, fresh: Iterator[int]) -> SphereComplex:
    """Subdivide an edge with a new midpoint vertex."""
    tail, head = k.edge_map[edge_id]
    n = next(fresh)
    mid, e1, e2 = f"v{n}", f"e{n}a", f"e{n}b"
    edges = tuple(
        e for e in k.edges if e[0] != edge_id
    ) + ((e1, tail, mid), (e2, mid, head))
    faces = []
    for f in k.faces:
        boundary: list[tuple[str, int]] = []
        corners: list[tuple[str, Optional[Word]]] = []
        for i, (eid, d) in enumerate(f.boundary):
            corners.append(f.corners[i])
            if eid != edge_id:
                boundary.append((eid, d))
                continue
            if d > 0:
                boundary.extend([(e1, 1), (e2, 1)])
            else:
                boundary.extend([(e2, -1), (e1, -1)])
            corners.append((mid, IDENTITY))
        faces.append(replace(f, boundary=tuple(boundary), corners=tuple(corners)))
    return replace(k, vertices=k.vertices + (mid,), edges=edges, faces=tuple(faces))


def split_face(
    k: SphereComplex, face_id: str, i: int, j: int, fresh: Iterator[int]
) -> SphereComplex:
    """Split a face along a new edge between corners i < j."""
    f = k.face_map[face_id]
    if not 0 <= i < j < len(f.corners):
        raise ValueError("need corner indices i < j")
    n = next(fresh)
    d_id, f2_id = f"e{n}", f"f{n}"
    u, v = f.corners[i][0], f.corners[j][0]
    f1 = replace(
        f,
        boundary=f.boundary[i:j] + ((d_id, -1),),
        corners=f.corners[i:j] + ((v, IDENTITY),),
    )
    f2 = Face(
        id=f2_id,
        boundary=f.boundary[j:] + f.boundary[:i] + ((d_id, 1),),
        corners=f.corners[j:] + f.corners[:i] + ((u, IDENTITY),),
        type=f.type if f.type != "infinity" else None,
    )
    faces = tuple(f1 if g.id == face_id else g for g in k.faces) + (f2,)
    return replace(k, edges=k.edges + ((d_id, u, v),), faces=faces)


def add_loop(
    k: SphereComplex, face_id: str, corner: int, fresh: Iterator[int]
) -> SphereComplex:
    """Attach a small loop at a corner, cutting off a new one-edge face."""
    f = k.face_map[face_id]
    u = f.corners[corner][0]
    n = next(fresh)
    d_id, new_face = f"e{n}", f"f{n}"
    inner = Face(id=new_face, boundary=((d_id, 1),), corners=((u, IDENTITY),))
    modified = replace(
        f,
        boundary=f.boundary[:corner] + ((d_id, -1),) + f.boundary[corner:],
        corners=f.corners[:corner] + ((u, IDENTITY),) + f.corners[corner:],
    )
    faces = tuple(modified if g.id == face_id else g for g in k.faces) + (inner,)
    return replace(k, edges=k.edges + ((d_id, u, u),), faces=faces)


def generate_random(seed: int, size: int) -> SphereComplex:
    """A pseudo-random valid sphere subdivision, deterministic in ``seed``.

    The outer face keeps a single loop edge at the distinguished vertex, so
    every generated complex also exercises the outer-face machinery.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    rng = random.Random(seed)
    counter = iter(range(1, 10_000))
    k = dipole()
    k = add_loop(k, "f0", 0, counter)  # outer neighbour gets a second edge
    for _ in range(size):
        choices = []
        for eid, _, _ in k.edges:
            if eid != "e_inf":
                choices.append(("edge", eid))
        for f in k.faces:
            if f.id == k.e_infinity:
                continue
            choices.append(("loop", f.id))
            if len(f.corners) >= 2:
                choices.append(("face", f.id))
        kind, target = rng.choice(sorted(choices))
        if kind == "edge":
            k = split_edge(k, target, counter)
        elif kind == "loop":
            f = k.face_map[target]
            k = add_loop(k, target, rng.randrange(len(f.corners)), counter)
        else:
            f = k.face_map[target]
            i = rng.randrange(len(f.corners) - 1)
            j = rng.randrange(i + 1, len(f.corners))
            k = split_face(k, target, i, j, counter)
    return k


# -- file format ------------------------------------------------------------

_DIRS = {"+": 1, "-": -1}
_DIRS_BACK = {1: "+", -1: "-"}


def _require_fields(obj: dict, allowed: set[str], context: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise ComplexFormatError(f"{context}: unknown fields {sorted(unknown)}")


def complex_from_dict(data: dict) -> SphereComplex:
    _require_fields(data, {"vertices", "edges", "faces", "distinguished"}, "complex")
    try:
        vertices = tuple(str(v) for v in data["vertices"])
        edges = []
        for e in data["edges"]:
            _require_fields(e, {"id", "tail", "head"}, "edge")
            edges.append((str(e["id"]), str(e["tail"]), str(e["head"])))
        faces = []
        for f in data["faces"]:
            _require_fields(f, {"id", "type", "boundary", "corners"}, "face")
            boundary = []
            for step in f["boundary"]:
                _require_fields(step, {"edge", "dir"}, "boundary step")
                if step["dir"] not in _DIRS:
                    raise ComplexFormatError(f"bad dir {step['dir']!r}")
                boundary.append((str(step["edge"]), _DIRS[step["dir"]]))
            corners = []
            for c in f["corners"]:
                _require_fields(c, {"vertex", "label"}, "corner")
                label = (
                    None
                    if c["label"] is None
                    else parse_word(c["label"], LABEL_ALPHABET)
                )
                corners.append((str(c["vertex"]), label))
            ftype = f.get("type")
            if ftype is not None and ftype not in FACE_TYPES:
                raise ComplexFormatError(f"bad face type {ftype!r}")
            faces.append(
                Face(
                    id=str(f["id"]),
                    boundary=tuple(boundary),
                    corners=tuple(corners),
                    type=ftype,
                )
            )
        dist = data.get("distinguished") or {}
        if dist:
            _require_fields(dist, {"e_infinity", "v0"}, "distinguished")
        k = SphereComplex(
            vertices=vertices,
            edges=tuple(edges),
            faces=tuple(faces),
            e_infinity=dist.get("e_infinity"),
            v0=dist.get("v0"),
        )
    except (KeyError, TypeError) as exc:
        raise ComplexFormatError(f"malformed complex document: {exc}") from exc
    _check_references(k)
    return k


def complex_to_dict(k: SphereComplex) -> dict:
    return {
        "vertices": list(k.vertices),
        "edges": [{"id": e, "tail": t, "head": h} for e, t, h in k.edges],
        "faces": [
            {
                "id": f.id,
                "type": f.type,
                "boundary": [
                    {"edge": e, "dir": _DIRS_BACK[d]} for e, d in f.boundary
                ],
                "corners": [
                    {"vertex": v, "label": None if lbl is None else str(lbl)}
                    for v, lbl in f.corners
                ],
            }
            for f in k.faces
        ],
        "distinguished": {"e_infinity": k.e_infinity, "v0": k.v0},
    }


def load_complex(path: str) -> SphereComplex:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ComplexFormatError(f"bad JSON: {exc}") from exc
    return complex_from_dict(data)


def save_complex(k: SphereComplex, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(complex_to_dict(k), fh, indent=2, sort_keys=True)
        fh.write("\n")
