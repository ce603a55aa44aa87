"""Exact-time traffic flows on sphere complexes.

Each face carries a car driving anticlockwise around its boundary; positions
are piecewise-linear functions of time over exact rationals.  The boundary
coordinate of a face with k edges runs over [0, k): integer points are
corners, and coordinate x in [i, i+1] lies on boundary step i.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Optional, Sequence

from .spheres import Face, SphereComplex, _vertex_cycle
from .words import Word, free_reduce

Q = Fraction


class ScheduleError(ValueError):
    """A schedule violates its structural contract or does not fit a face."""


def _floor(q: Q) -> int:
    return q.numerator // q.denominator


@dataclass(frozen=True)
class FlowSchedule:
    """Continuous anticlockwise position function for one car.

    Breakpoints are (time, unwrapped position) pairs; position mod circuit is
    the boundary coordinate.  Periodic schedules span exactly one period and
    gain exactly one circuit; finite schedules (period None) cover their whole
    plan horizon.
    """

    face: str
    circuit: int
    breakpoints: tuple[tuple[Q, Q], ...]
    period: Optional[Q] = None

    def __post_init__(self) -> None:
        bps = self.breakpoints
        if len(bps) < 2:
            raise ScheduleError("need at least two breakpoints")
        if bps[0][0] != 0:
            raise ScheduleError("schedules must start at time 0")
        for (t0, p0), (t1, p1) in zip(bps, bps[1:]):
            if t1 <= t0:
                raise ScheduleError("breakpoint times must increase")
            if p1 < p0:
                raise ScheduleError("position must be non-decreasing")
        if self.period is not None:
            if self.period <= 0:
                raise ScheduleError("period must be positive")
            if bps[-1][0] != self.period:
                raise ScheduleError("periodic breakpoints must span one period")
            if bps[-1][1] - bps[0][1] != self.circuit:
                raise ScheduleError("one full circuit per period required")

    @property
    def end_time(self) -> Optional[Q]:
        return None if self.period is not None else self.breakpoints[-1][0]

    def position(self, t: Q) -> Q:
        """Unwrapped position at time t (reduce mod circuit for the coordinate)."""
        t = Q(t)
        laps = Q(0)
        if self.period is not None:
            k = _floor(t / self.period)
            t -= k * self.period
            laps = k * self.circuit
        bps = self.breakpoints
        if not bps[0][0] <= t <= bps[-1][0]:
            raise ScheduleError(f"time {t} outside the schedule range")
        for (t0, p0), (t1, p1) in zip(bps, bps[1:]):
            if t <= t1:
                return laps + p0 + (p1 - p0) * (t - t0) / (t1 - t0)
        raise AssertionError

    @property
    def stops(self) -> tuple[tuple[int, tuple[Q, Q]], ...]:
        """Corner stops: (corner index, (start, end)) for zero-slope segments."""
        out = []
        for (t0, p0), (t1, p1) in zip(self.breakpoints, self.breakpoints[1:]):
            if p0 == p1 and p0 == _floor(p0):
                out.append((_floor(p0) % self.circuit, (t0, t1)))
        return tuple(out)


@dataclass(frozen=True)
class CrashEvent:
    """A meeting of cars, either inside an edge or at a vertex."""

    time: Q
    site: tuple  # ("edge", edge id, tail-based coordinate) or ("vertex", id)
    participants: tuple[str, ...]
    complete: bool


# -- standard schedules -----------------------------------------------------


def standard_schedule(face: Face, r: int, start_corner: int = 0) -> FlowSchedule:
    """Type I / I' schedule: corner i at time i, then a stop of max(2r-1, 0).

    The car starts at the given corner (the one labelled b0 or its inverse),
    reaches the long-stop corner at time 2r+2 and completes the circuit with
    period 4r+2 (period 3 when r = 0).
    """
    if r < 0:
        raise ScheduleError("r must be nonnegative")
    n = len(face.corners)
    if n != 2 * r + 3:
        raise ScheduleError(f"face has {n} corners, expected {2 * r + 3}")
    sc = Q(start_corner)
    stop = max(2 * r - 1, 0)
    bps: list[tuple[Q, Q]] = [(Q(0), sc), (Q(2 * r + 2), sc + 2 * r + 2)]
    if stop:
        bps.append((Q(4 * r + 1), sc + 2 * r + 2))
    period = Q(2 * r + 3 + stop)
    bps.append((period, sc + n))
    return FlowSchedule(face=face.id, circuit=n, breakpoints=tuple(bps), period=period)


def standard_schedule_II(face: Face, start_corner: int = 0) -> FlowSchedule:
    """Type II / II' schedule on a 2-gon: start at the h^phi corner, period 2."""
    if len(face.corners) != 2:
        raise ScheduleError("type II schedule requires a 2-gon")
    sc = Q(start_corner)
    return FlowSchedule(
        face=face.id,
        circuit=2,
        breakpoints=((Q(0), sc), (Q(2), sc + 2)),
        period=Q(2),
    )


def uniform_schedule(face: Face, start: Q = Q(0)) -> FlowSchedule:
    """Unit-speed car with no stops, starting at the given boundary coordinate."""
    n = len(face.corners)
    return FlowSchedule(
        face=face.id,
        circuit=n,
        breakpoints=((Q(0), Q(start)), (Q(n), Q(start) + n)),
        period=Q(n),
    )


# -- piecewise-linear plumbing ----------------------------------------------


def _segments(s: FlowSchedule, t_end: Q) -> list[tuple[Q, Q, Q, Q]]:
    """Linear (t0, t1, p0, p1) segments covering [0, t_end], clipped."""
    if t_end <= 0:
        return []
    raw: list[tuple[Q, Q, Q, Q]] = []
    if s.period is None:
        if s.breakpoints[-1][0] < t_end:
            raise ScheduleError("finite schedule does not cover the horizon")
        shifts = [0]
    else:
        shifts = range(_floor(t_end / s.period) + 1)
    for k in shifts:
        dt = k * (s.period or 0)
        dp = k * s.circuit
        for (t0, p0), (t1, p1) in zip(s.breakpoints, s.breakpoints[1:]):
            a, b = t0 + dt, t1 + dt
            if a >= t_end:
                break
            pa, pb = p0 + dp, p1 + dp
            if b > t_end:
                pb = pa + (pb - pa) * (t_end - a) / (b - a)
                b = t_end
            raw.append((a, b, pa, pb))
    return raw


def _pieces(s: FlowSchedule, t_end: Q) -> list[tuple[Q, Q, Q, Q]]:
    """Segments refined so each moving piece stays within one unit span."""
    out: list[tuple[Q, Q, Q, Q]] = []
    for t0, t1, p0, p1 in _segments(s, t_end):
        if p0 == p1:
            out.append((t0, t1, p0, p1))
            continue
        cuts = [t0]
        n = _floor(p0) + 1
        while n < p1:
            cuts.append(t0 + (t1 - t0) * (Q(n) - p0) / (p1 - p0))
            n += 1
        cuts.append(t1)
        for a, b in zip(cuts, cuts[1:]):
            pa = p0 + (p1 - p0) * (a - t0) / (t1 - t0)
            pb = p0 + (p1 - p0) * (b - t0) / (t1 - t0)
            out.append((a, b, pa, pb))
    return out


@dataclass(frozen=True)
class _EdgeStay:
    face: str
    step: int
    direction: int
    t0: Q
    t1: Q
    c0: Q  # tail-based edge coordinate at t0
    c1: Q


def _edge_occupancy(
    face: Face, s: FlowSchedule, t_end: Q
) -> dict[str, list[_EdgeStay]]:
    n = s.circuit
    out: dict[str, list[_EdgeStay]] = {}
    for t0, t1, p0, p1 in _pieces(s, t_end):
        if p0 == p1 and p0 == _floor(p0):
            continue  # parked at a corner: vertex business
        j = _floor(p0)
        step = j % n
        eid, d = face.boundary[step]
        f0, f1 = p0 - j, p1 - j
        c0, c1 = (f0, f1) if d > 0 else (1 - f0, 1 - f1)
        out.setdefault(eid, []).append(
            _EdgeStay(face.id, step, d, t0, t1, c0, c1)
        )
    return out


def _corner_occupancy(
    face: Face, s: FlowSchedule, t_end: Q
) -> dict[tuple[str, int], list[tuple[Q, Q]]]:
    """Occupancy intervals (possibly instants) per (face, corner index)."""
    n = s.circuit
    out: dict[tuple[str, int], list[tuple[Q, Q]]] = {}

    def add(pos: Q, a: Q, b: Q) -> None:
        idx = _floor(pos) % n
        out.setdefault((face.id, idx), []).append((a, b))

    for t0, t1, p0, p1 in _pieces(s, t_end):
        if p0 == p1:
            if p0 == _floor(p0):
                add(p0, t0, t1)
        else:
            if p0 == _floor(p0):
                add(p0, t0, t0)
            if p1 == _floor(p1):
                add(p1, t1, t1)
    for key, spans in out.items():
        spans.sort()
        merged = [spans[0]]
        for a, b in spans[1:]:
            if a <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], b))
            else:
                merged.append((a, b))
        out[key] = merged
    return out


def _edge_meetings(
    eid: str, side1: list[_EdgeStay], side2: list[_EdgeStay]
) -> set[tuple[Q, tuple, tuple[str, ...]]]:
    hits: set[tuple[Q, tuple, tuple[str, ...]]] = set()
    for x in side1:
        for y in side2:
            lo, hi = max(x.t0, y.t0), min(x.t1, y.t1)
            if lo > hi:
                continue

            def coord(stay: _EdgeStay, t: Q) -> Q:
                if stay.t1 == stay.t0:
                    return stay.c0
                return stay.c0 + (stay.c1 - stay.c0) * (t - stay.t0) / (
                    stay.t1 - stay.t0
                )

            f_lo = coord(x, lo) - coord(y, lo)
            f_hi = coord(x, hi) - coord(y, hi)
            if f_lo == 0 and f_hi == 0:
                t_star = lo
            elif f_lo == f_hi:
                continue
            elif f_lo * f_hi <= 0:
                t_star = lo + (hi - lo) * (-f_lo) / (f_hi - f_lo)
            else:
                continue
            c = coord(x, t_star)
            if 0 < c < 1:
                participants = tuple(sorted({x.face, y.face}))
                hits.add((t_star, ("edge", eid, c), participants))
    return hits


def simulate(
    k: SphereComplex, schedules: Mapping[str, FlowSchedule], horizon: Q
) -> tuple[CrashEvent, ...]:
    """All crash events in [0, horizon], time-ordered, in exact arithmetic."""
    horizon = Q(horizon)
    if set(schedules) != set(k.face_map):
        raise ScheduleError("schedules must cover exactly the faces of the complex")
    for fid, s in schedules.items():
        if s.face != fid:
            raise ScheduleError(f"schedule for {s.face} filed under {fid}")
        if s.circuit != len(k.face_map[fid].boundary):
            raise ScheduleError(f"schedule circuit mismatch on face {fid}")
    if horizon <= 0:
        return ()

    edge_occ: dict[str, list[list[_EdgeStay]]] = {e: [] for e, _, _ in k.edges}
    corner_occ: dict[tuple[str, int], list[tuple[Q, Q]]] = {}
    for fid, s in schedules.items():
        face = k.face_map[fid]
        for eid, stays in _edge_occupancy(face, s, horizon).items():
            edge_occ[eid].append(stays)
        corner_occ.update(_corner_occupancy(face, s, horizon))

    events: list[CrashEvent] = []
    for eid, sides in edge_occ.items():
        flat = [stay for side in sides for stay in side]
        # group by the two incidences (face, boundary index) of the edge
        groups: dict[tuple[str, int], list[_EdgeStay]] = {}
        for stay in flat:
            groups.setdefault((stay.face, stay.step), []).append(stay)
        keys = sorted(groups)
        for a in range(len(keys)):
            for b in range(a + 1, len(keys)):
                for t, site, who in _edge_meetings(
                    eid, groups[keys[a]], groups[keys[b]]
                ):
                    events.append(CrashEvent(t, site, who, complete=True))

    incidences: dict[str, list[tuple[str, int]]] = {v: [] for v in k.vertices}
    for f in k.faces:
        for i, (v, _) in enumerate(f.corners):
            incidences[v].append((f.id, i))
    for vid, slots in incidences.items():
        spans = {slot: corner_occ.get(slot, []) for slot in slots}
        times = sorted(
            {t for sp in spans.values() for a, b in sp for t in (a, b)}
        )
        if not times:
            continue

        def occupied_at(t: Q) -> frozenset:
            return frozenset(
                slot
                for slot, sp in spans.items()
                if any(a <= t <= b for a, b in sp)
            )

        def occupied_on(a: Q, b: Q) -> frozenset:
            mid = (a + b) / 2
            return occupied_at(mid)

        samples: list[tuple[Q, frozenset]] = []
        for idx, t in enumerate(times):
            samples.append((t, occupied_at(t)))
            if idx + 1 < len(times):
                samples.append((t, occupied_on(t, times[idx + 1])))
        prev: Optional[frozenset] = None
        for t, occ in samples:
            if occ != prev and len(occ) >= 2:
                faces_here = tuple(sorted({f for f, _ in occ}))
                events.append(
                    CrashEvent(
                        t,
                        ("vertex", vid),
                        faces_here,
                        complete=len(occ) == len(slots),
                    )
                )
            prev = occ

    uniq = sorted(
        {(e.time, e.site, e.participants, e.complete) for e in events}
    )
    return tuple(CrashEvent(*item) for item in uniq)


def verify_at_least_two_crashes(
    k: SphereComplex, schedules: Mapping[str, FlowSchedule], horizon: Q
) -> tuple[bool, tuple[CrashEvent, ...]]:
    """True iff at least two complete crashes occur within the horizon.

    The horizon must cover at least two common periods of the schedules.
    """
    periods = [s.period for s in schedules.values()]
    if any(p is None for p in periods):
        raise ScheduleError("all schedules must be periodic")
    num = lcm(*(p.numerator for p in periods))
    den = gcd(*(p.denominator for p in periods))
    common = Q(num, den)
    if Q(horizon) < 2 * common:
        raise ScheduleError(
            f"horizon {horizon} below two common periods ({2 * common})"
        )
    events = simulate(k, schedules, horizon)
    complete = [e for e in events if e.complete]
    return len(complete) >= 2, events


# -- crash-vertex reading ---------------------------------------------------


@dataclass(frozen=True)
class VertexReading:
    word: Word
    classification: str  # Type1Witness, Type2Witness or FreenessViolation
    detail: str


def crash_vertex_reading(k: SphereComplex, event: CrashEvent) -> VertexReading:
    """Read the corner word at a complete vertex crash and classify it."""
    if not event.complete or event.site[0] != "vertex":
        raise ValueError("reading requires a complete vertex crash")
    vid = event.site[1]
    labels: list[Word] = []
    for face_id, i in _vertex_cycle(k, vid):
        lbl = k.face_map[face_id].corners[i][1]
        if lbl is None:
            raise ValueError(f"unlabelled corner at vertex {vid}")
        labels.append(lbl)
    word = free_reduce([l for lbl in labels for l in lbl.letters])

    n = len(labels)
    for i in range(n):
        cur, nxt = labels[i], labels[(i + 1) % n]
        if cur.letters and nxt.letters and cur.letters[-1] == (
            nxt.letters[0][0],
            -nxt.letters[0][1],
        ):
            return VertexReading(
                word, "Type1Witness", f"cancellation between corners {i} and {(i + 1) % n}"
            )
    for span in range(1, n):
        for i in range(n):
            prod = free_reduce(
                [l for j in range(span) for l in labels[(i + j) % n].letters]
            )
            if prod.is_identity():
                return VertexReading(
                    word,
                    "Type2Witness",
                    f"trivial product of corners {i}..{(i + span - 1) % n}",
                )
    return VertexReading(
        word, "FreenessViolation", "nontrivial relation read at a full crash"
    )


# -- the adversarial outer car ----------------------------------------------


def _merge_intervals(spans: list[tuple[Q, Q]]) -> list[tuple[Q, Q]]:
    spans = sorted(spans)
    out: list[tuple[Q, Q]] = []
    for a, b in spans:
        if out and a <= out[-1][1]:
            out[-1] = (out[-1][0], max(out[-1][1], b))
        else:
            out.append((a, b))
    return out


@dataclass(frozen=True)
class _Transit:
    """One pass of an opposing car over an outer-boundary edge, in A-coordinates."""

    enter: Q
    exit: Q
    path: tuple[tuple[Q, Q, Q, Q], ...]  # (t0, t1, a0, a1), a non-increasing

    def crossing(self, target: Q) -> Optional[Q]:
        for t0, t1, a0, a1 in self.path:
            if a1 <= target <= a0:
                if a0 == a1:
                    return t0
                return t0 + (t1 - t0) * (a0 - target) / (a0 - a1)
        return None


def _outer_transits(
    k: SphereComplex, step: int, opp: tuple[str, int], s: FlowSchedule, t_end: Q
) -> list[_Transit]:
    face = k.face_map[s.face]
    _, d_inf = k.face_map[k.e_infinity].boundary[step]
    eid = k.face_map[k.e_infinity].boundary[step][0]
    stays = [
        st
        for st in _edge_occupancy(face, s, t_end).get(eid, [])
        if (st.face, st.step) == opp
    ]
    stays.sort(key=lambda st: st.t0)
    transits: list[_Transit] = []
    cur: list[_EdgeStay] = []
    for st in stays:
        if cur and st.t0 > cur[-1].t1:
            transits.append(_build_transit(cur, step, d_inf))
            cur = []
        cur.append(st)
    if cur:
        transits.append(_build_transit(cur, step, d_inf))
    return transits


def _build_transit(stays: list[_EdgeStay], step: int, d_inf: int) -> _Transit:
    def to_a(c: Q) -> Q:
        return step + (c if d_inf > 0 else 1 - c)

    path = tuple((st.t0, st.t1, to_a(st.c0), to_a(st.c1)) for st in stays)
    for t0, t1, a0, a1 in path:
        if a1 > a0:
            raise ScheduleError("opposing car must descend in outer coordinates")
    return _Transit(enter=stays[0].t0, exit=stays[-1].t1, path=path)


def _plan_outer_car(
    circuit: int,
    omega: Q,
    transits: list[_Transit],
    busy: list[tuple[Q, Q]],
    horizon: Q,
) -> list[tuple[Q, Q]]:
    """Breakpoints for the outer car: meet each crossing exactly at omega."""
    j0 = _floor(omega)
    d_hi = (j0 + 1 - omega) / 2
    d_lo = (omega - j0) / 2
    busy = _merge_intervals(busy)

    def free_window(a: Q, b: Q) -> tuple[Q, Q]:
        """Largest open busy-free subinterval of (a, b)."""
        marks = [a]
        for x, y in busy:
            if y <= a or x >= b:
                continue
            marks.extend([max(x, a), min(y, b)])
        marks.append(b)
        marks.sort()
        best = None
        for lo, hi in zip(marks, marks[1:]):
            if any(x <= lo and hi <= y for x, y in busy):
                continue
            if best is None or hi - lo > best[1] - best[0]:
                best = (lo, hi)
        if best is None or best[1] <= best[0]:
            raise ScheduleError(f"no free window inside ({a}, {b})")
        return best

    bps: list[tuple[Q, Q]] = []
    lap = Q(0)
    pending = list(transits)

    # starting position: below omega, above any opposing car already past it
    start_pos = (Q(j0) + omega) / 2
    if pending and pending[0].enter <= 0:
        first = pending[0]
        a_now = first.path[0][2]
        if a_now <= omega:
            start_pos = (a_now + omega) / 2
            pending.pop(0)  # its omega-crossing already happened
    bps.append((Q(0), start_pos))

    for idx, tr in enumerate(pending):
        tau = tr.crossing(omega)
        if tau is None or tau > horizon + 0:
            if tau is None:
                continue
        if bps[-1][0] >= tau:
            break
        if tr.enter > bps[-1][0]:
            bps.append((tr.enter, bps[-1][1]))  # wait just below omega
        bps.append((tau, lap + omega))
        exit_t = max(tr.exit, tau)
        if exit_t > tau:
            bps.append((exit_t, lap + omega + d_hi))  # dawdle past omega
        nxt = pending[idx + 1] if idx + 1 < len(pending) else None
        gap_end = nxt.enter if nxt is not None else horizon
        if bps[-1][0] >= horizon:
            break
        if nxt is None:
            if horizon > bps[-1][0]:
                bps.append((horizon, bps[-1][1]))
            break
        g0, g1 = free_window(bps[-1][0], gap_end)
        if g0 > bps[-1][0]:
            bps.append((g0, bps[-1][1]))
        lap += circuit
        bps.append((g1, lap + omega - d_lo))  # rush the full circuit

    if bps[-1][0] < horizon:
        bps.append((horizon, bps[-1][1]))
    # truncate at the horizon
    out: list[tuple[Q, Q]] = []
    for t, p in bps:
        if t > horizon:
            t0, p0 = out[-1]
            if t0 < horizon:
                out.append((horizon, p0 + (p - p0) * (horizon - t0) / (t - t0)))
            break
        out.append((t, p))
    return out


def _outer_busy(
    k: SphereComplex,
    schedules: Mapping[str, FlowSchedule],
    t_end: Q,
) -> list[tuple[Q, Q]]:
    """Times when some car is on a closed outer-boundary edge or vertex."""
    inf_face = k.face_map[k.e_infinity]
    inf_edges = {e for e, _ in inf_face.boundary}
    inf_vertices = {k.step_start(step) for step in inf_face.boundary}
    busy: list[tuple[Q, Q]] = []
    for fid, s in schedules.items():
        face = k.face_map[fid]
        for eid, stays in _edge_occupancy(face, s, t_end).items():
            if eid in inf_edges:
                busy.extend((st.t0, st.t1) for st in stays)
        for (_, idx), spans in _corner_occupancy(face, s, t_end).items():
            if face.corners[idx][0] in inf_vertices:
                busy.extend(spans)
    return busy


def adversarial_schedule(
    k: SphereComplex, b: FlowSchedule, omega: Q, horizon: Q
) -> FlowSchedule:
    """Finite outer-car plan meeting the neighbouring car only at omega.

    The outer face must be a single loop edge whose other side belongs to a
    face with a longer boundary; omega is an interior coordinate in (0, 1).
    """
    if k.e_infinity is None:
        raise ScheduleError("complex has no distinguished outer face")
    inf_face = k.face_map[k.e_infinity]
    if len(inf_face.boundary) != 1:
        raise ScheduleError("adversarial plan requires a one-edge outer face")
    omega, horizon = Q(omega), Q(horizon)
    if not 0 < omega < 1:
        raise ScheduleError("omega must lie in the open edge interior")
    eid = inf_face.boundary[0][0]
    opp = [
        (f, i)
        for f, i in k.edge_incidences(eid)
        if f != k.e_infinity
    ]
    if len(opp) != 1 or opp[0][0] != b.face:
        raise ScheduleError("the given schedule does not drive the opposing face")
    if len(k.face_map[b.face].boundary) <= 1:
        raise ScheduleError("opposing boundary must properly contain the outer edge")

    t_end = horizon + (b.period or 0)
    transits = _outer_transits(k, 0, opp[0], b, t_end)
    busy = _outer_busy(k, {b.face: b}, t_end)
    bps = _plan_outer_car(1, omega, transits, busy, horizon)
    return FlowSchedule(
        face=k.e_infinity, circuit=1, breakpoints=tuple(bps), period=None
    )


def uphill_schedule(
    k: SphereComplex, omega: Q, horizon: Q
) -> dict[str, FlowSchedule]:
    """Schedules for every face when the outer boundary is coherently oriented.

    Inner cars run uniform unit schedules phased to have just left the outer
    boundary at time 0, so recurring windows exist in which no car is on it;
    the outer car uses those windows to keep all its meetings at omega.
    """
    if k.e_infinity is None:
        raise ScheduleError("complex has no distinguished outer face")
    inf_face = k.face_map[k.e_infinity]
    dirs = {d for _, d in inf_face.boundary}
    if len(dirs) != 1:
        raise ScheduleError("outer edges must all be oriented the same way")
    n = len(inf_face.boundary)
    omega, horizon = Q(omega), Q(horizon)
    if not 0 < omega < n or omega == _floor(omega):
        raise ScheduleError("omega must lie inside an outer edge")
    inf_edges = {e for e, _ in inf_face.boundary}

    schedules: dict[str, FlowSchedule] = {}
    for f in k.faces:
        if f.id == k.e_infinity:
            continue
        steps = [i for i, (e, _) in enumerate(f.boundary) if e in inf_edges]
        if len(steps) == len(f.boundary):
            raise ScheduleError(
                f"face {f.id} lies entirely on the outer boundary; no free window"
            )
        if steps:
            # start just inside the edge after the last outer run
            last = max(steps)  # runs wrap, but any outer step works as an anchor
            while (last + 1) % len(f.boundary) in steps:
                last = (last + 1) % len(f.boundary)
            start = Q(last + 1) % len(f.boundary) + Q(1, 3)
        else:
            start = Q(1, 3)
        schedules[f.id] = uniform_schedule(f, start)

    j0 = _floor(omega)
    eid, _ = inf_face.boundary[j0]
    opp = [(f, i) for f, i in k.edge_incidences(eid) if f != k.e_infinity]
    if len(opp) != 1:
        raise ScheduleError("outer edge must have exactly one opposing face")
    opp_sched = schedules[opp[0][0]]
    t_end = horizon + (opp_sched.period or 0)
    transits = _outer_transits(k, j0, opp[0], opp_sched, t_end)
    busy = _outer_busy(k, schedules, t_end)
    bps = _plan_outer_car(n, omega, transits, busy, horizon)
    schedules[k.e_infinity] = FlowSchedule(
        face=k.e_infinity, circuit=n, breakpoints=tuple(bps), period=None
    )
    return schedules
