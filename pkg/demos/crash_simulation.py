"""Exact-arithmetic traffic flows and car crashes on sphere subdivisions.

One car drives anticlockwise around each face.  On a sphere, any valid
flow forces at least two complete crashes: either two cars meeting head-on
inside an edge, or every car around a vertex arriving at once.  The
adversarial planner then concentrates the outer car's crashes at a single
designated point omega.
"""
from fractions import Fraction as Q
from math import lcm

from onerelator import (
    adversarial_schedule,
    generate_random,
    simulate,
    uniform_schedule,
    verify_at_least_two_crashes,
)

# a random subdivision with unit-speed cars, phased by the same seed
k = generate_random(seed=2, size=4)
schedules = {f.id: uniform_schedule(f) for f in k.faces}
common = lcm(*(int(s.period) for s in schedules.values()))
ok, events = verify_at_least_two_crashes(k, schedules, horizon=Q(2 * common))
complete = [e for e in events if e.complete]
print(f"complete crashes in two common periods: {len(complete)} (>=2: {ok})")
for e in complete[:4]:
    print(f"  t={e.time}  site={e.site}  cars={e.participants}")

# the adversarial outer car: all its meetings happen exactly at omega
k = generate_random(seed=0, size=3)
eid = k.face_map[k.e_infinity].boundary[0][0]
opp = [f for f, _ in k.edge_incidences(eid) if f != k.e_infinity][0]
omega, horizon = Q(1, 3), Q(40)

b = uniform_schedule(k.face_map[opp])
outer = adversarial_schedule(k, b, omega, horizon)
schedules = {
    f.id: uniform_schedule(f) for f in k.faces if f.id not in (k.e_infinity, opp)
}
schedules[k.e_infinity] = outer
schedules[opp] = b

events = simulate(k, schedules, horizon)
meetings = [e for e in events if e.complete and k.e_infinity in e.participants]
print(f"\nouter-car meetings over horizon {horizon}: {len(meetings)}")
sites = {e.site for e in meetings}
print(f"all at the designated point: {sites == {('edge', eid, omega)}}")
