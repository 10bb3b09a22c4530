from fractions import Fraction

import pytest

from archpi.circuits import (
    Circuit,
    circuit_measures,
    distance,
    random_circuit,
    regular_ring,
    step_by_chord,
    tangent_intersection,
    unit_start,
)
from archpi.dyadic import Dyadic
from archpi.errors import AntipodalTangents, InvalidChord, PreconditionViolation
from archpi.interval import Interval, Verdict, compare_certain
from archpi.polygons import pi_enclosure, seed_edge

from oracles import contains

PREC = 64


def test_unit_start_on_circle():
    p = unit_start(PREC)
    assert p.on_circle()
    assert p.x.contains(1) and p.y.contains(0)


def test_step_by_chord_hexagon_closes():
    edge = seed_edge(6, PREC)
    p = unit_start(PREC)
    for _ in range(6):
        p = step_by_chord(p, edge)
    assert p.x.contains(1) and p.y.contains(0)
    assert p.on_circle()


def test_step_chord_validation():
    with pytest.raises(InvalidChord):
        step_by_chord(unit_start(PREC), Interval.exact(2, PREC))


def test_long_chain_drift_stays_small():
    ring = regular_ring(10, PREC)  # 3072 steps
    last = ring[-1]
    assert last.on_circle()
    assert last.x.width() < Dyadic(1, -40)


def test_distance_symmetry_and_value():
    ring = regular_ring(1, PREC)  # hexagon
    d = distance(ring[0], ring[2])
    assert contains(d, "1.7320508075688772935274463415058723669428052538104")


def test_tangent_intersection_square():
    ring = regular_ring(2, PREC)  # 12-gon
    p, q = ring[0], ring[3]  # quarter turn apart
    tx, ty = tangent_intersection(p, q)
    assert tx.contains(1) and ty.contains(1)


def test_tangent_intersection_antipodal_raises():
    p = unit_start(PREC)
    q = type(p)(Interval.exact(-1, PREC), Interval.exact(0, PREC))
    with pytest.raises(AntipodalTangents):
        tangent_intersection(p, q)


def test_circuit_construction_rules():
    with pytest.raises(PreconditionViolation):
        Circuit([unit_start(PREC)] * 2, PREC)
    with pytest.raises(PreconditionViolation):
        Circuit.from_regular_indices(1, [0, 1], PREC)
    with pytest.raises(PreconditionViolation):
        # arc of 3 of 6 steps = half circle
        Circuit.from_regular_indices(1, [0, 1, 3], PREC)


def test_square_circuit_measures():
    sq = Circuit.from_regular_indices(2, [0, 3, 6, 9], PREC)
    m = circuit_measures(sq)
    assert contains(m.perimeter_in, "5.6568542494923801952067548968387923142786875015078")
    assert m.perimeter_circ.contains(8)
    assert m.area_in.contains(2)
    assert m.area_circ.contains(4)
    assert contains(m.mesh, "1.4142135623730950488016887242096980785696718753769")


def test_hexagon_circuit_measures():
    hexa = Circuit.from_regular_indices(1, [0, 1, 2, 3, 4, 5], PREC)
    m = circuit_measures(hexa)
    assert m.perimeter_in.contains(6)
    assert m.mesh.contains(1) and m.min_edge.contains(1)
    assert contains(m.area_circ, "3.4641016151377545870548926830117447338560753926457")


def test_irregular_circuit_measures():
    # 12-gon vertices {0,2,5,8,10}: arcs 2,3,3,2,2 -> chords 1,sqrt2,sqrt2,1,1
    c = Circuit.from_regular_indices(2, [0, 2, 5, 8, 10], PREC)
    m = circuit_measures(c)
    assert contains(m.perimeter_in, "5.8284271247461900976033774484193961571393437507539")
    assert contains(m.mesh, "1.4142135623730950488016887242096980785696718753769")
    assert contains(m.min_edge, 1)


def test_generic_path_agrees_with_gap_path():
    fast = Circuit.from_regular_indices(3, [0, 2, 5, 9, 14, 20], PREC)
    slow = Circuit(fast.vertices, PREC)  # drops the gap bookkeeping
    mf, ms = circuit_measures(fast), circuit_measures(slow)
    for name in ("perimeter_in", "perimeter_circ", "area_in", "area_circ", "mesh", "min_edge"):
        assert getattr(mf, name).overlaps(getattr(ms, name)), name


def test_random_circuit_contract():
    cap = Interval.exact(Dyadic(1, -3), PREC)
    c = random_circuit(5, cap, seed=42, prec=PREC)
    assert len(c) >= 5
    m = circuit_measures(c)
    assert compare_certain(m.mesh, cap) is Verdict.CERTAINLY_LESS
    # determinism
    again = random_circuit(5, cap, seed=42, prec=PREC)
    assert [v.x.lo for v in c.vertices] == [v.x.lo for v in again.vertices]
    different = random_circuit(5, cap, seed=43, prec=PREC)
    assert len(different) != len(c) or any(
        v.x.lo != w.x.lo for v, w in zip(c.vertices, different.vertices)
    )


def test_random_circuit_validation():
    cap = Interval.exact(1, PREC)
    with pytest.raises(PreconditionViolation):
        random_circuit(2, cap, seed=1, prec=PREC)
    with pytest.raises(PreconditionViolation):
        random_circuit(3, Interval.exact(0, PREC), seed=1, prec=PREC)


def test_sandwich_against_pi():
    pi = pi_enclosure(PREC)
    cap = Interval.exact(Dyadic(1, -5), PREC)
    m = circuit_measures(random_circuit(3, cap, seed=9, prec=PREC))
    assert compare_certain(m.perimeter_in, pi * 2) is Verdict.CERTAINLY_LESS
    assert compare_certain(pi * 2, m.perimeter_circ) is Verdict.CERTAINLY_LESS
    assert compare_certain(m.area_in, pi) is Verdict.CERTAINLY_LESS
    assert compare_certain(pi, m.area_circ) is Verdict.CERTAINLY_LESS


def test_monotone_comparison_between_circuits():
    # coarse circuit whose min edge certainly exceeds the fine circuit's mesh
    coarse = circuit_measures(Circuit.from_regular_indices(1, [0, 1, 2, 3, 4, 5], PREC))
    fine = circuit_measures(
        random_circuit(3, Interval.exact(Dyadic(1, -4), PREC), seed=3, prec=PREC)
    )
    assert compare_certain(fine.mesh, coarse.min_edge) is Verdict.CERTAINLY_LESS
    assert compare_certain(coarse.perimeter_in, fine.perimeter_in) is Verdict.CERTAINLY_LESS
    assert compare_certain(fine.perimeter_circ, coarse.perimeter_circ) is Verdict.CERTAINLY_LESS


def test_serialize_shape():
    m = circuit_measures(Circuit.from_regular_indices(1, [0, 1, 2, 3, 4, 5], PREC))
    out = m.serialize(8)
    assert set(out) == {
        "perimeter_in", "perimeter_circ", "area_in", "area_circ", "mesh", "min_edge",
    }
    assert out["perimeter_in"][0] <= out["perimeter_in"][1]
