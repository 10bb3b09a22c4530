"""Circuits: counterclockwise point sequences on the unit circle.

Points carry coordinate intervals, never angles; all construction is by
algebraic chord-stepping so the pipeline stays independent of trigonometry.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .dyadic import Dyadic
from .errors import AntipodalTangents, InvalidChord, PreconditionViolation
from .interval import Interval, compare_certain, Verdict
from .polygons import halve_edge, seed_edge


@dataclass(frozen=True)
class CirclePoint:
    x: Interval
    y: Interval

    def on_circle(self) -> bool:
        """Certified membership: x^2 + y^2 must contain 1."""
        return (self.x * self.x + self.y * self.y).contains(1)

    def reflect(self) -> "CirclePoint":
        return CirclePoint(self.x, -self.y)

    def serialize(self, frac_digits: int = 17) -> list:
        return [
            list(self.x.decimal_pair(frac_digits)),
            list(self.y.decimal_pair(frac_digits)),
        ]


def unit_start(prec: int) -> CirclePoint:
    return CirclePoint(Interval.exact(1, prec), Interval.exact(0, prec))


def distance(p: CirclePoint, q: CirclePoint) -> Interval:
    dx = q.x - p.x
    dy = q.y - p.y
    return (dx * dx + dy * dy).sqrt()


def step_by_chord(p: CirclePoint, c: Interval) -> CirclePoint:
    """Counterclockwise neighbor of p at chord distance c.

    Rotates by the angle with cosine 1 - c^2/2 and sine c*sqrt(4-c^2)/2.
    The rotation is an isometry, so coordinate widths grow only additively
    (one rounding term per step); long chains stay tight without any
    explicit renormalization, which would decorrelate the coordinates and
    inflate the enclosure instead of shrinking it.
    """
    if c.lo.sign <= 0 or c.hi >= Dyadic(2):
        raise InvalidChord(f"step chord must lie certifiably in (0, 2): {c}")
    c_sq = c * c
    cos_t = 1 - c_sq / 2
    sin_t = (c * (4 - c_sq).sqrt()) / 2
    x = p.x * cos_t - p.y * sin_t
    y = p.x * sin_t + p.y * cos_t
    return CirclePoint(x, y)


def tangent_intersection(p: CirclePoint, q: CirclePoint) -> Tuple[Interval, Interval]:
    """Meet of the tangent lines at p and q: (p + q) / (1 + p.q)."""
    denom = 1 + (p.x * q.x + p.y * q.y)
    if denom.lo.sign <= 0 <= denom.hi.sign:
        raise AntipodalTangents("tangent lines are (possibly) parallel")
    return ((p.x + q.x) / denom, (p.y + q.y) / denom)


class Circuit:
    """Closed counterclockwise point sequence; adjacent arcs < half circle.

    ``vertices`` is the open vertex list; ``points`` closes it by repeating
    the first point.  The arc condition is structural: circuits are built
    from regular-polygon vertex indices with integer gap bookkeeping.
    """

    def __init__(self, vertices: Sequence[CirclePoint], prec: int):
        if len(vertices) < 3:
            raise PreconditionViolation("a circuit needs at least 3 points")
        self.vertices: List[CirclePoint] = list(vertices)
        self.prec = prec
        # set by from_regular_indices: ring depth and per-edge step counts,
        # which let circuit_measures use one exact chord per distinct gap
        self.ring_m: int = -1
        self.gaps: List[int] = []

    @property
    def points(self) -> List[CirclePoint]:
        return self.vertices + [self.vertices[0]]

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self):
        pts = self.vertices
        for i in range(len(pts)):
            yield pts[i], pts[(i + 1) % len(pts)]

    @staticmethod
    def from_regular_indices(m: int, indices: Sequence[int], prec: int) -> "Circuit":
        """Circuit through the given vertices of the 3*2^m-gon ring."""
        ring = regular_ring(m, prec)
        n = len(ring)
        idx = sorted(set(i % n for i in indices))
        if len(idx) < 3:
            raise PreconditionViolation("a circuit needs at least 3 points")
        gaps = [idx[j + 1] - idx[j] for j in range(len(idx) - 1)]
        gaps.append(n - idx[-1] + idx[0])
        if max(gaps) * 2 >= n:
            raise PreconditionViolation("adjacent arc spans at least half the circle")
        circuit = Circuit([ring[i] for i in idx], prec)
        circuit.ring_m = m
        circuit.gaps = gaps
        return circuit


@dataclass(frozen=True)
class CircuitMeasures:
    perimeter_in: Interval
    perimeter_circ: Interval
    area_in: Interval
    area_circ: Interval
    mesh: Interval
    min_edge: Interval

    def serialize(self, frac_digits: int = 17) -> dict:
        out = {}
        for name in (
            "perimeter_in",
            "perimeter_circ",
            "area_in",
            "area_circ",
            "mesh",
            "min_edge",
        ):
            lo, hi = getattr(self, name).decimal_pair(frac_digits)
            out[name] = [lo, hi]
        return out


def _edge_terms(chord: Interval) -> Tuple[Interval, Interval]:
    """(tangent detour length, inscribed triangle area) for one edge chord.

    The two tangent legs at an edge of chord c each measure c/sqrt(4-c^2);
    the inscribed triangle has area (c/4)*sqrt(4-c^2) (Heron form).
    """
    root = (4 - chord * chord).sqrt()
    return (chord * 2) / root, (chord * root) / 4


def circuit_measures(circuit: Circuit) -> CircuitMeasures:
    prec = circuit.prec
    if circuit.gaps:
        # ring-based circuit: one exact chord per distinct step count
        counts = Counter(circuit.gaps)
        ring = regular_ring(circuit.ring_m, prec)
        chord_of = {g: distance(ring[0], ring[g]) for g in counts}
        zero = Interval.exact(0, prec)
        perim_in = perim_circ = area_in = zero
        for g, count in counts.items():
            chord = chord_of[g]
            detour, tri_area = _edge_terms(chord)
            perim_in = perim_in + chord * count
            perim_circ = perim_circ + detour * count
            area_in = area_in + tri_area * count
        chords = [chord_of[min(counts)], chord_of[max(counts)]]
    else:
        zero = Interval.exact(0, prec)
        perim_in = perim_circ = area_in = zero
        chords = []
        for p, q in circuit.edges():
            chord = distance(p, q)
            chords.append(chord)
            detour, tri_area = _edge_terms(chord)
            perim_in = perim_in + chord
            perim_circ = perim_circ + detour
            area_in = area_in + tri_area
    mesh = Interval(
        max(c.lo for c in chords), max(c.hi for c in chords), prec
    )
    min_edge = Interval(
        min(c.lo for c in chords), min(c.hi for c in chords), prec
    )
    return CircuitMeasures(
        perimeter_in=perim_in,
        perimeter_circ=perim_circ,
        area_in=area_in,
        area_circ=perim_circ / 2,
        mesh=mesh,
        min_edge=min_edge,
    )


_RING_CACHE: Dict[Tuple[int, int], List[CirclePoint]] = {}


def regular_ring(m: int, prec: int) -> List[CirclePoint]:
    """All 3*2^m vertices of the regular triangle refinement, cached."""
    key = (m, prec)
    ring = _RING_CACHE.get(key)
    if ring is not None:
        return ring
    ell = seed_edge(3, prec)
    for _ in range(m):
        ell = halve_edge(ell)
    point = unit_start(prec)
    ring = [point]
    for _ in range((3 << m) - 1):
        point = step_by_chord(point, ell)
        ring.append(point)
    _RING_CACHE[key] = ring
    return ring


def _refinement_for_cap(k: int, mesh_cap: Interval, prec: int) -> Tuple[int, int]:
    """Smallest depth m whose ring supports varied gaps under the cap.

    Returns (m, gmax): gmax steps of the ring edge are certainly shorter
    than the cap, gmax*k fits in the ring, and arcs stay under half circle.
    Prefers a depth where gmax >= 4 so generated circuits actually vary.
    """
    if mesh_cap.lo.sign <= 0:
        raise PreconditionViolation("mesh cap must be certifiably positive")
    fallback = None
    ell = seed_edge(3, prec)
    for m in range(64):
        n = 3 << m
        if n >= 2 * k:
            gmax = 0
            while (
                compare_certain(ell * (gmax + 1), mesh_cap) is Verdict.CERTAINLY_LESS
                and (gmax + 1) * 2 < n
                and (gmax + 1) * k <= n
            ):
                gmax += 1
            if gmax >= 4:
                return m, gmax
            if gmax >= 1 and fallback is None:
                fallback = (m, gmax)
            if fallback is not None and m - fallback[0] >= 4:
                break
        ell = halve_edge(ell)
    if fallback is not None:
        return fallback
    raise PreconditionViolation("mesh cap too small for supported refinement depth")


def random_circuit(
    k: int, mesh_cap: Interval, seed: int, prec: int = 64
) -> Circuit:
    """Deterministic random circuit on regular-polygon vertices.

    Every edge chord is certified below the cap (via the subadditive bound
    gap * ring_edge), every arc is under half a circle, and at least k
    points appear.
    """
    if k < 3:
        raise PreconditionViolation("need at least 3 points")
    m, gmax = _refinement_for_cap(k, mesh_cap, prec)
    n = 3 << m
    rng = random.Random(seed)
    indices = [0]
    position = 0
    while True:
        remaining = n - position
        if remaining <= gmax:
            break
        gap = rng.randint(1, gmax)
        gap = min(gap, remaining - 1)
        position += gap
        indices.append(position)
    return Circuit.from_regular_indices(m, indices, prec)
