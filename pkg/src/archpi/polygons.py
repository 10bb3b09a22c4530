"""Regular inscribed/circumscribed polygon refinements and certified pi bounds.

Everything is built from field operations and square roots on intervals: the
inscribed edge of the seed polygon, the bisected-chord recurrence, the
tangent edge, and the vertex gap.  No trigonometry enters the certified path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

from .dyadic import Dyadic
from .errors import InvalidChord, InvalidEdge, IterationCapExceeded, UnsupportedSeed
from .interval import Interval

#: squared inscribed edge of the supported seed polygons in the unit circle
_SEED_SQUARED = {3: 3, 4: 2, 6: 1}

DEFAULT_DIGIT_CAP = 10_000


@dataclass(frozen=True)
class RegularScheme:
    """Regular refinement index: base n-gon bisected m times."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("base polygon needs at least 3 edges")
        if self.m < 0:
            raise ValueError("refinement depth must be nonnegative")

    @property
    def edge_count(self) -> int:
        return (1 << self.m) * self.n


@dataclass(frozen=True)
class SchemeMeasures:
    scheme: RegularScheme
    ell: Interval      # inscribed edge
    L: Interval        # circumscribed edge
    p: Interval        # inscribed perimeter
    P: Interval        # circumscribed perimeter
    a: Interval        # inscribed area
    A: Interval        # circumscribed area
    h: Interval        # circumscribed vertex gap

    def report_row(self, frac_digits: int = 17) -> dict:
        s = self.scheme
        return {
            "n": s.n,
            "m": s.m,
            "precision": self.ell.prec,
            "p_lo": self.p.decimal_pair(frac_digits)[0],
            "p_hi": self.p.decimal_pair(frac_digits)[1],
            "P_lo": self.P.decimal_pair(frac_digits)[0],
            "P_hi": self.P.decimal_pair(frac_digits)[1],
            "a_lo": self.a.decimal_pair(frac_digits)[0],
            "a_hi": self.a.decimal_pair(frac_digits)[1],
            "A_lo": self.A.decimal_pair(frac_digits)[0],
            "A_hi": self.A.decimal_pair(frac_digits)[1],
            "h_hi": self.h.decimal_pair(frac_digits)[1],
        }


def seed_edge(n: int, prec: int) -> Interval:
    """Inscribed edge of the base n-gon: sqrt(3), sqrt(2), 1."""
    if n not in _SEED_SQUARED:
        raise UnsupportedSeed(f"no algebraic seed for n={n}")
    return Interval.exact(_SEED_SQUARED[n], prec).sqrt()


def _require_chord(ell: Interval) -> None:
    if ell.lo.sign <= 0 or ell.hi >= Dyadic(2):
        raise InvalidChord(f"chord must lie certifiably in (0, 2): {ell}")


def halve_edge(ell: Interval) -> Interval:
    """Chord subtending half the arc: sqrt(2 - sqrt(4 - ell^2)).

    Evaluated as ell / sqrt(2 + sqrt(4 - ell^2)), the same value without
    the cancellation that destroys relative precision for small chords.
    """
    _require_chord(ell)
    return ell / (2 + (4 - ell * ell).sqrt()).sqrt()


def circumscribed_edge(ell: Interval) -> Interval:
    """Tangent edge with matching arc: 2*ell / sqrt(4 - ell^2)."""
    _require_chord(ell)
    return (ell * 2) / (4 - ell * ell).sqrt()


def vertex_gap(L: Interval) -> Interval:
    """Distance from a circumscribed vertex to the circle: sqrt(1+(L/2)^2)-1."""
    if L.lo.sign <= 0:
        raise InvalidEdge(f"circumscribed edge must be certifiably positive: {L}")
    return (4 + L * L).sqrt() / 2 - 1


def _measures_from_edge(scheme: RegularScheme, ell: Interval) -> SchemeMeasures:
    count = scheme.edge_count
    L = circumscribed_edge(ell)
    p = ell * count
    P = L * count
    a = (p * (4 - ell * ell).sqrt()) / 4   # (1/2) p sqrt(1 - ell^2/4)
    A = P / 2
    h = vertex_gap(L)
    return SchemeMeasures(scheme, ell, L, p, P, a, A, h)


def iter_scheme_measures(
    n: int, m_max: int, prec: int
) -> Iterator[SchemeMeasures]:
    """Measures for m = 0..m_max sharing one bisected-edge chain."""
    ell = seed_edge(n, prec)
    for m in range(m_max + 1):
        yield _measures_from_edge(RegularScheme(n, m), ell)
        ell = halve_edge(ell)


def scheme_measures(scheme: RegularScheme, prec: int) -> SchemeMeasures:
    if prec < 16:
        raise ValueError("precision must be at least 16 bits")
    ell = seed_edge(scheme.n, prec)
    for _ in range(scheme.m):
        ell = halve_edge(ell)
    return _measures_from_edge(scheme, ell)


def pi_bounds(scheme: RegularScheme, prec: int) -> Interval:
    """[p/2 lower, P/2 upper]: a certified enclosure of pi."""
    measures = scheme_measures(scheme, prec)
    return Interval((measures.p / 2).lo, (measures.P / 2).hi, prec)


_PI_CACHE: Dict[Tuple[int, int], Interval] = {}


def pi_enclosure(prec: int) -> Interval:
    """Cached pi enclosure from the triangle scheme, tight at ``prec`` bits.

    Depth prec//2 + 8 drives the bracket width below the rounding floor,
    so the result is limited by precision, not refinement depth.
    """
    key = (3, prec)
    cached = _PI_CACHE.get(key)
    if cached is None:
        cached = pi_bounds(RegularScheme(3, prec // 2 + 8), prec + 16).with_prec(prec)
        _PI_CACHE[key] = cached
    return cached


def two_pi_enclosure(prec: int) -> Interval:
    return pi_enclosure(prec) * 2


def _truncated_digits(value: Dyadic, count: int) -> int:
    """floor(value * 10**(count-1)) for values in (1, 10)."""
    scaled = value.man * 10 ** (count - 1)
    if value.exp >= 0:
        return scaled << value.exp
    return scaled >> -value.exp


def pi_digits(count: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> str:
    """First ``count`` decimal digits of pi, certified by interval agreement.

    Refines depth and precision until both endpoints of the pi bracket
    truncate to the same digit string.
    """
    if count < 1:
        raise ValueError("digit count must be positive")
    if count > digit_cap:
        raise IterationCapExceeded(f"digit count {count} above cap {digit_cap}")
    prec = max(64, 4 * count)
    m = (17 * count + 9) // 10  # ~1.7 digits of depth per digit requested
    for _ in range(64):
        bracket = pi_bounds(RegularScheme(3, m), prec)
        lo_digits = _truncated_digits(bracket.lo, count)
        hi_digits = _truncated_digits(bracket.hi, count)
        if lo_digits == hi_digits:
            text = str(lo_digits)
            return text[0] + "." + text[1:] if count > 1 else text
        m += 4
        prec *= 2
    raise IterationCapExceeded("pi digit refinement failed to converge")
