"""Arclength, sector area, and sine/cosine grounded in the polygon scheme.

The point at a given arclength is found by inverting the certified
arclength map: bisection on the circle fraction over the vertex lattice of
the refined triangle, never through a series.  Signed arguments reflect
across the x-axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from .circuits import CirclePoint, step_by_chord, unit_start
from .dyadic import Dyadic
from .errors import FractionOutOfRange, PreconditionViolation, ThetaOutOfRange
from .interval import Interval, Verdict, compare_certain
from .polygons import halve_edge, seed_edge, two_pi_enclosure


@dataclass(frozen=True)
class ArcMeasure:
    fraction: Union[Fraction, Interval]
    theta: Interval
    sector_area: Interval


def arc_measure(fraction: Union[Fraction, Interval], prec: int) -> ArcMeasure:
    """Arclength 2*pi*fraction and sector area theta/2, certified."""
    two_pi = two_pi_enclosure(prec)
    if isinstance(fraction, Fraction):
        if not 0 <= fraction < 1:
            raise FractionOutOfRange(f"fraction {fraction} outside [0, 1)")
        theta = (two_pi * fraction.numerator) / fraction.denominator
    else:
        if fraction.lo.sign < 0 or fraction.hi >= Dyadic(1):
            raise FractionOutOfRange(f"fraction {fraction} outside [0, 1)")
        theta = two_pi * fraction
    return ArcMeasure(fraction=fraction, theta=theta, sector_area=theta / 2)


def _fraction_chords(prec: int, depth: int) -> List[Interval]:
    """chords[j] spans the circle fraction 1/(3*2^j), j = 0..depth."""
    chords = [seed_edge(3, prec)]
    for _ in range(depth):
        chords.append(halve_edge(chords[-1]))
    return chords


def geometric_point(theta: Interval, prec: int) -> CirclePoint:
    """Point whose counterclockwise arc from (1, 0) has length theta.

    Bisects the circle fraction on the lattice a/(3*2^j), advancing the
    candidate point by one precomputed half-level chord per refinement.
    """
    if theta.lo.sign < 0:
        if theta.hi.sign > 0:
            raise ThetaOutOfRange("theta interval straddles zero")
        return geometric_point(-theta, prec).reflect()
    two_pi = two_pi_enclosure(prec)
    if compare_certain(theta, two_pi) is not Verdict.CERTAINLY_LESS:
        raise ThetaOutOfRange("theta must be certifiably below the full turn")
    if theta.hi.sign == 0:
        return unit_start(prec)

    depth = prec + 8
    chords = _fraction_chords(prec, depth)
    tol = Dyadic(1, 8 - prec)

    # bracket state: point at fraction a/(3*2^level); invariant theta lies
    # in [arc(a), arc(a+1)] at the current level
    level = 0
    index = 0
    point = unit_start(prec)

    def arc_at(idx: int, lvl: int) -> Interval:
        return (two_pi * idx) / (3 << lvl)

    # initial coarse placement among the three thirds
    for third in range(3):
        boundary = arc_at(third + 1, 0)
        verdict = compare_certain(theta, boundary)
        if verdict is Verdict.CERTAINLY_LESS:
            break
        if verdict is Verdict.OVERLAP:
            # theta sits on a lattice boundary: pin to it directly
            return _pinned_point(chords, third + 1, 0, theta, boundary, prec)
        index = third + 1
        point = step_by_chord(point, chords[0])

    while level < depth:
        mid_index = 2 * index + 1
        mid_point = step_by_chord(point, chords[level + 1])
        boundary = arc_at(mid_index, level + 1)
        verdict = compare_certain(theta, boundary)
        if verdict is Verdict.OVERLAP:
            slack = _theta_slack(theta, boundary)
            return _inflate(mid_point, slack)
        level += 1
        index = mid_index - 1 if verdict is Verdict.CERTAINLY_LESS else mid_index
        if verdict is Verdict.CERTAINLY_GREATER:
            point = mid_point
        if chords[level].hi < tol:
            break

    # true point lies on the arc from point to point advanced one chord;
    # every coordinate is within the bracket chord of the lower endpoint
    return _inflate(point, chords[level].hi)


def _theta_slack(theta: Interval, boundary: Interval) -> Dyadic:
    # |theta - boundary| is below the hull width; arc distance bounds chord
    return max(theta.hi - boundary.lo, boundary.hi - theta.lo)


def _pinned_point(
    chords, idx: int, lvl: int, theta: Interval, boundary: Interval, prec: int
) -> CirclePoint:
    point = unit_start(prec)
    for _ in range(idx):
        point = step_by_chord(point, chords[lvl])
    return _inflate(point, _theta_slack(theta, boundary))


def _inflate(point: CirclePoint, slack: Dyadic) -> CirclePoint:
    if slack.sign < 0:
        slack = Dyadic(0)
    return CirclePoint(point.x.widen(slack), point.y.widen(slack))


def geometric_sin(theta: Interval, prec: int) -> Interval:
    return geometric_point(theta, prec).y


def geometric_cos(theta: Interval, prec: int) -> Interval:
    return geometric_point(theta, prec).x


@dataclass(frozen=True)
class SandwichReport:
    theta: Interval
    mid: Interval         # theta / sin(theta)
    upper: Interval       # 1 / cos(theta)
    lower_verdict: Verdict   # expect 1 certainly <= mid
    upper_verdict: Verdict   # expect mid certainly <= upper

    def serialize(self, frac_digits: int = 17) -> dict:
        return {
            "theta": list(self.theta.decimal_pair(frac_digits)),
            "mid": list(self.mid.decimal_pair(frac_digits)),
            "upper": list(self.upper.decimal_pair(frac_digits)),
            "lower_verdict": self.lower_verdict.value,
            "upper_verdict": self.upper_verdict.value,
        }


def sandwich_report(theta: Interval, prec: int) -> SandwichReport:
    """Certified two-triangle bracket 1 <= theta/sin(theta) <= 1/cos(theta)."""
    if theta.lo.sign <= 0:
        raise ThetaOutOfRange("theta must be certifiably positive")
    half_pi = two_pi_enclosure(prec) / 4
    if compare_certain(theta, half_pi) is not Verdict.CERTAINLY_LESS:
        raise ThetaOutOfRange("theta must be certifiably below a quarter turn")
    point = geometric_point(theta, prec)
    mid = theta / point.y
    upper = 1 / point.x
    one = Interval.exact(1, prec)
    return SandwichReport(
        theta=theta,
        mid=mid,
        upper=upper,
        lower_verdict=compare_certain(one, mid),
        upper_verdict=compare_certain(mid, upper),
    )
