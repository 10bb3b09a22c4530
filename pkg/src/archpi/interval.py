"""Outward-rounded interval arithmetic over dyadic endpoints.

Every operation returns an interval that contains the exact real result for
any selection of reals from the operand intervals.  Precision is threaded
explicitly: a binary operation works at the smaller of the operand
precisions and rounds each endpoint outward to that many mantissa bits.
Values are immutable; nothing here touches host floating point.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Union

from .dyadic import Dyadic, ZERO
from .errors import DivByZeroInterval, NegativeSqrt

Scalar = Union[int, Dyadic, "Interval"]


class Verdict(enum.Enum):
    CERTAINLY_LESS = "certainly_less"
    CERTAINLY_GREATER = "certainly_greater"
    OVERLAP = "overlap"


class Interval:
    __slots__ = ("lo", "hi", "prec")

    def __init__(self, lo: Dyadic, hi: Dyadic, prec: int):
        if lo > hi:
            raise ValueError(f"inverted interval endpoints: {lo!r} > {hi!r}")
        self.lo = lo
        self.hi = hi
        self.prec = prec

    # -- constructors ------------------------------------------------------

    @staticmethod
    def exact(value: Union[int, Dyadic], prec: int) -> "Interval":
        d = Dyadic(value) if isinstance(value, int) else value
        return Interval(d, d, prec)

    @staticmethod
    def from_fraction(value: Fraction, prec: int) -> "Interval":
        return Interval(
            Dyadic.from_fraction(value, prec, up=False),
            Dyadic.from_fraction(value, prec, up=True),
            prec,
        )

    @staticmethod
    def from_endpoints(lo: Fraction, hi: Fraction, prec: int) -> "Interval":
        return Interval(
            Dyadic.from_fraction(lo, prec, up=False),
            Dyadic.from_fraction(hi, prec, up=True),
            prec,
        )

    def _coerce(self, other: Scalar) -> "Interval":
        if isinstance(other, Interval):
            return other
        return Interval.exact(other, self.prec)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Scalar) -> "Interval":
        o = self._coerce(other)
        p = min(self.prec, o.prec)
        return Interval(
            (self.lo + o.lo).round(p, up=False),
            (self.hi + o.hi).round(p, up=True),
            p,
        )

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "Interval":
        o = self._coerce(other)
        p = min(self.prec, o.prec)
        return Interval(
            (self.lo - o.hi).round(p, up=False),
            (self.hi - o.lo).round(p, up=True),
            p,
        )

    def __rsub__(self, other: Scalar) -> "Interval":
        return self._coerce(other) - self

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo, self.prec)

    def __mul__(self, other: Scalar) -> "Interval":
        if isinstance(other, int):
            p = self.prec
            if other >= 0:
                lo, hi = self.lo, self.hi
            else:
                lo, hi = self.hi, self.lo
            d = Dyadic(other)
            return Interval((lo * d).round(p, False), (hi * d).round(p, True), p)
        o = self._coerce(other)
        p = min(self.prec, o.prec)
        products = [
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        ]
        return Interval(
            min(products).round(p, up=False),
            max(products).round(p, up=True),
            p,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Interval":
        if isinstance(other, int) and other != 0:
            p = self.prec
            if other & (other - 1) == 0 and other > 0:
                k = other.bit_length() - 1
                return Interval(self.lo.scale2(-k), self.hi.scale2(-k), p)
            d = Dyadic(other)
            if other > 0:
                return Interval(
                    self.lo.div(d, p, up=False), self.hi.div(d, p, up=True), p
                )
            return Interval(
                self.hi.div(d, p, up=False), self.lo.div(d, p, up=True), p
            )
        o = self._coerce(other)
        if o.lo.sign <= 0 <= o.hi.sign:
            raise DivByZeroInterval(f"division by {o}")
        p = min(self.prec, o.prec)
        pairs = [(self.lo, o.lo), (self.lo, o.hi), (self.hi, o.lo), (self.hi, o.hi)]
        lo = min(a.div(b, p, up=False) for a, b in pairs)
        hi = max(a.div(b, p, up=True) for a, b in pairs)
        return Interval(lo, hi, p)

    def __rtruediv__(self, other: Scalar) -> "Interval":
        return self._coerce(other) / self

    def sqrt(self) -> "Interval":
        if self.lo.sign < 0:
            raise NegativeSqrt(f"sqrt of {self}")
        return Interval(
            self.lo.sqrt(self.prec, up=False),
            self.hi.sqrt(self.prec, up=True),
            self.prec,
        )

    # -- queries ------------------------------------------------------------

    def width(self) -> Dyadic:
        return self.hi - self.lo

    def mid(self) -> Dyadic:
        return (self.lo + self.hi).half()

    def mag(self) -> Dyadic:
        return max(abs(self.lo), abs(self.hi))

    def contains(self, value: Union[int, Fraction, Dyadic]) -> bool:
        if isinstance(value, Dyadic):
            return self.lo <= value <= self.hi
        f = Fraction(value)
        return self.lo.as_fraction() <= f <= self.hi.as_fraction()

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def hull(self, other: "Interval") -> "Interval":
        return Interval(
            min(self.lo, other.lo), max(self.hi, other.hi),
            min(self.prec, other.prec),
        )

    def widen(self, slack: Dyadic) -> "Interval":
        return Interval(self.lo - slack, self.hi + slack, self.prec)

    def with_prec(self, prec: int) -> "Interval":
        return Interval(
            self.lo.round(prec, up=False), self.hi.round(prec, up=True), prec
        )

    def abs(self) -> "Interval":
        if self.lo.sign >= 0:
            return self
        if self.hi.sign <= 0:
            return -self
        return Interval(ZERO, max(-self.lo, self.hi), self.prec)

    # -- rendering -----------------------------------------------------------

    def decimal_pair(self, frac_digits: int = 17) -> tuple:
        """Outward-rounded decimal endpoint strings."""
        return (
            self.lo.decimal(frac_digits, up=False),
            self.hi.decimal(frac_digits, up=True),
        )

    def serialize(self, frac_digits: int = 17) -> str:
        lo, hi = self.decimal_pair(frac_digits)
        return f"[{lo}, {hi}] @{self.prec}"

    def __repr__(self) -> str:
        lo, hi = self.decimal_pair(12)
        return f"Interval({lo}, {hi}, prec={self.prec})"


def compare_certain(a: Interval, b: Interval) -> Verdict:
    """Three-valued comparison; certain only when the intervals separate."""
    if a.hi < b.lo:
        return Verdict.CERTAINLY_LESS
    if a.lo > b.hi:
        return Verdict.CERTAINLY_GREATER
    return Verdict.OVERLAP
