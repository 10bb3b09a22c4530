"""Independent oracles for tests only.

The Machin arctangent formula gives pi digits through pure integer
arithmetic, sharing no code or method with the polygon pipeline under test.
mpmath supplies high-precision trig reference values.  Nothing here is
imported by the library.
"""

from fractions import Fraction

import mpmath


def machin_pi_digits(count: int) -> str:
    """First ``count`` decimal digits of pi from pi/4 = 4*atan(1/5) - atan(1/239).

    Integer-only evaluation with explicit tail bounds: each arctangent
    series is alternating, so truncation error is below the first dropped
    term; guard digits absorb both tails and the final rounding.
    """
    guard = 12
    scale = 10 ** (count + guard)

    def atan_inv(x: int) -> int:
        # floor-ish of atan(1/x) * scale, error < 2 units in the last place
        total = 0
        term = scale // x
        x_sq = x * x
        k = 0
        while term:
            total += -term if k & 1 else term
            k += 1
            term = scale // (x_sq ** k * x * (2 * k + 1))
        return total

    pi_scaled = 4 * (4 * atan_inv(5) - atan_inv(239))
    digits = str(pi_scaled)[:count]
    return digits[0] + "." + digits[1:] if count > 1 else digits


def trig_chord(fraction: Fraction, dps: int = 50) -> str:
    """Chord subtending the given fraction of the circle: 2*sin(pi*fraction)."""
    with mpmath.workdps(dps):
        value = 2 * mpmath.sin(mpmath.pi * fraction.numerator / fraction.denominator)
        return mpmath.nstr(value, dps - 5)


def trig_value(fn_name: str, x, dps: int = 50) -> str:
    with mpmath.workdps(dps):
        value = getattr(mpmath, fn_name)(mpmath.mpf(x))
        return mpmath.nstr(value, dps - 5)


def contains(interval, reference, dps: int = 50) -> bool:
    """Does the dyadic interval contain the mpmath reference value?"""
    with mpmath.workdps(dps):
        ref = mpmath.mpf(reference)
        lo = mpmath.mpf(interval.lo.man) * mpmath.power(2, interval.lo.exp)
        hi = mpmath.mpf(interval.hi.man) * mpmath.power(2, interval.hi.exp)
        return lo <= ref <= hi
