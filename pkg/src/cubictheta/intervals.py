"""Exact rational intervals and precision-tracked logarithms.

All certified decisions in the package reduce to arithmetic on intervals
with exact rational (usually dyadic) endpoints, so ordinary Fraction
arithmetic *is* the interval arithmetic: no rounding ever happens.
Transcendental values (logs of algebraic quantities) are computed with
mpmath at an explicit working precision and widened by a few ulps, which
keeps them honest enclosures for every comparison we make with them.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

_ULP_SLOP = 8  # widen transcendental endpoints by this many ulps


class FracInterval:
    """Closed interval with exact rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    def __repr__(self):
        return f"FracInterval({self.lo}, {self.hi})"

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def overlaps(self, other: "FracInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __neg__(self):
        return FracInterval(-self.hi, -self.lo)

    def __add__(self, other):
        if not isinstance(other, FracInterval):
            other = FracInterval(other)
        return FracInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, FracInterval):
            other = FracInterval(other)
        return FracInterval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        return FracInterval(other) - self

    def __mul__(self, other):
        if not isinstance(other, FracInterval):
            other = FracInterval(other)
        prods = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
        return FracInterval(min(prods), max(prods))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, FracInterval):
            other = FracInterval(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval divisor contains zero")
        quots = (self.lo / other.lo, self.lo / other.hi,
                 self.hi / other.lo, self.hi / other.hi)
        return FracInterval(min(quots), max(quots))

    def __rtruediv__(self, other):
        return FracInterval(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer powers are exact")
        if n < 0:
            return FracInterval(1) / self ** (-n)
        if n == 0:
            return FracInterval(1)
        if n % 2 == 1 or self.lo >= 0:
            return FracInterval(self.lo ** n, self.hi ** n)
        if self.hi <= 0:
            return FracInterval(self.hi ** n, self.lo ** n)
        return FracInterval(0, max(self.lo ** n, self.hi ** n))

    def abs(self) -> "FracInterval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return FracInterval(0, max(-self.lo, self.hi))

    # --- certified order predicates (None = undecided) ---

    def lt(self, x) -> bool | None:
        x = Fraction(x)
        if self.hi < x:
            return True
        if self.lo >= x:
            return False
        return None

    def le(self, x) -> bool | None:
        x = Fraction(x)
        if self.hi <= x:
            return True
        if self.lo > x:
            return False
        return None

    def gt(self, x) -> bool | None:
        x = Fraction(x)
        if self.lo > x:
            return True
        if self.hi <= x:
            return False
        return None

    def sign(self) -> int | None:
        """Certified sign, or None if the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def __float__(self):
        return float(self.mid)


def frac_to_mpf(q: Fraction, prec: int, rnd: str) -> mpmath.mpf:
    """Convert an exact rational to mpf with directed rounding ('f' or 'c')."""
    raw = mpmath.libmp.from_rational(q.numerator, q.denominator, prec, rnd)
    return mpmath.mpf(raw)


def _widen(lo: mpmath.mpf, hi: mpmath.mpf, prec: int):
    eps = mpmath.mpf(2) ** (-prec + _ULP_SLOP)
    scale = max(abs(lo), abs(hi), mpmath.mpf(1))
    return lo - scale * eps, hi + scale * eps


def log_interval(x: FracInterval, prec: int = 64):
    """Enclosure of log over a positive rational interval, as a pair of mpf.

    mpmath's log is correct to ~1 ulp at working precision; endpoints are
    widened by a slop factor so the result stays a true enclosure.
    """
    if x.lo <= 0:
        raise ValueError("log requires a strictly positive interval")
    with mpmath.workprec(prec + 16):
        lo = mpmath.log(frac_to_mpf(x.lo, prec + 16, "f"))
        hi = mpmath.log(frac_to_mpf(x.hi, prec + 16, "c"))
        lo, hi = _widen(lo, hi, prec)
    return lo, hi


def log_frac(q: Fraction, prec: int = 64):
    """Enclosure of log of a single positive rational."""
    return log_interval(FracInterval(q), prec)


def mpf_interval_mul(a, b):
    """Product enclosure for two (lo, hi) mpf pairs."""
    prods = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(prods), max(prods)


class Dyadic:
    """Helpers for dyadic rationals n / 2**k used by the root refiner."""

    @staticmethod
    def to_fraction(n: int, k: int) -> Fraction:
        return Fraction(n, 1 << k) if k >= 0 else Fraction(n << (-k), 1)
