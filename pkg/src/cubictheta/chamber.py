"""Weyl-chamber invariants of a split-regular unit.

With |rho_1| > |rho_2| > |rho_3| and |rho_1 rho_2 rho_3| = 1 the two
chamber coordinates are

    alpha1 = |rho_1 rho_3| / rho_2^2      (> 1 inside the chamber)
    alpha2 = (rho_2 / rho_3)^2            (> 1 automatically)

They are algebraic, so all membership decisions are exact rational-interval
comparisons; only the logarithmic coordinates need transcendental (mpmath)
evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UndecidableAtBound
from .intervals import FracInterval, log_interval, mpf_interval_mul
from .roots import MAX_PRECISION_BITS, EmbeddingTriple


@dataclass(frozen=True)
class SignVector:
    """Diagonal signs of the split part, one per embedding."""

    e1: int
    e2: int
    e3: int

    def __post_init__(self):
        for e in (self.e1, self.e2, self.e3):
            if e not in (1, -1):
                raise ValueError(f"sign entries must be +-1, got {e}")

    def entries(self) -> tuple[int, int, int]:
        return (self.e1, self.e2, self.e3)


@dataclass(frozen=True)
class ChamberPoint:
    """Chamber coordinates of one embedding triple.

    log coordinates: c1 = log(alpha1), c2 = log(alpha2)/2, and the flat
    length weight l_value = 2 * c1 * c2.
    """

    alpha1: FracInterval
    alpha2: FracInterval
    embeddings: EmbeddingTriple
    log_prec: int = 64

    @property
    def c1(self):
        lo, hi = log_interval(self.alpha1, self.log_prec)
        return (lo + hi) / 2

    @property
    def c2(self):
        lo, hi = log_interval(self.alpha2, self.log_prec)
        return (lo + hi) / 4  # log(alpha2)/2

    @property
    def l_value(self):
        l1 = log_interval(self.alpha1, self.log_prec)
        l2 = log_interval(self.alpha2, self.log_prec)
        lo, hi = mpf_interval_mul(l1, l2)
        return (lo + hi) / 2  # 2 * c1 * c2 = log(alpha1) * log(alpha2)

    def refined(self, precision: int) -> "ChamberPoint":
        return alpha_invariants(self.embeddings.refined(precision),
                                log_prec=self.log_prec)


def alpha_invariants(e: EmbeddingTriple, log_prec: int = 64) -> ChamberPoint:
    """Chamber point of a certified embedding triple (exact intervals)."""
    m1, m2, m3 = e.moduli()
    alpha1 = (m1 * m3) / (m2 * m2)
    alpha2 = (m2 * m2) / (m3 * m3)
    return ChamberPoint(alpha1=alpha1, alpha2=alpha2, embeddings=e,
                        log_prec=log_prec)


def in_chamber(cp: ChamberPoint, T1, T2) -> bool:
    """Certified decision of 1 < alpha1 <= T1 and 1 < alpha2 <= T2.

    Escalates the underlying root precision while a comparison straddles a
    boundary; raises UndecidableAtBound at the hard precision cap (the
    enumerator then applies the closed-boundary convention and logs it).
    """
    T1 = Fraction(T1)
    T2 = Fraction(T2)
    if T1 <= 1 or T2 <= 1:
        raise ValueError("thresholds must exceed 1")
    point = cp
    while True:
        checks = (point.alpha1.gt(1), point.alpha1.le(T1),
                  point.alpha2.gt(1), point.alpha2.le(T2))
        decisions = [c for c in checks if c is not None]
        if any(d is False for d in decisions):
            return False
        if len(decisions) == 4:
            return True
        prec = point.embeddings.precision
        if prec >= MAX_PRECISION_BITS:
            raise UndecidableAtBound(
                f"alpha enclosure of {point.embeddings.poly} straddles a "
                f"threshold at {prec} bits")
        point = point.refined(prec * 2)


def eta_normalized(cp: ChamberPoint) -> FracInterval:
    """Exact enclosure of eta(p) * alpha1^(-4/3) * alpha2^(-1).

    In terms of the moduli x1 > 1 > x2 > x3 this equals
    (1 - x1^-2)(1 - x2^2)(1 - x3^2), a product of three factors in (0,1)
    that tends to 1 deep inside the chamber.
    """
    m1, m2, m3 = cp.embeddings.moduli()
    one = FracInterval(1)
    return (one - (one / (m1 * m1))) * (one - m2 * m2) * (one - m3 * m3)


def det_nilpotent_factor(moduli, signs: SignVector):
    """det(1 - (at)^{-1}) on the upper-triangular nilpotent space:
    product over pairs i < j of (1 - e_i e_j x_j / x_i).

    Works with any numeric type supporting arithmetic (float, Fraction,
    FracInterval). Callers guarantee x1 > x2 > x3 > 0.
    """
    x1, x2, x3 = moduli
    e1, e2, e3 = signs.entries()
    return (1 - e1 * e2 * (x2 / x1)) * (1 - e1 * e3 * (x3 / x1)) \
        * (1 - e2 * e3 * (x3 / x2))


def index_factor(lambda_flat, moduli, signs: SignVector):
    """lambda_flat / det_nilpotent_factor; the flat volume is caller-supplied."""
    if lambda_flat == 0:
        return lambda_flat * 0
    det = det_nilpotent_factor(moduli, signs)
    if det == 0:
        raise ZeroDivisionError("split-singular input: det factor vanishes")
    return lambda_flat / det


def chamber_point_floats(cp: ChamberPoint) -> tuple[float, float]:
    return float(cp.alpha1.mid), float(cp.alpha2.mid)
