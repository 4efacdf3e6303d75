"""Monic integer cubics x^3 + a x^2 + b x + c and their exact invariants.

These are the characteristic polynomials of the units being counted; every
operation in this module is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotUnit
from .primes import is_square


@dataclass(frozen=True, order=True)
class CubicPoly:
    """p(x) = x^3 + a x^2 + b x + c with integer coefficients."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, int):
                raise TypeError(f"coefficient {name} must be int, got {type(v)}")

    def __call__(self, x):
        # Horner; exact for int/Fraction arguments
        return ((x + self.a) * x + self.b) * x + self.c

    def eval_scaled(self, n: int, k: int) -> int:
        """8^k * p(n / 2^k) as an exact integer (sign evaluations at dyadics)."""
        t = 1 << k
        return ((n + self.a * t) * n + self.b * t * t) * n + self.c * t * t * t

    def derivative_at(self, x):
        return (3 * x + 2 * self.a) * x + self.b

    def coeffs(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self):
        def term(c, s):
            if c == 0:
                return ""
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            coef = "" if (mag == 1 and s) else str(mag)
            return f" {sign} {coef}{s}"
        return ("x^3" + term(self.a, "x^2") + term(self.b, "x")
                + term(self.c, "")).strip()


def discriminant(p: CubicPoly) -> int:
    """18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2, exactly."""
    a, b, c = p.a, p.b, p.c
    return 18 * a * b * c - 4 * a ** 3 * c + a * a * b * b - 4 * b ** 3 - 27 * c * c


def has_rational_root(p: CubicPoly) -> bool:
    """Rational-root test. For |c| = 1 the only candidates are +-1."""
    if abs(p.c) == 1:
        return p(1) == 0 or p(-1) == 0
    # general monic case: rational roots are integer divisors of c
    c = abs(p.c)
    if c == 0:
        return True
    d = 1
    while d * d <= c:
        if c % d == 0:
            for r in (d, -d, c // d, -(c // d)):
                if p(r) == 0:
                    return True
        d += 1
    return False


def is_admissible_unit_poly(p: CubicPoly) -> bool:
    """Characteristic polynomial of a totally real split-regular unit:
    |c| = 1, irreducible over Q, and positive discriminant."""
    if abs(p.c) != 1:
        return False
    if p(1) == 0 or p(-1) == 0:
        return False
    return discriminant(p) > 0


def eta_trace_exact(p: CubicPoly) -> int:
    """Trace of the twisting character on any matrix with char poly p.

    With roots r_i, prod(r_i^2 - 1) = p(1) * p(-1): from prod(1 - r_i) = p(1)
    and prod(-1 - r_i) = p(-1), the product of (r_i - 1)(r_i + 1) over i
    picks up (-1)^3 twice. Exact by construction.
    """
    return p(1) * p(-1)


def reciprocal_poly(p: CubicPoly) -> CubicPoly:
    """Characteristic polynomial of the inverse unit: x^3 p(1/x) / c."""
    if abs(p.c) != 1:
        raise NotUnit(f"constant coefficient {p.c} is not +-1")
    c = p.c
    return CubicPoly(p.b * c, p.a * c, c)


def mirror_poly(p: CubicPoly) -> CubicPoly:
    """Characteristic polynomial of -lambda: roots negated, (a,b,c) -> (-a,b,-c)."""
    return CubicPoly(-p.a, p.b, -p.c)


def canonical_sign_rep(p: CubicPoly) -> CubicPoly:
    """Pick one of {p, mirror(p)} canonically: smaller (a, c) lexicographically.

    lambda and -lambda share all chamber data, so enumeration keeps only the
    canonical one. Idempotent, and stable under mirroring by construction.
    """
    m = mirror_poly(p)
    return p if (p.a, p.c) <= (m.a, m.c) else m


def is_canonical(p: CubicPoly) -> bool:
    m = mirror_poly(p)
    return (p.a, p.c) <= (m.a, m.c)


def galois_multiplicity(p: CubicPoly) -> int:
    """3 when the splitting field is cyclic (square discriminant, all roots
    live in the field), else 1."""
    return 3 if is_square(discriminant(p)) else 1


def poly_gcd_degree(p: CubicPoly, q: CubicPoly) -> int:
    """Degree of gcd(p, q) over Q for two monic cubics (0 when coprime)."""
    # remainder chain over Fractions; inputs are tiny so no PRS tricks needed
    f = [Fraction(1), Fraction(p.a), Fraction(p.b), Fraction(p.c)]
    g = [Fraction(1), Fraction(q.a), Fraction(q.b), Fraction(q.c)]

    def poly_mod(u, v):
        u = u[:]
        while len(u) >= len(v) and any(u):
            if u[0] == 0:
                u.pop(0)
                continue
            factor = u[0] / v[0]
            for i in range(len(v)):
                u[i] -= factor * v[i]
            u.pop(0)
        while u and u[0] == 0:
            u.pop(0)
        return u

    while g:
        f, g = g, poly_mod(f, g)
    return len(f) - 1
