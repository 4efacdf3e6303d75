"""Certified real-root isolation for admissible cubics.

Strategy: exact Sturm-chain sign counting over dyadic rationals to isolate
the three real roots, then dyadic bisection to the requested width. Every
sign evaluation is an exact integer computation, so the enclosures are
certificates, not estimates. Roots of an admissible polynomial are
irrational, hence never hit a dyadic endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotSplitRegular
from .intervals import FracInterval
from .polynomial import CubicPoly, discriminant, is_admissible_unit_poly, mirror_poly, poly_gcd_degree

MAX_PRECISION_BITS = 4096


def _sturm_chain(p: CubicPoly) -> list[list[int]]:
    """Integer Sturm chain of p (each entry a dense coefficient list,
    leading coefficient first). Denominators are cleared by positive
    factors only, so the sign sequence is unchanged."""
    f0 = [Fraction(1), Fraction(p.a), Fraction(p.b), Fraction(p.c)]
    f1 = [Fraction(3), Fraction(2 * p.a), Fraction(p.b)]

    def rem(u, v):
        u = u[:]
        while len(u) >= len(v):
            if u[0] == 0:
                u.pop(0)
                continue
            q = u[0] / v[0]
            for i in range(1, len(v)):
                u[i] -= q * v[i]
            u.pop(0)
        while u and u[0] == 0:
            u.pop(0)
        return u

    chain_q = [f0, f1]
    while True:
        r = rem(chain_q[-2], chain_q[-1])
        if not r:
            break
        chain_q.append([-x for x in r])

    chain = []
    for f in chain_q:
        den = 1
        for x in f:
            den = den * x.denominator // _gcd(den, x.denominator)
        chain.append([int(x * den) for x in f])
    return chain


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _eval_scaled_sign(coeffs: list[int], n: int, k: int) -> int:
    """Sign of f(n / 2^k) via the integer value f(n/2^k) * 2^(k deg f)."""
    acc = coeffs[0]
    scale = 1
    for c in coeffs[1:]:
        scale <<= k
        acc = acc * n + c * scale
    return (acc > 0) - (acc < 0)


def _variations(chain, n: int, k: int) -> int:
    signs = [s for s in (_eval_scaled_sign(f, n, k) for f in chain) if s != 0]
    return sum(1 for i in range(len(signs) - 1) if signs[i] * signs[i + 1] < 0)


@dataclass(frozen=True)
class _RootState:
    """Bracketing state: root in open interval (n/2^k, (n+1)/2^k)."""
    n: int
    k: int
    sign_lo: int  # sign of p at the left endpoint

    def interval(self) -> FracInterval:
        return FracInterval(Fraction(self.n, 1 << self.k),
                            Fraction(self.n + 1, 1 << self.k))


def _bisect_to(p: CubicPoly, st: _RootState, k_target: int) -> _RootState:
    n, k, s_lo = st.n, st.k, st.sign_lo
    while k < k_target:
        m = 2 * n + 1
        s_mid = p.eval_scaled(m, k + 1)
        s_mid = (s_mid > 0) - (s_mid < 0)
        if s_mid == 0:  # dyadic root: impossible for irreducible p
            raise NotSplitRegular(f"dyadic root of {p} at {m}/2^{k + 1}")
        if s_mid == s_lo:
            n = m
        else:
            n = 2 * n
        k += 1
    return _RootState(n, k, s_lo)


def _isolate(p: CubicPoly) -> list[_RootState]:
    """Three disjoint dyadic brackets, one real root each, via Sturm counts."""
    chain = _sturm_chain(p)
    bound = max(abs(p.a), abs(p.b), abs(p.c)) + 2
    kb = 0
    while (1 << kb) < bound:
        kb += 1
    # work at scale k=0 with integer endpoints in [-2^kb, 2^kb]
    lo, hi = -(1 << kb), 1 << kb

    def count(u, v):  # roots in (u, v], integer endpoints at scale 0
        return _variations(chain, u, 0) - _variations(chain, v, 0)

    total = count(lo, hi)
    if total != 3:
        raise NotSplitRegular(f"{p} does not have three real roots in bound")

    found: list[_RootState] = []
    stack = [(lo, 0, hi, 0, total)]
    while stack:
        u, ku, v, kv, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            # normalize to common scale and bracket by p-sign
            k = max(ku, kv)
            nu, nv = u << (k - ku), v << (k - kv)
            s_lo = p.eval_scaled(nu, k)
            s_lo = (s_lo > 0) - (s_lo < 0)
            if s_lo == 0:
                raise NotSplitRegular(f"dyadic root of {p}")
            # shrink to a width-1 bracket at scale k by plain bisection
            while nv - nu > 1:
                mid = (nu + nv) // 2
                s_mid = p.eval_scaled(mid, k)
                s_mid = (s_mid > 0) - (s_mid < 0)
                if s_mid == 0:
                    raise NotSplitRegular(f"dyadic root of {p}")
                if s_mid == s_lo:
                    nu = mid
                else:
                    nv = mid
            found.append(_RootState(nu, k, s_lo))
            continue
        k = max(ku, kv)
        nu, nv = u << (k - ku), v << (k - kv)
        if nv - nu == 1:
            nu, nv, k = 2 * nu, 2 * nv, k + 1
        mid = (nu + nv) // 2
        c_left = _variations(chain, nu, k) - _variations(chain, mid, k)
        stack.append((nu, k, mid, k, c_left))
        stack.append((mid, k, nv, k, cnt - c_left))
    if len(found) != 3:
        raise NotSplitRegular(f"isolation of {p} found {len(found)} roots")
    return found


@dataclass(frozen=True)
class EmbeddingTriple:
    """Certified enclosures of the three real roots, ordered by decreasing
    absolute value, with signs and the working precision in bits."""

    poly: CubicPoly
    states: tuple[_RootState, _RootState, _RootState]
    precision: int

    @property
    def rho1(self) -> FracInterval:
        return self.states[0].interval()

    @property
    def rho2(self) -> FracInterval:
        return self.states[1].interval()

    @property
    def rho3(self) -> FracInterval:
        return self.states[2].interval()

    def intervals(self) -> tuple[FracInterval, FracInterval, FracInterval]:
        return (self.rho1, self.rho2, self.rho3)

    @property
    def signs(self) -> tuple[int, int, int]:
        out = []
        for st in self.states:
            ivl = st.interval()
            s = 1 if ivl.lo > 0 else (-1 if ivl.hi < 0 else 0)
            out.append(s)
        return tuple(out)

    def moduli(self) -> tuple[FracInterval, FracInterval, FracInterval]:
        return tuple(st.interval().abs() for st in self.states)

    def refined(self, precision: int) -> "EmbeddingTriple":
        """A new triple with enclosure widths < 2^-precision (monotone)."""
        if precision <= self.precision:
            return self
        states = tuple(_bisect_to(self.poly, st, precision) for st in self.states)
        return EmbeddingTriple(self.poly, states, precision)

    def floats(self) -> tuple[float, float, float]:
        return tuple(float(st.interval().mid) for st in self.states)


def split_regular_obstruction(p: CubicPoly) -> bool:
    """True when p(x) and -p(-x) share a root, i.e. rho_i = -rho_j for some
    i != j (equal absolute values: not conjugate into the open chamber)."""
    return poly_gcd_degree(p, mirror_poly(p)) > 0


def isolate_real_roots(p: CubicPoly, precision: int = 64) -> EmbeddingTriple:
    """Certified root triple of an admissible unit polynomial.

    Raises NotSplitRegular when two roots share an absolute value (for
    irreducible p with |c| = 1 this cannot happen, but direct callers may
    pass anything with three real roots).
    """
    if discriminant(p) <= 0:
        raise NotSplitRegular(f"{p} is not totally real (disc <= 0)")
    if split_regular_obstruction(p):
        raise NotSplitRegular(f"{p} has roots of equal absolute value")

    states = _isolate(p)
    precision = max(precision, 8)
    states = [_bisect_to(p, st, precision) for st in states]

    # sort by decreasing |root|, escalating precision until certified
    while True:
        moduli = [st.interval().abs() for st in states]
        # also need every enclosure to decide its sign (exclude 0)
        sign_ok = all(st.interval().lo > 0 or st.interval().hi < 0 for st in states)
        order_ok = True
        idx = sorted(range(3), key=lambda i: moduli[i].mid, reverse=True)
        for t in range(2):
            a, b = moduli[idx[t]], moduli[idx[t + 1]]
            if not a.lo > b.hi:
                order_ok = False
                break
        if sign_ok and order_ok:
            states = [states[i] for i in idx]
            break
        if precision >= MAX_PRECISION_BITS:
            raise NotSplitRegular(
                f"absolute values of roots of {p} inseparable at {precision} bits")
        precision *= 2
        states = [_bisect_to(p, st, precision) for st in states]

    return EmbeddingTriple(p, tuple(states), precision)


def certify_admissible(p: CubicPoly) -> bool:
    """Convenience used by enumeration: admissible and split regular."""
    return is_admissible_unit_poly(p) and not split_regular_obstruction(p)
