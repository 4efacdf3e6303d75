"""Small prime utilities: sieve, deterministic Miller-Rabin, and the
trial-division factorization with square-part extraction used on
discriminants.

Everything here is exact integer arithmetic; nothing probabilistic is
left uncertified (the Miller-Rabin witness set below is proven
deterministic for all n < 3.3 * 10**24, far above desk scale).
"""

from __future__ import annotations

from .errors import IncompleteFactorization

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def sieve(limit: int) -> list[int]:
    """All primes <= limit."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= limit:
        if flags[p]:
            flags[p * p:: p] = bytearray(len(range(p * p, limit + 1, p)))
        p += 1
    return [i for i in range(limit + 1) if flags[i]]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor_trial(n: int, bound: int = 1_000_000) -> tuple[dict[int, int], int]:
    """Factor |n| by trial division up to `bound`.

    Returns (factors, cofactor) where cofactor is 1 or the unfactored part
    (which is then coprime to every prime <= bound).
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 5
    step = 2
    while p <= bound and p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1 and n <= bound * bound:
        # cofactor below bound^2 with no prime factor <= bound is prime
        factors[n] = factors.get(n, 0) + 1
        n = 1
    return factors, n


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = _isqrt(n)
    return r * r == n


def _isqrt(n: int) -> int:
    import math
    return math.isqrt(n)


def square_part_primes(n: int, bound: int = 1_000_000) -> list[int]:
    """Primes q with q**2 | n, for n != 0.

    Trial division finds the small ones; a leftover cofactor is handled when
    it is prime (multiplicity 1, no square) or a prime square. Anything
    else raises IncompleteFactorization so callers can flag the input
    instead of silently guessing.
    """
    factors, cofactor = factor_trial(n, bound)
    primes = [p for p, e in factors.items() if e >= 2]
    if cofactor > 1:
        if is_prime(cofactor):
            pass  # appears to the first power only: contributes no square
        elif is_square(cofactor) and is_prime(_isqrt(cofactor)):
            primes.append(_isqrt(cofactor))
        else:
            raise IncompleteFactorization(
                f"square part of {n} unresolved above trial bound {bound}")
    return sorted(primes)


def factorize(n: int, bound: int = 1_000_000) -> dict[int, int]:
    """Full factorization of |n|, raising IncompleteFactorization when the
    cofactor above the trial bound is neither prime nor a prime square."""
    factors, cofactor = factor_trial(n, bound)
    if cofactor > 1:
        if is_prime(cofactor):
            factors[cofactor] = factors.get(cofactor, 0) + 1
        elif is_square(cofactor) and is_prime(_isqrt(cofactor)):
            factors[_isqrt(cofactor)] = factors.get(_isqrt(cofactor), 0) + 2
        else:
            raise IncompleteFactorization(
                f"cofactor {cofactor} of {n} unresolved above bound {bound}")
    return factors
