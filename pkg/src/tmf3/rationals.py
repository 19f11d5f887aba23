"""Exact rational arithmetic helpers: p-adic valuations, Bernoulli numbers,
divisor power sums.

Rationals are plain ``fractions.Fraction`` values: always reduced, positive
denominator, structural equality.  ``val_p(0)`` returns the ``INF`` sentinel
so valuation arithmetic stays total.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

INF = float("inf")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def val_p_int(n: int, p: int):
    """Exponent of the prime p in the integer n; val_p_int(0) = +inf."""
    if n == 0:
        return INF
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def val_p(q, p: int):
    """p-adic valuation of a Fraction or int.  Total: val_p(0) = +inf."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    q = Fraction(q)
    if q == 0:
        return INF
    return val_p_int(q.numerator, p) - val_p_int(q.denominator, p)


@lru_cache(maxsize=None)
def _bernoulli_all(m: int) -> tuple:
    # B_0 .. B_m via sum_{k<=m} C(m+1,k) B_k = 0 (convention B_1 = -1/2).
    bs = [Fraction(1)]
    for n in range(1, m + 1):
        acc = Fraction(0)
        for k in range(n):
            acc += math.comb(n + 1, k) * bs[k]
        bs.append(-acc / (n + 1))
    return tuple(bs)


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m for even m >= 2 (B_2 = 1/6, B_4 = -1/30)."""
    if m < 2 or m % 2 != 0:
        raise ValueError(f"bernoulli requires even m >= 2, got {m}")
    return _bernoulli_all(m)[m]


def sigma_pow(k: int, n: int) -> int:
    """Divisor power sum sigma_k(n) = sum of d^k over divisors d of n."""
    if n <= 0:
        raise ValueError(f"sigma_pow requires n >= 1, got {n}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** k
            e = n // d
            if e != d:
                total += e ** k
        d += 1
    return total
