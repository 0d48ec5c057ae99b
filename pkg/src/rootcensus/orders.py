"""Multiplicative orders, primitive-root and d-th-power-residue tests,
character-sum indicator identities, exponential-sum maxima, and relative-order
statistics over prime ranges.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .arith import (
    _factorize_cached,
    mobius,
    prime_factors,
    sieve_primes,
    totient,
)

__all__ = [
    "multiplicative_order",
    "is_primitive_root",
    "least_primitive_root",
    "is_primitive_dth_residue",
    "char_indicator_divisor",
    "char_indicator_divisorfree",
    "exp_sum_max",
    "relative_order_series",
]


def multiplicative_order(u: int, p: int) -> int:
    """Least k >= 1 with u**k == 1 mod p (p prime, u not divisible by p)."""
    u %= p
    if u == 0:
        raise ValueError("order undefined: u divisible by p")
    k = p - 1
    for q in prime_factors(p - 1) if p > 2 else ():
        while k % q == 0 and pow(u, k // q, p) == 1:
            k //= q
    return k


def is_primitive_root(u: int, p: int) -> bool:
    """Power-residue test: u generates (Z/pZ)* iff u**((p-1)/q) != 1 for all
    primes q dividing p-1."""
    u %= p
    if u == 0:
        raise ValueError("u divisible by p")
    if p == 2:
        return True
    return all(pow(u, (p - 1) // q, p) != 1 for q in prime_factors(p - 1))


@lru_cache(maxsize=65536)
def least_primitive_root(p: int) -> int:
    """Smallest positive primitive root modulo p (1 for p=2)."""
    if p == 2:
        return 1
    qs = prime_factors(p - 1)
    u = 2
    while True:
        if all(pow(u, (p - 1) // q, p) != 1 for q in qs):
            return u
        u += 1


def is_primitive_dth_residue(u: int, p: int, d: int) -> bool:
    """True iff ord_p(u) == (p-1)/d; requires d | p-1."""
    if d < 1 or (p - 1) % d != 0:
        raise ValueError("d must divide p-1")
    return multiplicative_order(u, p) == (p - 1) // d


def _index_table(p: int) -> tuple[int, list[int]]:
    """(g, table) with table[v] = discrete log of v to base g=least root."""
    g = least_primitive_root(p)
    table = [0] * p
    acc = 1
    for k in range(p - 1):
        table[acc] = k
        acc = acc * g % p
    return g, table


def char_indicator_divisor(u: int, p: int) -> float:
    """Primitive-root indicator via the divisor-sum character identity:

        Psi(u) = (phi(p-1)/(p-1)) * sum_{d | p-1} (mu(d)/phi(d))
                 * sum_{ord(chi)=d} chi(u)

    evaluated numerically; must land within 1e-6 of 0 or 1.
    """
    if p > 10**4:
        raise ValueError("p too large for quadratic-cost evaluation")
    u %= p
    if u == 0:
        raise ValueError("u divisible by p")
    if p == 2:
        return 1.0
    _, log = _index_table(p)
    ind = log[u]
    n = p - 1
    total = 0j
    for d in _divisors(n):
        mu = mobius(d)
        if mu == 0:
            continue
        # Characters of exact order d contribute a Ramanujan-type sum
        # sum over t coprime to d of e(t*ind/d).
        s = sum(
            cmath.exp(2j * cmath.pi * t * ind / d)
            for t in range(1, d + 1)
            if math.gcd(t, d) == 1
        )
        total += (mu / totient(d)) * s
    val = total * totient(n) / n
    if abs(val.imag) > 1e-6:
        raise ArithmeticError(f"nonreal indicator value {val}")
    re = val.real
    if min(abs(re), abs(re - 1)) > 1e-6:
        raise ArithmeticError(f"indicator value {re} not near 0/1")
    return re


def _divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in _factorize_cached(n).factors:
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def char_indicator_divisorfree(u: int, p: int) -> float:
    """Primitive-root indicator via the divisor-free additive-character form:

        Psi(u) = sum_{gcd(n, p-1)=1} (1/p) sum_{0<=k<p} e((tau^n - u) k / p)

    with tau the least primitive root; same 1e-6 rounding contract as the
    divisor-sum form.
    """
    if p > 2000:
        raise ValueError("p too large for cubic-cost evaluation")
    u %= p
    if u == 0:
        raise ValueError("u divisible by p")
    if p == 2:
        return 1.0
    tau = least_primitive_root(p)
    n1 = p - 1
    root = [cmath.exp(2j * cmath.pi * m / p) for m in range(p)]
    total = 0j
    power = 1  # tau^0
    for n in range(n1):
        if n and math.gcd(n, n1) == 1:
            diff = (power - u) % p
            total += sum(root[diff * k % p] for k in range(p)) / p
        power = power * tau % p
    if abs(total.imag) > 1e-6:
        raise ArithmeticError(f"nonreal indicator value {total}")
    re = total.real
    if min(abs(re), abs(re - 1)) > 1e-6:
        raise ArithmeticError(f"indicator value {re} not near 0/1")
    return re


def exp_sum_max(p: int) -> tuple[float, int]:
    """Max over a in [1,p-1] with gcd(a, p-1)=1 of
    |sum_{gcd(n,p-1)=1} e(a tau^n / p)|, tau = least primitive root.

    Returns (max_abs, attaining a).
    """
    if p > 5000:
        raise ValueError("p too large for quadratic-cost evaluation")
    n1 = p - 1
    tau = least_primitive_root(p)
    powers = []
    power = 1
    for n in range(n1):
        if n and math.gcd(n, n1) == 1:
            powers.append(power)
        power = power * tau % p
    if p == 2:
        powers = [1]
    root = [cmath.exp(2j * cmath.pi * m / p) for m in range(p)]
    best, best_a = -1.0, 1
    for a in range(1, p):
        if math.gcd(a, n1) != 1:
            continue
        mag = abs(sum(root[a * t % p] for t in powers))
        if mag > best:
            best, best_a = mag, a
    return best, best_a


def relative_order_series(u: int, x: int) -> list[tuple[int, Fraction]]:
    """[(p, ord_p(u)/(p-1))] over primes p <= x with p not dividing u."""
    if u == 0:
        raise ValueError("u must be nonzero")
    out = []
    for p in sieve_primes(x):
        if u % p == 0:
            continue
        out.append((p, Fraction(multiplicative_order(u, p), p - 1)))
    return out
