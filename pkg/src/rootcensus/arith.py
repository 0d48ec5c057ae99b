"""Integer substrate: sieving, primality, factorization, modular arithmetic,
and the classical arithmetic functions phi, mu, lambda.

Everything here is deterministic: primality uses a fixed witness set valid for
the full 64-bit range, and the factorization fallback stage seeds its RNG from
the input value so results never depend on run order or thread schedule.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "Factorization",
    "sieve_primes",
    "is_prime",
    "factorize",
    "prime_factors",
    "jacobi",
    "mod_pow",
    "totient",
    "mobius",
    "carmichael",
    "sqrt_mod",
]

# Memory cap for plain (non-segmented) sieving; larger limits go segmented.
_SEGMENT_THRESHOLD = 10**8
_MAX_SIEVE_LIMIT = 10**9


class CapacityError(ValueError):
    """Raised when a request exceeds the configured memory bounds."""


@dataclass(frozen=True)
class Factorization:
    """A positive integer together with its sorted prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        prod = 1
        prev = 1
        for p, e in self.factors:
            if e < 1 or p <= prev:
                raise ValueError("factors must be (prime, exponent>=1), primes ascending")
            prev = p
            prod *= p**e
        if prod != self.value:
            raise ValueError("factors do not multiply back to value")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _simple_sieve(limit: int) -> list[int]:
    """Primes <= limit by a plain byte sieve."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def sieve_primes(limit: int) -> list[int]:
    """All primes in [2, limit], ascending.

    Uses a plain sieve up to 10**8 and a segmented sieve above, capped at
    10**9 (CapacityError beyond).
    """
    if limit < 2:
        return []
    if limit > _MAX_SIEVE_LIMIT:
        raise CapacityError(f"sieve limit {limit} exceeds cap {_MAX_SIEVE_LIMIT}")
    if limit <= _SEGMENT_THRESHOLD:
        return _simple_sieve(limit)
    root = math.isqrt(limit)
    base = _simple_sieve(root)
    primes = list(base)
    seg_size = 1 << 22
    low = root + 1
    while low <= limit:
        high = min(low + seg_size - 1, limit)
        flags = bytearray([1]) * (high - low + 1)
        for p in base:
            start = max(p * p, ((low + p - 1) // p) * p)
            if start > high:
                continue
            flags[start - low :: p] = bytearray(len(range(start, high + 1, p)))
        primes.extend(low + i for i, f in enumerate(flags) if f)
        low = high + 1
    return primes


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus (exp >= 0, modulus >= 1)."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exp, modulus)


# Witness set deterministic for all n < 3.3 * 10**24 (covers 64-bit inputs).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = _simple_sieve(1000)
_SMALL_PRIME_SET = frozenset(_SMALL_PRIMES)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (fixed witness set)."""
    if n < 2:
        return False
    if n < 1000:
        return n in _SMALL_PRIME_SET
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
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


_TRIAL_PRIMES = _simple_sieve(10**4)


def _brent_rho(n: int, rng: random.Random) -> int:
    """One attempt at a nontrivial factor of composite odd n (Brent's cycle)."""
    if n % 2 == 0:
        return 2
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g


def _factor_into(n: int, out: dict[int, int], seed_salt: int) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    # Perfect powers trip up rho less often when peeled first.
    for k in (2, 3, 5):
        root = round(n ** (1.0 / k))
        for cand in (root - 1, root, root + 1):
            if cand > 1 and cand**k == n:
                for _ in range(k):
                    _factor_into(cand, out, seed_salt)
                return
    rng = random.Random(n * 0x9E3779B97F4A7C15 + seed_salt)
    d = n
    while d == n:
        d = _brent_rho(n, rng)
    _factor_into(d, out, seed_salt + 1)
    _factor_into(n // d, out, seed_salt + 1)


def factorize(n: int) -> Factorization:
    """Full prime factorization, deterministic for a given input.

    Trial division by sieved primes first, then Brent-rho with an RNG seeded
    from the input (re-seeded with an incremented salt until a split occurs).
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    if n == 1:
        return Factorization(1, ())
    out: dict[int, int] = {}
    m = n
    for p in _TRIAL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    if m > 1:
        _factor_into(m, out, 0)
    return Factorization(n, tuple(sorted(out.items())))


@lru_cache(maxsize=65536)
def _factorize_cached(n: int) -> Factorization:
    return factorize(n)


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending (cached)."""
    return _factorize_cached(n).primes


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd positive n; Legendre symbol when n prime."""
    if n < 1 or n % 2 == 0:
        raise ValueError("jacobi requires odd positive n")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def totient(n: int) -> int:
    """Euler's phi(n)."""
    if n < 1:
        raise ValueError("n >= 1 required")
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    """Moebius mu(n)."""
    if n < 1:
        raise ValueError("n >= 1 required")
    f = _factorize_cached(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def carmichael(n: int) -> int:
    """Carmichael's lambda(n): the exponent of the group (Z/nZ)*."""
    if n < 1:
        raise ValueError("n >= 1 required")
    result = 1
    for p, e in _factorize_cached(n).factors:
        if p == 2:
            lam = 1 if e == 1 else (2 if e == 2 else 2 ** (e - 2))
        else:
            lam = p ** (e - 1) * (p - 1)
        result = math.lcm(result, lam)
    return result


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a modulo an odd prime p, or None if a is a nonresidue.

    Tonelli-Shanks; returns the root in [0, p).
    """
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if jacobi(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Write p-1 = q * 2^s with q odd.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
