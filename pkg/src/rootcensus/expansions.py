"""Repeating base-l expansions, Wieferich primes, imaginary-quadratic class
numbers, the digit/class-number and partial-quotient/class-number identities,
and continued fractions of quadratic irrationals.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from .arith import carmichael, jacobi, mobius, prime_factors
from .orders import is_primitive_root, least_primitive_root, multiplicative_order

__all__ = [
    "ExpansionRecord",
    "expansion_period",
    "repeating_block",
    "is_wieferich",
    "class_number_imag",
    "sqrt_continued_fraction",
    "fundamental_unit",
    "girstmair_check",
    "HirzebruchResult",
    "hirzebruch_check",
    "real_class_number_is_one",
    "BlockSumResult",
    "block_digit_sum",
]


@dataclass(frozen=True)
class ExpansionRecord:
    """The repeating block of 1/n in base l."""

    n: int
    base: int
    period: int
    digits: tuple[int, ...]

    def block_integer(self) -> int:
        acc = 0
        for d in self.digits:
            acc = acc * self.base + d
        return acc


def expansion_period(n: int, base: int) -> int:
    """Least d >= 1 with base**d = 1 mod n (the period of 1/n in base `base`)."""
    if n < 2 or base < 2:
        raise ValueError("need n >= 2 and base >= 2")
    if math.gcd(n, base) != 1:
        raise ValueError("base and n must be coprime")
    d = carmichael(n)
    for q in prime_factors(d):
        while d % q == 0 and pow(base, d // q, n) == 1:
            d //= q
    return d


def repeating_block(n: int, base: int) -> ExpansionRecord:
    """Digits of the repeating block of 1/n by long division; the first digit
    is the first digit after the radix point."""
    d = expansion_period(n, base)
    digits = []
    r = 1
    for _ in range(d):
        r *= base
        digits.append(r // n)
        r %= n
    return ExpansionRecord(n, base, d, tuple(digits))


def is_wieferich(p: int, base: int) -> bool:
    """True iff base**(p-1) = 1 mod p**2 (the period of 1/p^2 fails to grow)."""
    if base % p == 0:
        raise ValueError("base divisible by p")
    return pow(base, p - 1, p * p) == 1


def class_number_imag(p: int) -> int:
    """Class number h(-p) for a prime p = 3 mod 4, by counting reduced binary
    quadratic forms (a, b, c) of discriminant -p."""
    if p % 4 != 3 or p < 7:
        raise ValueError("p must be a prime = 3 mod 4, p >= 7")
    count = 0
    a = 1
    while 3 * a * a <= p:  # reduction forces 3a^2 <= 4ac - b^2 = p
        for b in range(-a + 1, a + 1):
            if (b * b + p) % (4 * a) != 0:
                continue
            c = (b * b + p) // (4 * a)
            if c < a:
                continue
            if b < 0 and (abs(b) == a or a == c):
                continue
            count += 1
        a += 1
    return count


def sqrt_continued_fraction(N: int) -> tuple[int, list[int]]:
    """Canonical continued fraction of sqrt(N): (a0, periodic quotients)."""
    a0 = math.isqrt(N)
    if a0 * a0 == N:
        raise ValueError("N must not be a perfect square")
    quotients = []
    m, d, a = 0, 1, a0
    while True:
        m = d * a - m
        d = (N - m * m) // d
        a = (a0 + m) // d
        quotients.append(a)
        if a == 2 * a0:
            return a0, quotients


def fundamental_unit(d: int) -> tuple[int, int, int]:
    """Smallest (x, y) with x^2 - d*y^2 = +-1, from the convergents of
    sqrt(d); returns (x, y, norm)."""
    if d <= 1 or math.isqrt(d) ** 2 == d:
        raise ValueError("d must be a nonsquare integer > 1")
    a0, period = sqrt_continued_fraction(d)
    h0, h1 = 1, a0
    k0, k1 = 0, 1
    quots = list(period)
    while True:
        for a in quots:
            norm = h1 * h1 - d * k1 * k1
            if norm in (1, -1):
                return h1, k1, norm
            h0, h1 = h1, a * h1 + h0
            k0, k1 = k1, a * k1 + k0


def girstmair_check(p: int, base: int) -> tuple[int, bool]:
    """Alternating digit sum of 1/p in a generator base.

    Returns (alt_sum, holds) where holds means
    alt_sum == (base+1) * class_number_imag(p); valid for p = 3 mod 4 with
    `base` a primitive root mod p.
    """
    if p % 4 != 3 or p < 7:
        raise ValueError("p must be a prime = 3 mod 4, p >= 7")
    if not is_primitive_root(base, p):
        raise ValueError(f"{base} is not a generator mod {p}")
    digits = repeating_block(p, base).digits  # length p-1
    alt = sum(d if (i % 2) else -d for i, d in enumerate(digits, start=1))
    # index n runs 1..p-1 with sign (-1)^n: n odd negative
    alt = -alt
    return alt, alt == (base + 1) * class_number_imag(p)


def _real_quadratic_class_number(p: int) -> float:
    """Analytic class number of the real field of radicand p (p = 3 mod 4,
    discriminant 4p), via the finite character sum

        h = - sum_{a} chi(a) * ln sin(pi a / D) / (2 ln eps),

    chi the quadratic character mod D = 4p, eps the fundamental unit."""
    D = 4 * p
    x, y, norm = fundamental_unit(p)
    eps = x + y * math.sqrt(p)
    if norm == -1:
        eps = eps * eps  # unit of norm +1 generates the relevant subgroup
    total = 0.0
    for a in range(1, D, 2):
        if math.gcd(a, D) != 1:
            continue
        total -= jacobi(D, a) * math.log(math.sin(math.pi * a / D))
    return total / (2 * math.log(eps))


def real_class_number_is_one(p: int, tol: float = 0.01) -> bool:
    """Gate: analytic class number of the real field of radicand p rounds
    to 1 within tol."""
    return abs(_real_quadratic_class_number(p) - 1.0) <= tol


class HirzebruchResult(NamedTuple):
    alt_sum: int
    holds: bool
    applicable: bool


def hirzebruch_check(p: int) -> HirzebruchResult:
    """Alternating sum of the periodic partial quotients of sqrt(p).

    holds means |alt_sum| == 3 * class_number_imag(p); only applicable when
    the real field of radicand p has class number 1 (gate computed
    analytically).  The period is even for p = 3 mod 4; an odd period raises.
    """
    if p % 4 != 3 or p < 7:
        raise ValueError("p must be a prime = 3 mod 4, p >= 7")
    _, quots = sqrt_continued_fraction(p)
    if len(quots) % 2 != 0:
        raise ArithmeticError(f"odd continued-fraction period for p={p}")
    alt = sum(q if (i % 2) else -q for i, q in enumerate(quots, start=1))
    # sign (-1)^(n+1): n odd positive
    applicable = real_class_number_is_one(p)
    holds = applicable and abs(alt) == 3 * class_number_imag(p)
    return HirzebruchResult(alt, holds, applicable)


class BlockSumResult(NamedTuple):
    digit_sum: int
    bernoulli_term: float
    residual: float


def block_digit_sum(p: int, base: int, r: int) -> BlockSumResult:
    """Sum of the first (p-1)/r digits of 1/p in base `base`, where the base
    has order (p-1)/r mod p, together with the odd-character Bernoulli sum B
    making the identity

        digit_sum = (base-1)/2 * (p-1)/r + (base-1)/r * B

    hold; residual is the numerical defect (must be < 1e-6)."""
    if (p - 1) % r != 0:
        raise ValueError("r must divide p-1")
    if multiplicative_order(base, p) != (p - 1) // r:
        raise ValueError("base must have order (p-1)/r mod p")
    length = (p - 1) // r
    digits = repeating_block(p, base).digits[:length]
    total = sum(digits)

    # B = sum of first Bernoulli numbers B_{1,chi} over the odd characters
    # trivial on <base>, i.e. the odd characters whose order divides r.
    g = least_primitive_root(p)
    n1 = p - 1
    log = [0] * p
    acc = 1
    for k in range(n1):
        log[acc] = k
        acc = acc * g % p
    step = n1 // r
    B = 0j
    for t in range(1, r + 1):
        j = step * t
        if j % 2 == 0 or j >= n1:
            continue  # even (or trivial) character
        s = 0j
        for a in range(1, p):
            s += a * cmath.exp(-2j * cmath.pi * j * log[a] / n1)
        B += s / p
    if abs(B.imag) > 1e-6:
        raise ArithmeticError("nonreal character sum")
    predicted = (base - 1) / 2 * length + (base - 1) / r * B.real
    return BlockSumResult(total, B.real, abs(total - predicted))
