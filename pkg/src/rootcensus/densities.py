"""High-precision evaluation of prime-density constants as truncated Euler
products with explicit tail bounds.

All products are evaluated single-threaded, in ascending prime order, with
gmpy2 mpfr arithmetic at >= 120-bit working precision, so results are
bit-reproducible.  Tail bounds come from the integral estimate

    sum_{p > P} C / p^s  <=  C * P^(1-s) / ((s-1) * ln P),

where s is the decay exponent of the local factor and C a numerator bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import gmpy2
from gmpy2 import mpfr

from .arith import mobius, prime_factors, sieve_primes, totient
from .census import PolySpec, fixed_divisor, root_count

__all__ = [
    "ProductSpec",
    "DensityResult",
    "euler_product",
    "named_constant",
    "NAMED_CONSTANTS",
    "corrected_density",
    "progression_density",
    "singular_series",
    "koblitz_delta1",
    "cyclic_corrected",
]

_PRECISION = 120
_DEFAULT_TRUNCATION = 10**7

_prime_cache: dict[int, list[int]] = {}


def _primes(limit: int) -> list[int]:
    best = max((k for k in _prime_cache if k >= limit), default=None)
    if best is not None:
        ps = _prime_cache[best]
        if best == limit:
            return ps
        import bisect

        return ps[: bisect.bisect_right(ps, limit)]
    ps = sieve_primes(limit)
    _prime_cache[limit] = ps
    return ps


@dataclass(frozen=True)
class ProductSpec:
    """Defines an Euler product by its local factor at each prime."""

    local_factor: Callable[[int], "mpfr"]
    prime_floor: int = 2
    decay_exponent: int = 2
    numerator_bound: float = 1.0

    def __post_init__(self) -> None:
        if self.decay_exponent < 2:
            raise ValueError("decay exponent must be >= 2 (absolute convergence)")


@dataclass(frozen=True)
class DensityResult:
    value: "mpfr"
    truncation_prime: int
    tail_bound: float

    def __float__(self) -> float:
        return float(self.value)


def _tail_bound(C: float, s: int, P: int) -> float:
    return C * P ** (1 - s) / ((s - 1) * math.log(P))


def euler_product(spec: ProductSpec, P: int) -> DensityResult:
    """Product of spec.local_factor over primes in [prime_floor, P]."""
    if P < 100:
        raise ValueError("truncation bound must be >= 100")
    with gmpy2.context(precision=_PRECISION):
        acc = mpfr(1)
        for p in _primes(P):
            if p < spec.prime_floor:
                continue
            f = mpfr(spec.local_factor(p))
            if f <= 0:
                raise ValueError(f"nonpositive local factor at p={p}")
            acc *= f
        tail = _tail_bound(spec.numerator_bound, spec.decay_exponent, P)
        return DensityResult(acc, P, tail)


def _one() -> "mpfr":
    return mpfr(1)


def _f_fixed_root(p: int) -> "mpfr":
    return 1 - mpfr(1) / (mpfr(p) * (p - 1))


def _f_cyclic(p: int) -> "mpfr":
    # local factor 1 - 1/#GL2(F_p)
    p2 = mpfr(p) * p
    return 1 - 1 / ((p2 - 1) * (p2 - p))


def _f_primitive_point(p: int) -> "mpfr":
    p_ = mpfr(p)
    return 1 - (p_**3 - p_ - 1) / (p_**2 * (p_ - 1) ** 2 * (p_ + 1))


def _f_koblitz(p: int) -> "mpfr":
    p_ = mpfr(p)
    return 1 - (p_**2 - p_ - 1) / ((p_ - 1) ** 3 * (p_ + 1))


def _f_relative_order(p: int) -> "mpfr":
    p_ = mpfr(p)
    return 1 - p_ / (p_**3 - 1)


def _f_simultaneous(p: int) -> "mpfr":
    p_ = mpfr(p)
    return 1 - (2 * p_ - 1) / (p_**2 * (p_ - 1))


NAMED_CONSTANTS: dict[str, ProductSpec] = {
    # Density of primes admitting a given fixed generator.
    "artin": ProductSpec(_f_fixed_root, 2, 2, 1.0),
    # Average density of primes with cyclic elliptic group.
    "cyclic_c0": ProductSpec(_f_cyclic, 2, 4, 1.0),
    # Average density of primes with a fixed generating point.
    "primitive_point": ProductSpec(_f_primitive_point, 2, 2, 1.0),
    # Average density of primes with prime elliptic group order.
    "koblitz_p0": ProductSpec(_f_koblitz, 2, 2, 1.0),
    # Mean relative order of a random residue.
    "relative_order_c": ProductSpec(_f_relative_order, 2, 2, 1.0),
    # Density of primes with two simultaneous fixed generators.
    "simultaneous_b": ProductSpec(_f_simultaneous, 2, 2, 2.0),
}


def named_constant(name: str, P: int = _DEFAULT_TRUNCATION) -> DensityResult:
    """Evaluate a catalogued constant at truncation P (default 10^7)."""
    key = name.lower()
    if key == "squarefree_totient_a0sq":
        base = named_constant("artin", P)
        with gmpy2.context(precision=_PRECISION):
            return DensityResult(base.value**2, P, 2 * base.tail_bound)
    if key not in NAMED_CONSTANTS:
        raise KeyError(f"unknown constant {name!r}")
    return euler_product(NAMED_CONSTANTS[key], P)


def _squarefree_decompose(u: int) -> tuple[int, int, int]:
    """u = (s*v^2)^k with s squarefree, k maximal. Returns (s, v, k)."""
    k = 1
    w = u
    for kk in range(u.bit_length(), 1, -1):
        r = round(u ** (1.0 / kk))
        for cand in (r - 1, r, r + 1):
            if cand > 1 and cand**kk == u:
                k, w = kk, cand
                break
        if k > 1:
            break
    s = 1
    v = 1
    for p in prime_factors(w):
        e = 0
        ww = w
        while ww % p == 0:
            ww //= p
            e += 1
        if e % 2:
            s *= p
        v *= p ** (e // 2)
    return s, v, k


def corrected_density(u: int, P: int = _DEFAULT_TRUNCATION) -> DensityResult:
    """Density of primes admitting the fixed generator u, with the rational
    correction factor for entangled splitting fields.

    Writes u = (s*v^2)^k with s squarefree and k maximal; the Euler product
    carries a (1 - 1/(p-1)) local factor at primes dividing k, and the
    correction multiplier 1 - mu(s) * prod_{p|s} 1/(p^2-p-1) applies when
    s = 1 mod 4.
    """
    if u < 2:
        raise ValueError("u must be an integer >= 2")
    s, _v, k = _squarefree_decompose(u)
    if s == 1 and k % 2 == 0:
        raise ValueError("u must not be a perfect square")
    k_primes = set(prime_factors(k)) if k > 1 else set()

    def factor(p: int) -> "mpfr":
        if p in k_primes:
            return 1 - mpfr(1) / (p - 1)
        return _f_fixed_root(p)

    base = euler_product(ProductSpec(factor, 2, 2, 1.0), P)
    with gmpy2.context(precision=_PRECISION):
        if s % 4 == 1 and s > 1:
            corr = mpfr(1)
            for p in prime_factors(s):
                corr /= p * p - p - 1
            mult = 1 - mobius(s) * corr
        else:
            mult = mpfr(1)
        return DensityResult(base.value * mult, P, 2 * base.tail_bound)


def progression_density(
    u: int, q: int, a: int, k: int = 1, P: int = _DEFAULT_TRUNCATION
) -> DensityResult:
    """Density of primes p = a mod q with fixed generator u = w^k.

        A(q,a,k) = prod_{p | gcd(a-1,q)} (1 - 1/p)
                 * prod_{p !| q, p | k} (1 - 1/(p-1))
                 * prod_{p !| q, p !| k} (1 - 1/(p(p-1)))

    returned as A/phi(q); the residual rational correction factor is taken
    as 1 (reported value is the uncorrected leading density).
    """
    if q < 1 or math.gcd(a, q) != 1:
        raise ValueError("gcd(a, q) must be 1")
    g = math.gcd(a - 1, q) if q > 1 else 1
    g_primes = set(prime_factors(g)) if g > 1 else set()
    q_primes = set(prime_factors(q)) if q > 1 else set()
    k_primes = set(prime_factors(k)) if k > 1 else set()

    def factor(p: int) -> "mpfr":
        if p in q_primes:
            # only the gcd(a-1, q) primes contribute a local factor
            return 1 - mpfr(1) / p if p in g_primes else mpfr(1)
        if p in k_primes:
            return 1 - mpfr(1) / (p - 1)
        return _f_fixed_root(p)

    base = euler_product(ProductSpec(factor, 2, 2, 1.0), P)
    with gmpy2.context(precision=_PRECISION):
        return DensityResult(base.value / totient(q), P, base.tail_bound)


def singular_series(f: PolySpec, P: int = 10**5) -> DensityResult:
    """Prime-density constant of an integer polynomial:

        s_f = (1/deg f) * prod_p (1 - nu_f(p)/p) * (1 - 1/p)^(-1)

    with nu_f(p) the number of roots of f mod p.  The product converges only
    conditionally, so the reported tail bound is the generous empirical
    envelope 2*deg/sqrt(P).
    """
    if fixed_divisor(f) > 1:
        return DensityResult(mpfr(0), P, 0.0)
    m = f.degree
    with gmpy2.context(precision=_PRECISION):
        acc = mpfr(1) / m
        for p in _primes(P):
            nu = root_count(f, p)
            acc *= (1 - mpfr(nu) / p) / (1 - mpfr(1) / p)
        return DensityResult(acc, P, 2 * m / math.sqrt(P))


def koblitz_delta1(D: int, P: int = _DEFAULT_TRUNCATION) -> DensityResult:
    """Density of primes with prime elliptic group order for a CM curve of
    fundamental discriminant D: the base constant times
    1 + prod_{q | D} 1/(q^3 - 2q^2 - q + 3) when D = 1 mod 4."""
    p0 = named_constant("koblitz_p0", P)
    with gmpy2.context(precision=_PRECISION):
        if D % 4 == 1:
            corr = mpfr(1)
            for q in prime_factors(abs(D)):
                corr /= q**3 - 2 * q**2 - q + 3
            value = (1 + corr) * p0.value
        else:
            value = p0.value
        return DensityResult(value, P, 2 * p0.tail_bound)


def cyclic_corrected(D: int, P: int = _DEFAULT_TRUNCATION) -> DensityResult:
    """Cyclic-group density with the odd-discriminant correction
    1 + prod_{p | 2D} (-1) / #GL2(F_p)."""
    c0 = named_constant("cyclic_c0", P)
    with gmpy2.context(precision=_PRECISION):
        if D % 2 == 0:
            value = c0.value
        else:
            corr = mpfr(1)
            for p in prime_factors(abs(2 * D)):
                corr *= -1 / ((mpfr(p) ** 2 - 1) * (mpfr(p) ** 2 - p))
            value = (1 + corr) * c0.value
        return DensityResult(value, P, 2 * c0.tail_bound)
