"""Prime-counting experiments: polynomial censuses with a fixed root,
progression-filtered censuses, squarefree-totient and simultaneous-root
censuses, primitive quadratic residues, and low-prime-density polynomial
construction.

Table conventions (reverse-engineered so the published tables reproduce and
verified against independent oracles in the test suite):

* Degree-2 families scan n in [2, 2*isqrt(x)]; higher degrees scan n >= 1
  with f(n) <= x.
* ``hits_mode="least"`` (default) counts primes whose *least* primitive root
  equals u. ``hits_mode="order"`` counts primes for which u is a primitive
  root. The two agree for u=2 (1 is never a least primitive root of an odd
  prime).
* ``c_estimate = hits * log(X**(1/m)) / X**(1/m)``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .arith import carmichael, is_prime, mobius, sieve_primes, totient
from .orders import is_primitive_root, least_primitive_root, multiplicative_order

__all__ = [
    "PolySpec",
    "CensusRecord",
    "fixed_divisor",
    "root_count",
    "poly_census",
    "census_fixed_root",
    "census_squarefree_totient",
    "census_simultaneous",
    "census_quadratic_residue",
    "low_density_poly",
]

_ROOT_SCAN_LIMIT = 10**6


@dataclass(frozen=True)
class PolySpec:
    """Integer-coefficient univariate polynomial, constant term first."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients or self.coefficients[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, n: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if terms else "")
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                body = xs if mag == 1 else f"{mag}{xs}"
            terms.append(sign + body)
        return "".join(terms) or "0"


@dataclass(frozen=True)
class CensusRecord:
    """One row of a census table."""

    x: int
    baseline: int
    hits: int

    @property
    def ratio(self) -> float:
        return self.hits / self.baseline if self.baseline else 0.0

    def c_estimate(self, degree: int = 1) -> float:
        root = self.x ** (1.0 / degree)
        return self.hits * math.log(root) / root

    def csv_row(self, degree: int = 1) -> str:
        return (
            f"{self.x},{self.baseline},{self.hits},"
            f"{self.ratio:.6f},{self.c_estimate(degree):.6f}"
        )


def fixed_divisor(f: PolySpec) -> int:
    """gcd of f over all integers (= gcd of f(0), ..., f(deg))."""
    if f.degree < 1:
        raise ValueError("degree >= 1 required")
    g = 0
    for n in range(f.degree + 1):
        g = math.gcd(g, f(n))
    return g


def _monomial_form(f: PolySpec) -> tuple[int, int] | None:
    """(m, c) if f(x) = x^m + c, else None."""
    coeffs = f.coefficients
    if coeffs[-1] != 1:
        return None
    if any(c != 0 for c in coeffs[1:-1]):
        return None
    return f.degree, coeffs[0]


def root_count(f: PolySpec, p: int) -> int:
    """Number of roots of f modulo p.

    Families of the shape x^m + c get a closed-form power-residue count;
    everything else is counted by direct scan (p <= 10^6).
    """
    mono = _monomial_form(f)
    if mono is not None:
        m, c = mono
        a = (-c) % p
        if a == 0:
            return 1
        g = math.gcd(m, p - 1) if p > 2 else 1
        return g if pow(a, (p - 1) // g if p > 2 else 1, p) == 1 else 0
    if p > _ROOT_SCAN_LIMIT:
        raise ValueError("direct root scan limited to p <= 10^6")
    return sum(1 for n in range(p) if f(n) % p == 0)


def _count_hits(p: int, u: int, mode: str) -> bool:
    if p == 2 or u % p == 0:
        return False
    if mode == "least":
        return least_primitive_root(p) == u
    if mode == "order":
        return is_primitive_root(u, p)
    raise ValueError(f"unknown hits_mode {mode!r}")


def _candidate_range(f: PolySpec, x: int) -> range:
    """Scan window for f(n) <= x censuses (degree-2 doubled-window rule)."""
    if f.degree == 2:
        return range(2, 2 * math.isqrt(x) + 1)
    hi = 0
    while f(hi + 1) <= x:
        hi += 1
    return range(1, hi + 1)


def _chunked(seq: list[int], k: int) -> list[list[int]]:
    step = (len(seq) + k - 1) // k or 1
    return [seq[i : i + step] for i in range(0, len(seq), step)]


def poly_census(
    f: PolySpec,
    u: int,
    x: int,
    hits_mode: str = "least",
    threads: int = 1,
) -> list[CensusRecord]:
    """Census of primes in the value set of f, at decade checkpoints <= x.

    baseline: primes f(n) in the family scan window; hits: those passing the
    fixed-root condition of ``hits_mode`` (see module docstring).
    """
    if fixed_divisor(f) > 1:
        raise ValueError("cannot represent infinitely many primes (fixed divisor > 1)")
    if u in (0, 1, -1):
        raise ValueError("u must differ from 0, 1, -1")
    checkpoints = [10**k for k in range(1, 19) if 10**k <= x]
    if not checkpoints:
        raise ValueError("x too small for a decade checkpoint")

    ns = list(_candidate_range(f, checkpoints[-1]))

    def work(chunk: list[int]) -> list[tuple[int, bool]]:
        out = []
        for n in chunk:
            p = f(n)
            if is_prime(p):
                out.append((n, _count_hits(p, u, hits_mode)))
        return out

    if threads > 1 and len(ns) > 256:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, _chunked(ns, threads * 4)))
        found = [item for part in parts for item in part]
    else:
        found = work(ns)

    records = []
    for X in checkpoints:
        window = _candidate_range(f, X)
        base = hit = 0
        for n, h in found:
            if n in window:
                base += 1
                hit += h
        records.append(CensusRecord(X, base, hit))
    return records


def census_fixed_root(u: int, x: int, q: int = 1, a: int = 0) -> CensusRecord:
    """Primes p <= x (optionally p = a mod q) for which u is a primitive root.

    baseline: qualifying primes with p not dividing u; hits: those where u
    generates. q=1, a=0 disables the progression filter.
    """
    if q > 1 and math.gcd(a, q) != 1:
        raise ValueError("gcd(a, q) must be 1")
    base = hits = 0
    for p in sieve_primes(x):
        if u % p == 0:
            continue
        if q > 1 and p % q != a % q:
            continue
        base += 1
        if is_primitive_root(u, p):
            hits += 1
    return CensusRecord(x, base, hits)


def census_squarefree_totient(u: int, x: int) -> CensusRecord:
    """Primes p <= x with squarefree p-1; hits additionally have u primitive."""
    if u in (0, 1, -1):
        raise ValueError("u must differ from 0, 1, -1")
    base = hits = 0
    for p in sieve_primes(x):
        if mobius(p - 1) == 0:
            continue
        base += 1
        if u % p != 0 and is_primitive_root(u, p):
            hits += 1
    return CensusRecord(x, base, hits)


def census_simultaneous(us: list[int], x: int) -> CensusRecord:
    """Primes p <= x for which every listed u is simultaneously primitive."""
    if not us:
        raise ValueError("need at least one residue")
    if len(us) > 8:
        raise ValueError("at most 8 residues supported")
    if any(u in (0, 1, -1) for u in us):
        raise ValueError("residues must differ from 0, 1, -1")
    base = hits = 0
    for p in sieve_primes(x):
        base += 1
        if all(u % p != 0 and is_primitive_root(u, p) for u in us):
            hits += 1
    return CensusRecord(x, base, hits)


def census_quadratic_residue(u: int, x: int) -> CensusRecord:
    """Odd primes p <= x with ord_p(u) = (p-1)/2, for u a square of a
    squarefree integer."""
    v = math.isqrt(u)
    if v * v != u or mobius(v) == 0:
        raise ValueError("u must be the square of a squarefree integer")
    base = hits = 0
    for p in sieve_primes(x):
        if p == 2 or u % p == 0:
            continue
        base += 1
        if multiplicative_order(u, p) == (p - 1) // 2:
            hits += 1
    return CensusRecord(x, base, hits)


def low_density_poly(z: float, variant: str = "lambda") -> tuple[PolySpec, float]:
    """Construct x^e + (n-1) with n the product of primes <= z and e either
    phi(n) or lambda(n).  For gcd(x, n) = 1 the value x^e + n - 1 is
    divisible by n (Euler/Carmichael), hence composite; a verification scan
    confirms this for coprime 2 <= x <= min(e^z, 10^4) and raises if it ever
    finds a prime value.  (The compositeness guarantee genuinely fails for
    arguments sharing a factor with n, e.g. x=6 for z=3, so those are not
    scanned.)
    """
    if z < 2 or z > 20:
        raise ValueError("z must lie in [2, 20]")
    n = 1
    for p in sieve_primes(int(z)):
        n *= p
    if variant == "phi":
        e = totient(n)
    elif variant == "lambda":
        e = carmichael(n)
    else:
        raise ValueError("variant must be 'phi' or 'lambda'")
    d = n - 1
    coeffs = [d] + [0] * (e - 1) + [1]
    f = PolySpec(tuple(coeffs))
    bound = math.exp(z)
    for xx in range(2, min(int(bound), 10**4) + 1):
        if math.gcd(xx, n) != 1:
            continue
        if is_prime(f(xx)):
            raise ArithmeticError(
                f"compositeness guarantee violated: f({xx}) is prime"
            )
    return f, bound
