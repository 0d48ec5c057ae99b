"""Shared oracles for the test suite.

Oracles are deliberately independent of the package internals: brute-force
enumeration, sympy, or exact rational arithmetic.
"""

import random

import pytest
import sympy


def brute_is_primitive_root(u, p):
    u %= p
    if u == 0:
        return False
    seen = u
    for k in range(1, p - 1):
        if seen == 1:
            return k == p - 1
        seen = seen * u % p
    return True


def brute_order(u, p):
    u %= p
    acc = u
    for k in range(1, p):
        if acc == 1:
            return k
        acc = acc * u % p
    raise AssertionError("not a unit")


def brute_curve_points(a, b, p):
    """All affine points of y^2 = x^3 + ax + b over F_p, plus None for the
    point at infinity."""
    squares = {}
    for y in range(p):
        squares.setdefault(y * y % p, []).append(y)
    pts = [None]
    for x in range(p):
        for y in squares.get((x * x * x + a * x + b) % p, []):
            pts.append((x, y))
    return pts


def brute_curve_order(a, b, p):
    return len(brute_curve_points(a, b, p))


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240817)


@pytest.fixture(scope="session")
def small_primes():
    return list(sympy.primerange(2, 1000))
