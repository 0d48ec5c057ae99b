import math
import random

import pytest
import sympy

from rootcensus.arith import (
    Factorization,
    carmichael,
    factorize,
    is_prime,
    jacobi,
    mobius,
    sieve_primes,
    sqrt_mod,
    totient,
)


class TestSievePrimes:
    def test_small(self):
        assert sieve_primes(20) == [2, 3, 5, 7, 11, 13, 17, 19]

    def test_pi_checkpoints(self):
        assert len(sieve_primes(10**4)) == 1229
        assert len(sieve_primes(10**6)) == 78498

    def test_matches_sympy(self):
        assert sieve_primes(5000) == list(sympy.primerange(2, 5001))

    def test_segmented_region_consistent(self):
        lo = 10**8
        seg = [p for p in sieve_primes(lo + 10**4) if p > lo]
        assert seg == list(sympy.primerange(lo + 1, lo + 10**4 + 1))

    def test_degenerate(self):
        assert sieve_primes(1) == []


class TestIsPrime:
    def test_small_exhaustive(self):
        for n in range(2, 10**4):
            assert is_prime(n) == sympy.isprime(n), n

    def test_carmichael_number(self):
        assert not is_prime(561)

    def test_two(self):
        assert is_prime(2)

    def test_random_64bit(self):
        r = random.Random(7)
        for _ in range(200):
            n = r.randrange(2, 2**63)
            assert is_prime(n) == sympy.isprime(n), n

    def test_large_semiprime(self):
        n = 4727839468229346563
        assert is_prime(n) == sympy.isprime(n)


class TestFactorize:
    def test_known(self):
        assert factorize(1092).factors == ((2, 2), (3, 1), (7, 1), (13, 1))

    def test_unit(self):
        assert factorize(1).factors == ()

    def test_multiply_back_random(self):
        r = random.Random(11)
        for _ in range(60):
            n = r.randrange(2, 10**12)
            f = factorize(n)
            assert math.prod(p**e for p, e in f.factors) == n
            assert dict(f.factors) == sympy.factorint(n)

    def test_large_totient_style_input(self):
        n = 24739954287740861 - 1
        f = factorize(n)
        assert math.prod(p**e for p, e in f.factors) == n
        assert all(is_prime(p) for p, _ in f.factors)

    def test_validation_rejects_bad_order(self):
        with pytest.raises(ValueError):
            Factorization(value=6, factors=((3, 1), (2, 1)))

    def test_validation_rejects_wrong_product(self):
        with pytest.raises(ValueError):
            Factorization(value=10, factors=((2, 1), (3, 1)))


class TestJacobi:
    def test_examples(self):
        assert jacobi(2, 7) == 1
        assert jacobi(-1, 7) == -1

    def test_quartic_family(self):
        for n in range(1, 60):
            p = n**4 + 1
            if is_prime(p) and p > 2:
                assert jacobi(2, p) == 1

    def test_matches_sympy(self):
        for n in range(3, 200, 2):
            for a in range(-5, 25):
                assert jacobi(a, n) == sympy.jacobi_symbol(a, n), (a, n)


class TestMultiplicativeFunctions:
    def test_examples(self):
        assert totient(9) == 6
        assert mobius(12) == 0
        assert carmichael(30) == 4

    def test_matches_sympy(self):
        for n in range(1, 500):
            assert totient(n) == sympy.totient(n)
            assert mobius(n) == sympy.mobius(n)
            assert carmichael(n) == sympy.reduced_totient(n)


class TestSqrtMod:
    def test_roundtrip(self):
        for p in sympy.primerange(3, 200):
            for a in range(1, p):
                r = sqrt_mod(a, p)
                if r is None:
                    assert jacobi(a, p) == -1
                else:
                    assert r * r % p == a % p
