from fractions import Fraction

import pytest
import sympy

from conftest import brute_is_primitive_root, brute_order
from rootcensus.orders import (
    char_indicator_divisor,
    char_indicator_divisorfree,
    exp_sum_max,
    is_primitive_dth_residue,
    is_primitive_root,
    least_primitive_root,
    multiplicative_order,
    relative_order_series,
)


class TestMultiplicativeOrder:
    def test_examples(self):
        assert multiplicative_order(10, 7) == 6
        assert multiplicative_order(10, 11) == 2
        assert multiplicative_order(2, 7) == 3

    def test_matches_brute_force(self):
        for p in sympy.primerange(3, 200):
            for u in range(2, p):
                assert multiplicative_order(u, p) == brute_order(u, p)

    def test_matches_sympy_large(self):
        p = 104729
        for u in (2, 3, 5, 10, 104728):
            assert multiplicative_order(u, p) == sympy.n_order(u, p)


class TestIsPrimitiveRoot:
    def test_examples(self):
        assert is_primitive_root(2, 11)
        assert not is_primitive_root(2, 7)

    def test_squares_never_generate(self):
        for p in sympy.primerange(5, 200):
            assert not is_primitive_root(4, p)

    def test_matches_brute_force(self):
        for p in sympy.primerange(3, 150):
            for u in range(1, p):
                assert is_primitive_root(u, p) == brute_is_primitive_root(u, p)


class TestLeastPrimitiveRoot:
    def test_examples(self):
        assert least_primitive_root(7) == 3
        assert least_primitive_root(2) == 1
        assert least_primitive_root(41) == 6

    def test_matches_sympy(self):
        for p in sympy.primerange(3, 2000):
            assert least_primitive_root(p) == sympy.primitive_root(p)


class TestPrimitiveDthResidue:
    def test_examples(self):
        assert is_primitive_dth_residue(4, 11, 2)
        assert is_primitive_dth_residue(2, 11, 1)
        assert not is_primitive_dth_residue(1, 11, 2)

    def test_definition(self):
        for p in sympy.primerange(3, 100):
            for d in (1, 2, 3):
                if (p - 1) % d:
                    continue
                for u in range(2, p):
                    expected = brute_order(u, p) == (p - 1) // d
                    assert is_primitive_dth_residue(u, p, d) == expected


class TestCharacterIndicators:
    def test_examples(self):
        assert char_indicator_divisor(3, 7) == pytest.approx(1.0, abs=1e-6)
        assert char_indicator_divisor(2, 7) == pytest.approx(0.0, abs=1e-6)
        assert char_indicator_divisor(2, 5) == pytest.approx(1.0, abs=1e-6)
        assert char_indicator_divisorfree(3, 7) == pytest.approx(1.0, abs=1e-6)
        assert char_indicator_divisorfree(2, 7) == pytest.approx(0.0, abs=1e-6)

    def test_divisor_form_is_indicator(self):
        for p in sympy.primerange(3, 200):
            for u in range(2, p):
                got = char_indicator_divisor(u, p)
                want = 1.0 if brute_is_primitive_root(u, p) else 0.0
                assert got == pytest.approx(want, abs=1e-6), (u, p)

    def test_two_forms_agree(self):
        for p in sympy.primerange(3, 200):
            for u in range(2, p, max(1, p // 8)):
                a = round(char_indicator_divisor(u, p))
                b = round(char_indicator_divisorfree(u, p))
                assert a == b, (u, p)


class TestExpSumMax:
    def test_triangle_bound_p7(self):
        mx, _ = exp_sum_max(7)
        assert mx <= sympy.totient(6) + 1e-9

    def test_subexponential_regime_p101(self):
        mx, _ = exp_sum_max(101)
        assert mx < 2 * 101 ** (7 / 8)

    def test_strict_bound_p499(self):
        mx, _ = exp_sum_max(499)
        assert mx < sympy.totient(498)


class TestRelativeOrderSeries:
    def test_example(self):
        assert relative_order_series(2, 20) == [
            (3, Fraction(1)),
            (5, Fraction(1)),
            (7, Fraction(1, 2)),
            (11, Fraction(1)),
            (13, Fraction(1)),
            (17, Fraction(1, 2)),
            (19, Fraction(1)),
        ]

    def test_ratios_are_reciprocal_indices(self):
        for p, ratio in relative_order_series(3, 200):
            assert ratio == Fraction(brute_order(3, p), p - 1)
