import math
from fractions import Fraction

import pytest
import sympy

from rootcensus.expansions import (
    block_digit_sum,
    class_number_imag,
    expansion_period,
    fundamental_unit,
    girstmair_check,
    hirzebruch_check,
    is_wieferich,
    real_class_number_is_one,
    repeating_block,
    sqrt_continued_fraction,
)
from rootcensus.orders import is_primitive_root, multiplicative_order

# Appendix period families: (n, base, period)
APPENDIX_PERIODS = [
    (3, 2, 2),
    (9, 2, 6),
    (27, 2, 18),
    (5, 2, 4),
    (25, 2, 20),
    (125, 2, 100),
    (7, 2, 3),
    (49, 2, 21),
    (343, 2, 147),
    (7, 10, 6),
    (49, 10, 42),
    (343, 10, 294),
    (11, 10, 2),
    (121, 10, 22),
    (1331, 10, 242),
    (13, 10, 6),
    (169, 10, 78),
    (2197, 10, 1014),
]

APPENDIX_BLOCKS = [
    (3, 2, "01"),
    (9, 2, "000111"),
    (27, 2, "000010010111101101"),
    (5, 2, "0011"),
    (25, 2, "00001010001111010111"),
    (7, 2, "001"),
    (49, 2, "000001010011100101111"),
    (7, 10, "142857"),
    (11, 10, "09"),
    (121, 10, "0082644628099173553719"),
    (13, 10, "076923"),
]


class TestExpansionPeriod:
    @pytest.mark.parametrize("n,base,period", APPENDIX_PERIODS)
    def test_appendix_pairs(self, n, base, period):
        assert expansion_period(n, base) == period

    def test_definition(self):
        for n in (3, 7, 9, 11, 13, 21, 27, 49):
            for base in (2, 3, 10):
                if math.gcd(n, base) > 1:
                    continue
                d = expansion_period(n, base)
                assert pow(base, d, n) == 1
                assert all(pow(base, k, n) != 1 for k in range(1, d))

    def test_prime_power_law(self):
        # non-Wieferich prime powers: period(p^k) = period(p) * p^(k-1)
        for p, base in ((3, 2), (5, 2), (7, 2), (7, 10), (11, 10), (13, 10)):
            d1 = expansion_period(p, base)
            for k in (2, 3):
                assert expansion_period(p**k, base) == d1 * p ** (k - 1)

    def test_wieferich_breaks_law(self):
        assert expansion_period(1093**2, 2) == expansion_period(1093, 2) == 364
        assert expansion_period(487**2, 10) == expansion_period(487, 10) == 486


class TestRepeatingBlock:
    @pytest.mark.parametrize("n,base,digits", APPENDIX_BLOCKS)
    def test_appendix_blocks(self, n, base, digits):
        rec = repeating_block(n, base)
        assert "".join(str(d) for d in rec.digits) == digits

    def test_block_reconstructs_fraction(self):
        for n, base in ((7, 10), (13, 10), (41, 10), (9, 2), (31, 5)):
            rec = repeating_block(n, base)
            m = rec.block_integer()
            assert Fraction(m, base**rec.period - 1) == Fraction(1, n)


class TestWieferich:
    def test_known_pairs(self):
        assert is_wieferich(1093, 2)
        assert is_wieferich(3511, 2)
        assert is_wieferich(487, 10)
        assert is_wieferich(5, 7)

    def test_ordinary(self):
        assert not is_wieferich(3, 2)
        assert not is_wieferich(7, 10)

    def test_definition_scan(self):
        found = [p for p in sympy.primerange(3, 4000) if is_wieferich(p, 2)]
        assert found == [1093, 3511]


class TestClassNumberImag:
    TABLE = {7: 1, 19: 1, 23: 3, 47: 5, 59: 3, 131: 5, 167: 11, 179: 5, 223: 7}

    def test_table(self):
        for p, h in self.TABLE.items():
            assert class_number_imag(p) == h

    def test_reduced_form_oracle(self):
        # independent count of reduced forms of discriminant -p
        for p in sympy.primerange(7, 300):
            if p % 4 != 3:
                continue
            D = -p
            count = 0
            for a in range(1, int(math.isqrt(p // 3)) + 1):
                for b in range(-a + 1, a + 1):
                    if (b * b - D) % (4 * a):
                        continue
                    c = (b * b - D) // (4 * a)
                    if c < a or (c == a and b < 0):
                        continue
                    count += 1
            assert class_number_imag(p) == count, p


class TestSqrtContinuedFraction:
    def test_examples(self):
        assert sqrt_continued_fraction(7) == (2, [1, 1, 1, 4])
        assert sqrt_continued_fraction(2) == (1, [2])
        assert sqrt_continued_fraction(23) == (4, [1, 3, 1, 8])

    def test_matches_sympy(self):
        for n in range(2, 150):
            if math.isqrt(n) ** 2 == n:
                continue
            from sympy.ntheory.continued_fraction import continued_fraction_periodic

            got = sqrt_continued_fraction(n)
            want = continued_fraction_periodic(0, 1, n)
            assert got == (want[0], list(want[1]))


class TestFundamentalUnit:
    def test_examples(self):
        assert fundamental_unit(2) == (1, 1, -1)
        assert fundamental_unit(7) == (8, 3, 1)

    def test_norm_equation(self):
        for d in (2, 3, 5, 7, 11, 13, 19, 31, 43, 46, 94):
            x, y, norm = fundamental_unit(d)
            assert x * x - d * y * y == norm
            assert norm in (1, -1)


class TestGirstmair:
    def test_table_rows(self):
        for p, h in TestClassNumberImag.TABLE.items():
            alt, holds = girstmair_check(p, 10)
            assert holds
            assert alt == 11 * h

    def test_all_applicable_primes(self):
        for p in sympy.primerange(7, 500):
            if p % 4 == 3 and is_primitive_root(10, p):
                alt, holds = girstmair_check(p, 10)
                assert holds, p
                assert alt == 11 * class_number_imag(p), p


class TestHirzebruch:
    def test_examples(self):
        r = hirzebruch_check(23)
        assert r.applicable and r.holds and abs(r.alt_sum) == 9
        r = hirzebruch_check(19)
        assert r.holds and abs(r.alt_sum) == 3
        r = hirzebruch_check(47)
        assert r.holds and abs(r.alt_sum) == 15  # table prints 10: erratum

    def test_gate_excludes_223(self):
        assert not real_class_number_is_one(223)
        assert not hirzebruch_check(223).applicable

    def test_all_applicable_primes(self):
        for p in sympy.primerange(7, 500):
            if p % 4 != 3:
                continue
            r = hirzebruch_check(p)
            if r.applicable:
                assert r.holds, p
                assert abs(r.alt_sum) == 3 * class_number_imag(p), p


class TestBlockDigitSum:
    def test_primitive_case(self):
        res = block_digit_sum(7, 10, 1)
        assert res.digit_sum == 27
        assert res.residual < 1e-6

    def test_identity_many_pairs(self):
        for p, base in (
            (7, 2),
            (31, 2),
            (127, 2),
            (151, 2),
            (11, 3),
            (13, 10),
            (31, 5),
            (41, 10),
            (73, 10),
        ):
            r = (p - 1) // multiplicative_order(base, p)
            res = block_digit_sum(p, base, r)
            block = repeating_block(p, base).digits[: (p - 1) // r]
            assert res.digit_sum == sum(block)
            assert res.residual < 1e-6, (p, base)

    def test_rejects_mismatched_order(self):
        with pytest.raises(ValueError):
            block_digit_sum(7, 10, 2)
