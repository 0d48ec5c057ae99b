import math

import gmpy2
import pytest
import sympy
from gmpy2 import mpfr

from rootcensus.census import PolySpec
from rootcensus.densities import (
    NAMED_CONSTANTS,
    ProductSpec,
    corrected_density,
    cyclic_corrected,
    euler_product,
    koblitz_delta1,
    named_constant,
    progression_density,
    singular_series,
)

P_MED = 10**6


def slow_product(local, limit, floor=2):
    """Independent oracle: same product at 200-bit precision via sympy's
    prime generator."""
    with gmpy2.context(precision=200):
        acc = mpfr(1)
        for p in sympy.primerange(floor, limit + 1):
            acc *= mpfr(local(p))
        return float(acc)


class TestEulerProduct:
    def test_artin_spec_example(self):
        spec = NAMED_CONSTANTS["artin"]
        v = float(euler_product(spec, 10**7).value)
        assert v == pytest.approx(0.3739558136, abs=1e-8)

    def test_cyclic_spec_example(self):
        v = float(named_constant("cyclic_c0", P_MED))
        assert v == pytest.approx(0.8137519, abs=1e-7)

    def test_matches_independent_evaluation(self):
        for name, spec in NAMED_CONSTANTS.items():
            v = float(euler_product(spec, 10**4).value)
            w = slow_product(spec.local_factor, 10**4, spec.prime_floor)
            assert v == pytest.approx(w, abs=1e-14), name

    def test_doubling_within_tail_bound(self):
        for name in NAMED_CONSTANTS:
            r1 = named_constant(name, P_MED)
            r2 = named_constant(name, 2 * P_MED)
            assert abs(float(r1) - float(r2)) <= r1.tail_bound, name

    def test_rejects_small_truncation(self):
        with pytest.raises(ValueError):
            euler_product(NAMED_CONSTANTS["artin"], 50)

    def test_rejects_slow_decay(self):
        with pytest.raises(ValueError):
            ProductSpec(lambda p: 1 - 1 / p, 2, 1, 1.0)


class TestNamedConstants:
    def test_koblitz(self):
        v = float(named_constant("koblitz_p0", 10**7))
        assert v == pytest.approx(0.505166168239435774, abs=1e-8)

    def test_primitive_point(self):
        v = float(named_constant("primitive_point", 10**7))
        assert v == pytest.approx(0.44014736679205786, abs=1e-8)

    def test_squarefree_totient_is_artin_squared(self):
        a = named_constant("artin", P_MED)
        sq = named_constant("squarefree_totient_a0sq", P_MED)
        assert float(sq) == pytest.approx(float(a) ** 2, rel=1e-15)

    def test_relative_order_formula_value(self):
        # The catalogued local factor 1 - p/(p^3-1) has the true product
        # value 0.5759599689...; the empirical mean of relative orders
        # (see test below) confirms the formula, not the commonly
        # mis-transcribed digits 0.647731.
        v = float(named_constant("relative_order_c", 10**6))
        assert v == pytest.approx(0.5759599689, abs=1e-6)

    def test_relative_order_empirical_mean(self):
        total = cnt = 0
        for p in sympy.primerange(3, 3000):
            for u in range(2, 51):
                if u % p == 0:
                    continue
                total += sympy.n_order(u, p) / (p - 1)
                cnt += 1
        # small fixed bases are biased slightly below the limit constant
        # (perfect powers like 4, 8, 9 have systematically smaller orders)
        assert total / cnt == pytest.approx(0.5759599689, abs=0.03)

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            named_constant("nope")


class TestCorrectedDensity:
    def test_u2_is_artin(self):
        assert float(corrected_density(2, P_MED)) == pytest.approx(
            float(named_constant("artin", P_MED)), rel=1e-12
        )

    def test_u5_correction(self):
        assert float(corrected_density(5, P_MED)) == pytest.approx(
            (1 + 1 / 19) * float(named_constant("artin", P_MED)), rel=1e-12
        )

    def test_rejects_square(self):
        with pytest.raises(ValueError):
            corrected_density(4)

    def test_matches_empirical_density(self):
        from rootcensus.census import census_fixed_root

        rec = census_fixed_root(2, 10**5)
        assert rec.hits / rec.baseline == pytest.approx(
            float(named_constant("artin", P_MED)), abs=0.01
        )


class TestProgressionDensity:
    def test_degenerate_q2(self):
        assert float(progression_density(2, 2, 1, 1, P_MED)) == pytest.approx(
            float(named_constant("artin", P_MED)), rel=1e-12
        )

    def test_q4_a3(self):
        # gcd(a-1, q) = 2 contributes (1 - 1/2); dividing by phi(4) = 2
        # halves the Artin product rebuilt without its p=2 local factor.
        artin = float(named_constant("artin", P_MED))
        local2 = 1 - 1 / (2 * 1)
        expected = (artin / local2) * (1 / 2) / 2
        assert float(progression_density(2, 4, 3, 1, P_MED)) == pytest.approx(
            expected, rel=1e-9
        )

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            progression_density(2, 4, 2)


class TestSingularSeries:
    def test_s2(self):
        assert float(singular_series(PolySpec((1, 0, 1)), 10**7)) == pytest.approx(
            0.6864, abs=5e-4
        )

    def test_s4(self):
        v = float(singular_series(PolySpec((1, 0, 0, 0, 1)), 10**7))
        assert v == pytest.approx(0.66974, abs=1e-4)

    def test_s3_formula_value(self):
        # x^3+2: the formula value (the commonly circulated digit strings
        # 0.2565157750 and 0.155943 come from a sign-flipped local factor
        # inconsistent with the quadratic/quartic evaluations).
        v = float(singular_series(PolySpec((2, 0, 0, 1)), 10**6))
        assert v == pytest.approx(0.43283, abs=5e-4)

    def test_fixed_divisor_zero(self):
        assert float(singular_series(PolySpec((2, 1, 1)))) == 0.0


class TestEllipticDensityCorrections:
    def test_koblitz_d_minus3(self):
        v = float(koblitz_delta1(-3, P_MED))
        p0 = float(named_constant("koblitz_p0", P_MED))
        assert v == pytest.approx((10 / 9) * p0, rel=1e-12)
        assert v == pytest.approx(0.5612957424882619, abs=1e-6)

    def test_koblitz_d_minus4(self):
        assert float(koblitz_delta1(-4, P_MED)) == pytest.approx(
            float(named_constant("koblitz_p0", P_MED)), rel=1e-15
        )

    def test_cyclic_even_discriminant(self):
        assert float(cyclic_corrected(-4, P_MED)) == pytest.approx(
            0.8137519, abs=1e-6
        )

    def test_cyclic_odd_correction_factor(self):
        c0 = float(named_constant("cyclic_c0", P_MED))
        v = float(cyclic_corrected(-3, P_MED))
        gl2 = lambda p: (p * p - 1) * (p * p - p)
        expected = (1 + (-1 / gl2(2)) * (-1 / gl2(3))) * c0
        assert v == pytest.approx(expected, rel=1e-12)
