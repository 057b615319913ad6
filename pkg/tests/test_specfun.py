"""Special-function evaluation: polynomial recurrences against explicit
coefficient oracles, exact terminating hypergeometrics, and the two-regime
Bessel/Struve evaluators against independent high-precision references."""

import math
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sfseries.quadrature import integrate_finite
from sfseries.specfun import CROSSOVER_Z, bessel_j, bessel_j_npi, evaluate_osc, \
    hermite, hyp1f1_poly, hyp2f1_term, laguerre, struve_h, struve_h_npi

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)


def hermite_explicit(n, x):
    """Explicit-coefficient oracle: H_n(x) = n! sum (-1)^m (2x)^(n-2m) /
    (m! (n-2m)!)."""
    total = Fraction(0)
    for m in range(n // 2 + 1):
        total += (Fraction((-1) ** m, 1) * (2 * x) ** (n - 2 * m)
                  / (math.factorial(m) * math.factorial(n - 2 * m)))
    return math.factorial(n) * total


class TestHermite:
    def test_trivial_cases(self):
        assert hermite(0, Fraction(7, 3)) == 1
        assert hermite(1, 2.0) == 4.0

    def test_cubic_from_recurrence_oracle(self):
        # 8x^3 - 12x at x=1
        assert hermite(3, Fraction(1)) == -4

    @given(n=st.integers(min_value=0, max_value=30), x=small_rationals)
    @settings(max_examples=60, deadline=None)
    def test_matches_explicit_coefficients(self, n, x):
        assert hermite(n, x) == hermite_explicit(n, x)

    def test_float_path_consistent(self):
        for n in (2, 7, 16):
            exact = hermite(n, Fraction(7, 5))
            approx = hermite(n, 1.4)
            assert math.isclose(float(exact), approx, rel_tol=1e-12)

    def test_order_bounds(self):
        with pytest.raises(ValueError):
            hermite(-1, 1.0)


class TestLaguerre:
    def test_trivial(self):
        assert laguerre(0, 5, Fraction(9, 7)) == 1

    def test_degree_one_cases(self):
        # L_1^0 = 1 - x, L_1^q = 1 + q - x by the explicit sum
        assert laguerre(1, 0, Fraction(1, 2)) == Fraction(1, 2)
        assert laguerre(1, 2, Fraction(1, 2)) == Fraction(5, 2)

    def test_negative_upper_index(self):
        # leading binomials vanish while p + q >= 0
        val = laguerre(9, -8, Fraction(1, 3))
        x = Fraction(1, 3)
        assert val == x ** 8 / math.factorial(8) - x ** 9 / math.factorial(9)

    @given(p=st.integers(min_value=1, max_value=20), q=st.integers(0, 6),
           x=small_rationals)
    @settings(max_examples=60, deadline=None)
    def test_three_term_recurrence(self, p, q, x):
        # (p+1) L_{p+1}^q = (2p+q+1-x) L_p^q - (p+q) L_{p-1}^q
        lhs = (p + 1) * laguerre(p + 1, q, x)
        rhs = (2 * p + q + 1 - x) * laguerre(p, q, x) \
            - (p + q) * laguerre(p - 1, q, x)
        assert lhs == rhs

    def test_rejects_bad_domain(self):
        with pytest.raises(ValueError):
            laguerre(2, -5, Fraction(1))


class TestHyp2f1Term:
    def test_empty_product(self):
        assert hyp2f1_term(0, 3).rat == 1

    def test_direct_sums(self):
        assert hyp2f1_term(1, 3).rat == Fraction(1, 2)   # a = 3/2
        assert hyp2f1_term(1, 2).rat == Fraction(2, 3)   # a = 1

    def test_a_equals_c_collapses_to_geometric(self):
        # 2F1(-n, 3/2; 3/2; 1/2) = 2^-n
        for n in (0, 1, 5, 9):
            assert hyp2f1_term(n, 3).rat == Fraction(1, 2 ** n)

    @given(n=st.integers(min_value=0, max_value=25),
           a2=st.integers(min_value=1, max_value=12))
    @settings(max_examples=40, deadline=None)
    def test_against_mpmath(self, n, a2):
        ours = hyp2f1_term(n, a2).rat
        with mp.workdps(40):
            ref = mp.hyp2f1(-n, mp.mpf(a2) / 2, mp.mpf(3) / 2, mp.mpf(1) / 2)
            assert abs(mp.mpf(ours.numerator) / ours.denominator - ref) \
                < mp.mpf(10) ** -30

    def test_kummer_polynomial(self):
        x = Fraction(3, 4)
        # 1F1(-2; 3/2; x) = 1 - 4x/3 + 4x^2/15
        want = 1 - Fraction(4, 3) * x + Fraction(4, 15) * x * x
        assert hyp1f1_poly(2, x) == want


def _bessel_series_64(k, z, terms=40):
    """The 40-term ascending-series oracle at 64-digit precision."""
    with mp.workdps(64):
        zh = mp.mpf(z) / 2
        return float(mp.nsum(lambda m: (-1) ** m * zh ** (k + 2 * m)
                             / (mp.factorial(m) * mp.factorial(k + m)),
                             [0, terms - 1]))


class TestBesselJ:
    def test_trivial_zero_arguments(self):
        assert bessel_j(1, 0.0) == 0.0
        assert bessel_j(0, 0.0) == 1.0

    def test_series_vs_40_term_oracle(self):
        z = math.pi
        assert math.isclose(bessel_j(2, z), _bessel_series_64(2, z),
                            rel_tol=1e-13)

    def test_against_mpmath_wide_grid(self):
        zs = [0.5, 1.0, math.pi, 10.0, 39.9, 40.0, 55.0, 100.0,
              10 * math.pi, 100 * math.pi, 1e4, 1e6 * math.pi]
        for k in (0, 1, 2, 5, 9, 12):
            for z in zs:
                got = bessel_j(k, z)
                with mp.workdps(40):
                    ref = float(mp.besselj(k, mp.mpf(z)))
                amp = math.sqrt(2 / (math.pi * max(z, 1e-9)))
                assert abs(got - ref) <= 1e-13 * max(abs(ref), amp), (k, z)

    def test_recurrence_invariant(self):
        # J_{k-1}(z) + J_{k+1}(z) = (2k/z) J_k(z), 1e-11 relative
        for z in (1.0, math.pi, 10 * math.pi, 100 * math.pi):
            for k in range(1, 11):
                lhs = bessel_j(k - 1, z) + bessel_j(k + 1, z)
                rhs = 2 * k / z * bessel_j(k, z)
                scale = max(abs(lhs), abs(rhs),
                            math.sqrt(2 / (math.pi * z)))
                assert abs(lhs - rhs) <= 1e-11 * scale

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            bessel_j(2, float("nan"))
        with pytest.raises(ValueError):
            bessel_j(2, -1.0)
        with pytest.raises(ValueError):
            bessel_j(13, 1.0)

    def test_npi_fast_path(self):
        for k in (1, 2, 5, 11):
            for n in (1, 5, 13, 100, 99_999, 1_000_000):
                got = bessel_j_npi(k, n)
                with mp.workdps(40):
                    ref = float(mp.besselj(k, n * mp.pi))
                amp = math.sqrt(2 / (math.pi * math.pi * n))
                assert abs(got - ref) <= 1e-13 * max(abs(ref), amp), (k, n)


def _struve_intrep_oracle(k, z):
    """Quadrature of the integral representation
    H_k(z) = 2 (z/2)^k / (sqrt(pi) G(k+1/2)) * int_0^1 (1-t^2)^(k-1/2) sin(zt) dt."""
    res = integrate_finite(
        lambda t: (1 - t * t) ** (k - mp.mpf("0.5")) * mp.sin(z * t),
        0.0, 1.0, 1e-12, dps=30)
    with mp.workdps(30):
        return float(2 * (mp.mpf(z) / 2) ** k
                     / (mp.sqrt(mp.pi) * mp.gamma(k + mp.mpf(1) / 2))
                     * res.hp_value)


class TestStruveH:
    def test_trivial_zero(self):
        for k in (0, 1, 5):
            assert struve_h(k, 0.0) == 0.0

    def test_small_z_leading_term(self):
        z = 1e-6
        assert math.isclose(struve_h(0, z), 2 * z / math.pi, rel_tol=1e-9)

    def test_vs_integral_representation(self):
        got = struve_h(1, math.pi)
        assert math.isclose(got, _struve_intrep_oracle(1, math.pi),
                            rel_tol=1e-10)

    def test_against_mpmath_wide_grid(self):
        for k in (0, 1, 2, 6, 10, 12):
            for z in (0.3, 1.0, math.pi, 15.0, 39.9, 40.0, 70.0,
                      100 * math.pi, 1e4):
                got = struve_h(k, z)
                with mp.workdps(50):
                    ref = float(mp.struveh(k, mp.mpf(z)))
                assert abs(got - ref) <= 1e-11 * max(abs(ref), 1e-3), (k, z)

    def test_recurrence_invariant(self):
        # H_{k-1} + H_{k+1} = (2k/z) H_k + (z/2)^k / (sqrt(pi) G(k+3/2))
        for z in (1.0, math.pi, 10 * math.pi, 100 * math.pi):
            for k in range(1, 11):
                lhs = struve_h(k - 1, z) + struve_h(k + 1, z)
                rhs = (2 * k / z * struve_h(k, z)
                       + (z / 2) ** k / (math.sqrt(math.pi)
                                         * math.gamma(k + 1.5)))
                assert abs(lhs - rhs) <= 1e-9 * max(abs(lhs), abs(rhs)), (k, z)

    def test_npi_fast_path(self):
        for k in (1, 2, 10):
            for n in (1, 12, 13, 1000, 100_000):
                got = struve_h_npi(k, n)
                with mp.workdps(40):
                    ref = float(mp.struveh(k, n * mp.pi))
                assert abs(got - ref) <= 1e-11 * max(abs(ref), 1e-6), (k, n)


class TestRegimes:
    def test_regime_tagging(self):
        assert evaluate_osc("bessel_j", 2, 10.0).regime == "series"
        assert evaluate_osc("bessel_j", 2, 40.0).regime == "asymptotic"
        assert evaluate_osc("struve_h", 2, 39.999).regime == "series"

    def test_bessel_crossover_window(self):
        # two-decade window containing the crossover: forced-series vs
        # forced-asymptotic evaluations agree to 1e-11 of the envelope
        zs = [20.0 * 10 ** (i / 4.0) for i in range(9)]   # 20 .. 2000
        for k in (0, 4, 8, 12):
            for z in zs:
                ser = bessel_j(k, z, force_regime="series")
                asy = bessel_j(k, z, force_regime="asymptotic")
                amp = math.sqrt(2 / (math.pi * z))
                assert abs(ser - asy) <= 1e-11 * max(abs(ser), amp), (k, z)

    def test_struve_crossover_window(self):
        zs = [30.0 * 10 ** (i / 3.0) for i in range(7)]   # 30 .. 3000
        for k in (0, 5, 10):
            for z in zs:
                ser = struve_h(k, z, force_regime="series")
                asy = struve_h(k, z, force_regime="asymptotic")
                assert abs(ser - asy) <= 1e-11 * max(abs(ser), 1e-3), (k, z)
