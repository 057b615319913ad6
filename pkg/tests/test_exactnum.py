"""Exact-arithmetic substrate: scalars with radicals, half-integer gammas,
structured constants, high-precision rendering."""

import math
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sfseries.exactnum import ClosedFormConstant, ExactScalar, ExpPolyForm, \
    double_factorial, gamma_half, render

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)
radical_powers = st.integers(min_value=-3, max_value=3)


def scalar(rat, s=0, q=0):
    return ExactScalar(rat, sqrt_pi_power=s, sqrt3_power=q)


class TestExactScalar:
    def test_reduction_and_fields(self):
        x = ExactScalar(6, 4)
        assert (x.num, x.den) == (3, 2)
        assert ExactScalar(-6, 4).den == 2 > 0

    def test_mixed_addition_is_error(self):
        with pytest.raises(ValueError):
            scalar(1) + scalar(1, s=1)
        with pytest.raises(ValueError):
            scalar(1, q=1) + scalar(1, q=-1)

    def test_zero_is_radical_neutral(self):
        assert scalar(0) + scalar(Fraction(1, 3), s=2) == scalar(Fraction(1, 3), s=2)

    def test_mul_div_combine_powers(self):
        x = scalar(Fraction(2, 3), s=1, q=1) * scalar(Fraction(3, 4), s=1, q=-2)
        assert x == scalar(Fraction(1, 2), s=2, q=-1)
        y = x / scalar(Fraction(1, 2), s=2, q=-1)
        assert y == scalar(1)

    @given(a=rationals, b=rationals, c=rationals, s=radical_powers,
           q=radical_powers)
    @settings(max_examples=200)
    def test_field_axioms(self, a, b, c, s, q):
        xa, xb, xc = (scalar(v, s=s, q=q) for v in (a, b, c))
        assert (xa + xb) + xc == xa + (xb + xc)
        assert xa + (-xa) == ExactScalar(0)
        m = scalar(c, s=1)
        assert m * (xa + xb) == m * xa + m * xb

    @given(a=rationals, b=rationals, s=radical_powers)
    @settings(max_examples=100)
    def test_exact_cancellation_and_float(self, a, b, s):
        x = scalar(a, s=s) + scalar(b, s=s) - scalar(b, s=s)
        assert x == scalar(a, s=s)

    def test_immutability(self):
        x = scalar(1)
        with pytest.raises(AttributeError):
            x.rat = Fraction(2)


class TestGammaHalf:
    def test_integer_values(self):
        assert gamma_half(2) == ExactScalar(1)          # Gamma(1)
        assert gamma_half(8) == ExactScalar(6)          # Gamma(4) = 3!

    def test_half_integer_values(self):
        assert gamma_half(3) == scalar(Fraction(1, 2), s=1)     # Gamma(3/2)
        # Gamma(7/2) from the recurrence Gamma(x+1) = x Gamma(x), seeded at 3/2:
        # (5/2)(3/2)(1/2) sqrt(pi) = 15/8 sqrt(pi)
        assert gamma_half(7) == scalar(Fraction(15, 8), s=1)

    def test_recurrence_1_to_60(self):
        for two_x in range(1, 61):
            lhs = gamma_half(two_x + 2)
            rhs = scalar(Fraction(two_x, 2)) * gamma_half(two_x)
            assert lhs == rhs

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            gamma_half(0)


def test_double_factorial():
    assert [double_factorial(k) for k in (-1, 0, 1, 2, 5, 9)] == \
        [1, 1, 1, 2, 15, 945]


class TestClosedFormConstant:
    def test_normalization_folds_sqrt3(self):
        # 3^(5/2) = 9 * 3^(1/2) = 27 * 3^(-1/2)
        c = ClosedFormConstant(Fraction(1), 0, 5)
        assert c.sqrt3_power == -1 and c.coeff == 27
        c2 = ClosedFormConstant(Fraction(5), 1, -4)
        assert c2.sqrt3_power == 0 and c2.coeff == Fraction(5, 9)

    def test_structural_equality(self):
        a = ClosedFormConstant(Fraction(2, 3), 1, -1)
        b = ClosedFormConstant(Fraction(2, 9), 1, 1)   # 2/9 * 3 * sqrt3^-1
        assert a == b

    def test_parse_roundtrip(self):
        for text in ("4/15", "32/2835 * pi^2", "2/3 * pi^1 * sqrt3^-1",
                     "-7/2 * sqrt3^-1"):
            c = ClosedFormConstant.parse(text)
            assert ClosedFormConstant.parse(c.to_string()) == c

    def test_from_exact_rejects_odd_pi_power(self):
        with pytest.raises(ValueError):
            ClosedFormConstant.from_exact(scalar(1, s=1))

    def test_render_table_entry(self):
        # 2pi/(3 sqrt(3)), digits derived by high-precision evaluation
        c = ClosedFormConstant(Fraction(2, 3), 1, -1)
        got = mp.nstr(c.hp(32), 32)
        assert got == "1.2091995761561452337293855050948"

    def test_render_stability_32_vs_64(self):
        vals = [ClosedFormConstant(Fraction(2, 3), 1, -1),
                ClosedFormConstant(Fraction(323323, 839808), 2, -1),
                scalar(Fraction(15, 8), s=1),
                scalar(Fraction(-7, 11), s=-3, q=5)]
        for v in vals:
            lo, hi = v.hp(32), v.hp(64)
            assert abs(lo - hi) <= abs(hi) * mp.mpf(10) ** -30


class TestExpPolyForm:
    def test_limit_at_zero_finite_path(self):
        # e^(-y/2) (e^y - 1)/y  ->  1 as y -> 0+
        form = ExpPolyForm(Fraction(1), {-1: Fraction(-1)}, {-1: Fraction(1)})
        assert form.limit_at_zero() == 1
        assert form.hp(0, 30) == 1

    def test_divergent_limit_rejected(self):
        with pytest.raises(ValueError):
            ExpPolyForm(Fraction(1), {-1: Fraction(1)}, {})

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            ExpPolyForm(Fraction(1), {}, {0: Fraction(0)})

    def test_nu1_value_at_y1(self):
        # (1 - 2y + e^y)/2 * e^(-y/2) at y=1: direct evaluation
        form = ExpPolyForm(Fraction(1, 2), {0: Fraction(1), 1: Fraction(-2)},
                           {0: Fraction(1)})
        with mp.workdps(40):
            got = form.hp(1, 32)
            want = mp.mpf("0.52109530549374736162242562641149")
            assert abs(got - want) < mp.mpf(10) ** -30

    def test_record_roundtrip(self):
        form = ExpPolyForm(Fraction(1, 8), {1: Fraction(-1), 2: Fraction(4),
                                            3: Fraction(-2)}, {1: Fraction(1)})
        assert ExpPolyForm.from_record(form.to_record()) == form


class TestRender:
    def test_requires_y_for_exp_poly(self):
        form = ExpPolyForm(Fraction(1), {0: Fraction(1)}, {})
        with pytest.raises(ValueError):
            render(form)

    def test_precision_floor(self):
        with pytest.raises(ValueError):
            render(ExactScalar(1), precision=8)

    def test_plain_rational(self):
        assert render(Fraction(1, 4), precision=20) == mp.mpf("0.25")

    def test_gaussian_value(self):
        # sqrt(pi)/2 rendered vs mpmath
        got = render(scalar(Fraction(1, 2), s=1), precision=40)
        with mp.workdps(40):
            assert abs(got - mp.sqrt(mp.pi) / 2) < mp.mpf(10) ** -38
