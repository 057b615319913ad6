"""Closed-form expansion coefficients C_n of each trial-function family in
its eigenbasis, the exact summands of the four series identities, and the
independent quadrature route that re-computes every C_n from its defining
overlap integral.

The exact-arithmetic carrier for families 1 and 2 is |C_n|^2 (or the
un-normalized table summand): squaring clears the sqrt(pi) and 2^(nu/2)
irrationalities so table mismatches become exact-arithmetic facts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import mpmath as mp
import numpy as np

from .exactnum import ExactScalar, double_factorial, gamma_half
from .qmodels import TrialFunction, eigenfunction, half_oscillator, infinite_well
from .quadrature import QuadResult, gaussian_cutoff, integrate_finite
from .specfun import bessel_j_npi, bessel_j_npi_block, hyp2f1_term, \
    laguerre, struve_h_npi, struve_h_npi_block

__all__ = [
    "f1_sum_term",
    "f2_sum_term",
    "f3_sum_term",
    "f4_sum_term",
    "f3_sum_term_block",
    "f4_sum_term_block",
    "coeff_f1",
    "coeff_f2",
    "coeff_f3",
    "coeff_f4",
    "coeff_sq",
    "coeff_oracle",
    "CoeffSequence",
]


# ---------------------------------------------------------------------------
# exact summands of the four table identities
# ---------------------------------------------------------------------------

def f1_sum_term(n: int, nu: int) -> ExactScalar:
    """Summand 2^(2n)/(2n+1)! * Gamma(n+3/2)^2 * 2F1(-n, nu/2+1; 3/2; 1/2)^2,
    exactly (a rational times pi, via Gamma(n+3/2)^2 = pi ((2n+1)!!)^2/4^(n+1))."""
    if n < 0 or nu < 0:
        raise ValueError("need n >= 0 and nu >= 0")
    f = hyp2f1_term(n, nu + 2).rat
    df = double_factorial(2 * n + 1)
    rat = (Fraction(4 ** n, math.factorial(2 * n + 1))
           * Fraction(df * df, 4 ** (n + 1)) * f * f)
    return ExactScalar(rat, sqrt_pi_power=2)


def f2_sum_term(n: int, nu: int, b2: Fraction) -> Fraction:
    """Summand [L_nu^(2n+1-nu)(b^2/2)]^2 b^(4n) / (2^(2n) (2n+1)!), exact
    for rational b^2."""
    if n < 0 or nu < 0:
        raise ValueError("need n >= 0 and nu >= 0")
    b2 = Fraction(b2)
    if b2 <= 0:
        raise ValueError("need b^2 > 0")
    lag = laguerre(nu, 2 * n + 1 - nu, b2 / 2)
    return b2 ** (2 * n) * lag * lag / (4 ** n * math.factorial(2 * n + 1))


def f3_sum_term(n: int, nu: int) -> float:
    """Summand J_{nu+1}(n pi)^2 / n^(2 nu)."""
    if n < 1 or nu < 1:
        raise ValueError("need n >= 1 and nu >= 1")
    j = bessel_j_npi(nu + 1, n)
    return j * j / float(n) ** (2 * nu)


def f4_sum_term(n: int, nu: int) -> float:
    """Summand H_nu(n pi)^2 / n^(2 nu)."""
    if n < 1 or nu < 1:
        raise ValueError("need n >= 1 and nu >= 1")
    h = struve_h_npi(nu, n)
    return h * h / float(n) ** (2 * nu)


def f3_sum_term_block(nu: int, n0: int, n1: int) -> np.ndarray:
    """f3_sum_term over n in [n0, n1), vectorized (requires n0*pi >= crossover)."""
    n = np.arange(n0, n1, dtype=np.float64)
    j = bessel_j_npi_block(nu + 1, n)
    return j * j / n ** (2 * nu)


def f4_sum_term_block(nu: int, n0: int, n1: int) -> np.ndarray:
    n = np.arange(n0, n1, dtype=np.float64)
    h = struve_h_npi_block(nu, n)
    return h * h / n ** (2 * nu)


# ---------------------------------------------------------------------------
# normalized coefficients C_n (signed floats, plus exact squares for f1)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoeffValue:
    """A single expansion coefficient: signed float value, and where the
    arithmetic allows it, the exact |C_n|^2."""
    family: str
    n: int
    value: float
    sq_exact: Optional[ExactScalar] = None


def coeff_f1(n: int, nu: int) -> CoeffValue:
    """C_n for family 1: A (2^(2n)(2n+1)! sqrt(pi))^(-1/2) (-1)^n 2^(2n-nu/2)
    Gamma(nu/2+1) Gamma(n+3/2)/sqrt(pi) 2F1(-n, nu/2+1; 3/2; 1/2).

    |C_n|^2 is exact (rational * powers of pi and sqrt(3)); the signed value
    is float, with sign (-1)^n * sign(2F1)."""
    if n < 0 or nu < 0:
        raise ValueError("need n >= 0 and nu >= 0")
    a_sq = ExactScalar(2 * 3 ** nu, sqrt3_power=1) / gamma_half(2 * nu + 1)
    g_half_nu = gamma_half(nu + 2)          # Gamma(nu/2 + 1)
    sq = (a_sq * g_half_nu * g_half_nu
          * ExactScalar(Fraction(1, 2 ** nu), sqrt_pi_power=-3)
          * f1_sum_term(n, nu))
    f = hyp2f1_term(n, nu + 2).rat
    sign = (1 if n % 2 == 0 else -1) * (1 if f >= 0 else -1)
    return CoeffValue("f1", n, sign * math.sqrt(float(sq)), sq)


def coeff_f2(n: int, nu: int, b, norm_sq=None) -> CoeffValue:
    """C_n for family 2 (parity rule: sin for even nu, cos for odd nu):

    C_n = N * (2^(2n)(2n+1)! sqrt(pi))^(-1/2) * ((-1)^(n+floor(nu/2))/2)
          * nu! 2^nu sqrt(pi) b^(2n+1-nu) e^(-b^2/4) L_nu^(2n+1-nu)(b^2/2)
    """
    if n < 0 or nu < 0:
        raise ValueError("need n >= 0 and nu >= 0")
    b = Fraction(b)
    if norm_sq is None:
        norm_sq = TrialFunction.make("f2", nu, b=b).norm_sq
    with mp.workdps(40):
        if isinstance(norm_sq, QuadResult):
            nval = mp.sqrt(norm_sq.hp_value)
        else:
            nval = mp.sqrt(norm_sq.hp(40))
        bf = mp.mpf(b.numerator) / b.denominator
        lag = laguerre(nu, 2 * n + 1 - nu, b * b / 2)
        lagf = mp.mpf(lag.numerator) / lag.denominator
        mag = (nval / mp.sqrt(mp.mpf(4) ** n * mp.factorial(2 * n + 1)
                              * mp.sqrt(mp.pi))
               * mp.factorial(nu) * mp.mpf(2) ** (nu - 1) * mp.sqrt(mp.pi)
               * bf ** (2 * n + 1 - nu) * mp.exp(-bf * bf / 4) * lagf)
        sign = -1 if (n + nu // 2) % 2 else 1
        return CoeffValue("f2", n, float(sign * mag))


def coeff_f3(n: int, nu: int, a=1) -> CoeffValue:
    """C_n = sqrt(2/a) B (sqrt(pi)/2) a (2a^2/(n pi))^nu Gamma(nu+1/2)
    J_{nu+1}(n pi); the a-dependence cancels exactly in |C_n|^2."""
    if n < 1 or nu < 1:
        raise ValueError("need n >= 1 and nu >= 1")
    a = Fraction(a)
    pref_sq = _f3_prefactor_sq(nu, a)  # exact (2/a) B^2 (pi/4) a^2 (2a^2/pi)^(2nu) G^2
    j = bessel_j_npi(nu + 1, n)
    mag = math.sqrt(float(pref_sq)) * abs(j) / float(n) ** nu
    return CoeffValue("f3", n, math.copysign(mag, j))


def coeff_f4(n: int, nu: int, a=1) -> CoeffValue:
    """C_n = sqrt(2/a) C (sqrt(pi)/2) (2a^2/(n pi))^nu Gamma(nu+1/2) H_nu(n pi)."""
    if n < 1 or nu < 1:
        raise ValueError("need n >= 1 and nu >= 1")
    a = Fraction(a)
    pref_sq = _f4_prefactor_sq(nu, a)
    h = struve_h_npi(nu, n)
    mag = math.sqrt(float(pref_sq)) * abs(h) / float(n) ** nu
    return CoeffValue("f4", n, math.copysign(mag, h))


def _f3_prefactor_sq(nu: int, a: Fraction) -> ExactScalar:
    """|C_n|^2 / (J_{nu+1}(n pi)^2 / n^(2nu)) for family 3, exact; this is
    also the reciprocal of the Table-2 right-hand side (a cancels)."""
    from .qmodels import normalization_sq
    b_sq = normalization_sq("f3", nu, a=a)
    g = gamma_half(2 * nu + 1)
    return (ExactScalar(2) / a * b_sq
            * ExactScalar(Fraction(1, 4), sqrt_pi_power=2)
            * ExactScalar(a) ** 2
            * (ExactScalar(2 * a * a, sqrt_pi_power=-2)) ** (2 * nu) * g * g)


def _f4_prefactor_sq(nu: int, a: Fraction) -> ExactScalar:
    from .qmodels import normalization_sq
    c_sq = normalization_sq("f4", nu, a=a)
    g = gamma_half(2 * nu + 1)
    return (ExactScalar(2) / a * c_sq
            * ExactScalar(Fraction(1, 4), sqrt_pi_power=2)
            * (ExactScalar(2 * a * a, sqrt_pi_power=-2)) ** (2 * nu) * g * g)


def coeff_sq(family: str, n: int, nu: int, b=None, a=1, norm_sq=None) -> float:
    """|C_n|^2 as a float, any family."""
    if family == "f1":
        return float(coeff_f1(n, nu).sq_exact)
    if family == "f2":
        return coeff_f2(n, nu, b, norm_sq=norm_sq).value ** 2
    if family == "f3":
        return float(_f3_prefactor_sq(nu, Fraction(a))) * f3_sum_term(n, nu)
    if family == "f4":
        return float(_f4_prefactor_sq(nu, Fraction(a))) * f4_sum_term(n, nu)
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# the quadrature oracle: C_n = integral of psi * psi_n over the domain
# ---------------------------------------------------------------------------

def _cancellation_digits(family: str, n: int, nu: int) -> int:
    """Decimal digits lost to cancellation in the overlap integrand, from
    the size of the un-normalized Hermite factors."""
    if family in ("f3", "f4"):
        return 8
    # eigenfunction magnitude ~ sqrt(2^(2n+1) (2n+1)! sqrt(pi)) at the peak
    lg = 0.5 * ((2 * n + 1) * math.log10(2.0)
                + math.lgamma(2 * n + 2) / math.log(10.0))
    if family == "f2":
        lg += 0.5 * (nu * math.log10(2.0) + math.lgamma(nu + 1) / math.log(10.0))
    return int(lg) + 6


def coeff_oracle(family: str, n: int, nu: int, b=None, a=1,
                 tol: float = 1e-12) -> QuadResult:
    """Compute C_n by quadrature of its defining overlap integral, the
    independent check for every closed form in this module.

    Working precision scales both with the interior cancellation of the
    integrand and with the size of the coefficient itself (estimated from
    the closed form, which sets precision only, never the value), so tiny
    coefficients still come out to full relative accuracy."""
    a = Fraction(a)
    mag = abs(coeff_sq(family, n, nu, b=b, a=a)) ** 0.5
    target_abs = max(mag * tol * 1e-2, 1e-40)
    if family in ("f1", "f2"):
        basis = half_oscillator()
        trial = TrialFunction.make(family, nu, b=b, a=a)
        dps = min(12 + _cancellation_digits(family, n, nu)
                  + int(-math.log10(target_abs)), 130)
        decay = 2.0 if family == "f1" else 1.0
        deg = nu + 2 * n + 1
        cutoff = gaussian_cutoff(10.0 ** (-dps + 6), decay=decay,
                                 poly_degree=deg, coeff_bound=1.0)

        def f(x):
            return trial.value(x) * eigenfunction(basis, n, x)

        return integrate_finite(f, 0.0, cutoff, target_abs, dps=dps,
                                max_level=15)
    if family in ("f3", "f4"):
        basis = infinite_well(a)
        trial = TrialFunction.make(family, nu, a=a)
        af = a.numerator / a.denominator
        dps = min(20 + int(-math.log10(target_abs)), 130)

        def f(x):
            return trial.value(x) * eigenfunction(basis, n, x)

        return integrate_finite(f, 0.0, af, target_abs, dps=dps, max_level=15)
    raise ValueError(f"unknown family {family!r}")


@dataclass
class CoeffSequence:
    """Coefficients |C_n|^2 for one family/parameter point, from either the
    closed forms or the quadrature oracle, with the Bessel-inequality check."""

    family: str
    nu: int
    b: Optional[Fraction] = None
    a: Fraction = Fraction(1)
    source: str = "closed_form"
    values: list = field(default_factory=list)   # (n, |C_n|^2 as float)

    def extend_to(self, n_max: int):
        start = self.values[-1][0] + 1 if self.values else \
            (1 if self.family in ("f3", "f4") else 0)
        norm_sq = None
        if self.family == "f2" and self.source == "closed_form":
            norm_sq = TrialFunction.make("f2", self.nu, b=self.b).norm_sq
        for n in range(start, n_max + 1):
            if self.source == "closed_form":
                v = coeff_sq(self.family, n, self.nu, b=self.b, a=self.a,
                             norm_sq=norm_sq)
            else:
                v = coeff_oracle(self.family, n, self.nu, b=self.b,
                                 a=self.a).value ** 2
            self.values.append((n, v))
        return self

    def partial_sums(self) -> list:
        out, s = [], 0.0
        for _, v in self.values:
            s += v
            out.append(s)
        return out

    def bessel_inequality_ok(self, slack: float = 1e-12) -> bool:
        """Monotone partial sums bounded by 1 + slack."""
        sums = self.partial_sums()
        prev = 0.0
        for s in sums:
            if s + 1e-300 < prev or s > 1.0 + slack:
                return False
            prev = s
        return True
