"""The two 1-D quantum models (half harmonic oscillator with unit width
parameter, infinite square well) and the four trial-function families whose
eigenbasis expansions generate the series identities.

Eigenfunctions evaluate stably through the normalized Hermite-function
recurrence, so high indices never overflow.  Normalization constants are
exact wherever a closed form exists (families 1, 3, 4, and family 2 for
nu in {0, 1}); the general family-2 constant is defined by quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath as mp

from .exactnum import ExactScalar, gamma_half
from .quadrature import QuadResult, integrate_finite, integrate_gaussian_tail
from .specfun import hermite

__all__ = [
    "Eigenbasis",
    "half_oscillator",
    "infinite_well",
    "eigenfunction",
    "TrialFunction",
    "normalization_sq",
    "F2NormSq",
]


@dataclass(frozen=True)
class Eigenbasis:
    kind: str                      # 'half_oscillator' | 'infinite_well'
    a: Fraction = Fraction(1)      # well width (unused for the oscillator)

    def __post_init__(self):
        if self.kind not in ("half_oscillator", "infinite_well"):
            raise ValueError(f"unknown eigenbasis kind {self.kind!r}")
        if self.a <= 0:
            raise ValueError("well width must be positive")


def half_oscillator() -> Eigenbasis:
    return Eigenbasis("half_oscillator")


def infinite_well(a=1) -> Eigenbasis:
    return Eigenbasis("infinite_well", Fraction(a))


def _hermite_fn_norm(k: int, x):
    """Orthonormal Hermite function H_k(x) e^(-x^2/2) / sqrt(2^k k! sqrt(pi)),
    via the stable normalized recurrence.

    The recurrence coefficients are formed at working precision, not in
    double, so mpf evaluation keeps full accuracy."""
    is_mpf = isinstance(x, mp.mpf)
    if is_mpf:
        pi_q = mp.pi ** (-mp.mpf(1) / 4)
        ex = mp.exp(-x * x / 2)
        h0 = pi_q * ex
        if k == 0:
            return h0
        h1 = mp.sqrt(2) * x * h0
        for j in range(1, k):
            h0, h1 = h1, (mp.sqrt(mp.mpf(2) / (j + 1)) * x * h1
                          - mp.sqrt(mp.mpf(j) / (j + 1)) * h0)
        return h1
    h0 = math.pi ** -0.25 * math.exp(-x * x / 2)
    if k == 0:
        return h0
    h1 = math.sqrt(2) * x * h0
    for j in range(1, k):
        h0, h1 = h1, (math.sqrt(2 / (j + 1.0)) * x * h1
                      - math.sqrt(j / (j + 1.0)) * h0)
    return h1


def eigenfunction(basis: Eigenbasis, n: int, x):
    """Normalized eigenstate value at x.

    Oscillator: psi_n(x) = H_{2n+1}(x) e^(-x^2/2) / sqrt(2^(2n) (2n+1)! sqrt(pi)),
    n >= 0, on x > 0.  Well: phi_n(x) = sqrt(2/a) sin(n pi x / a), n >= 1,
    on 0 < x < a.  Accepts float or mpf x.
    """
    if basis.kind == "half_oscillator":
        if n < 0:
            raise ValueError("oscillator index must be >= 0")
        if x <= 0:
            raise ValueError("oscillator domain is x > 0")
        # psi_n = sqrt(2) * (orthonormal Hermite function of index 2n+1)
        root2 = mp.sqrt(2) if isinstance(x, mp.mpf) else math.sqrt(2)
        return root2 * _hermite_fn_norm(2 * n + 1, x)
    if n < 1:
        raise ValueError("well index must be >= 1")
    a = basis.a
    if isinstance(x, mp.mpf):
        af = mp.mpf(a.numerator) / a.denominator
        if not 0 < x < af:
            raise ValueError("well domain is 0 < x < a")
        return mp.sqrt(2 / af) * mp.sin(n * mp.pi * x / af)
    af = a.numerator / a.denominator
    if not 0 < x < af:
        raise ValueError("well domain is 0 < x < a")
    return math.sqrt(2 / af) * math.sin(n * math.pi * x / af)


class F2NormSq:
    """Exact squared normalization for family 2 at nu in {0, 1}; the value
    involves e^(b^2) so it lives outside the rational containers.

    1/N^2 = (sqrt(pi)/4) (1 - e^(-b^2))            for nu = 0
    1/N^2 = (sqrt(pi)/4) (1 + e^(-b^2)(1 - 2 b^2)) for nu = 1
    """

    def __init__(self, nu: int, b: Fraction):
        if nu not in (0, 1):
            raise ValueError("closed-form family-2 norm only for nu in {0,1}")
        self.nu = nu
        self.b = Fraction(b)

    def inv_hp(self, dps: int = 40) -> mp.mpf:
        with mp.workdps(dps):
            b2 = mp.mpf((self.b * self.b).numerator) / (self.b * self.b).denominator
            if self.nu == 0:
                return mp.sqrt(mp.pi) / 4 * (1 - mp.e ** (-b2))
            return mp.sqrt(mp.pi) / 4 * (1 + mp.e ** (-b2) * (1 - 2 * b2))

    def hp(self, dps: int = 40) -> mp.mpf:
        with mp.workdps(dps):
            return 1 / self.inv_hp(dps)

    def __float__(self) -> float:
        return float(self.hp())


def _f2_unnormalized_sq(nu: int, b: Fraction):
    """e^(-x^2) H_nu(x)^2 trig(b x)^2 integrand (mpf), trig by parity rule."""
    bf = mp.mpf(b.numerator) / b.denominator

    def f(x):
        h = hermite(nu, x)
        tr = mp.sin(bf * x) if nu % 2 == 0 else mp.cos(bf * x)
        return mp.e ** (-x * x) * h * h * tr * tr

    return f


def normalization_sq(family: str, nu: int, b=None, a=1
                     ) -> Union[ExactScalar, F2NormSq, QuadResult]:
    """Squared normalization constant of a trial function.

    f1: A^2 = 2 * 3^(nu+1/2) / Gamma(nu+1/2)                      (exact)
    f2: closed form for nu in {0,1}; quadrature (tol 1e-12) for nu >= 2
    f3: B^2 = 2 Gamma(2nu+3/2) / (a^(4nu+1) Gamma(3/2) Gamma(2nu)) (exact)
    f4: C^2 = 2 / (a^(4nu-1) Beta(1/2, 2nu))                       (exact)
    """
    if family == "f1":
        if nu < 0:
            raise ValueError("f1 needs nu >= 0")
        return (ExactScalar(2 * 3 ** nu, sqrt3_power=1)
                / gamma_half(2 * nu + 1))
    if family == "f2":
        if nu < 0 or b is None or b <= 0:
            raise ValueError("f2 needs nu >= 0 and b > 0")
        b = Fraction(b)
        if nu in (0, 1):
            return F2NormSq(nu, b)
        # quadrature-defined source of truth for the general constant
        deg = 2 * nu
        bound = 4.0 ** nu * math.factorial(nu)  # crude Hermite coeff bound
        res = integrate_gaussian_tail(_f2_unnormalized_sq(nu, b), 1e-12,
                                      decay=1.0, poly_degree=deg,
                                      coeff_bound=bound, dps=35)
        return QuadResult(1.0 / res.value, res.error_estimate,
                          res.evaluations, 1 / res.hp_value)
    a = Fraction(a)
    if a <= 0:
        raise ValueError("well width must be positive")
    if family == "f3":
        if nu < 1:
            raise ValueError("f3 needs nu >= 1")
        num = ExactScalar(2) * gamma_half(4 * nu + 3)
        den = (ExactScalar(a) ** (4 * nu + 1) * gamma_half(3)
               * gamma_half(4 * nu))
        return num / den
    if family == "f4":
        if nu < 1:
            raise ValueError("f4 needs nu >= 1")
        # Beta(1/2, 2nu) = Gamma(1/2) Gamma(2nu) / Gamma(2nu + 1/2)
        beta = gamma_half(1) * gamma_half(4 * nu) / gamma_half(4 * nu + 1)
        return ExactScalar(2) / (ExactScalar(a) ** (4 * nu - 1) * beta)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class TrialFunction:
    """One member of the four families, with its exact (or quadrature-pinned)
    squared norm.  `regular` is False for the discontinuous cases (family 1
    at nu = 0 and all of family 4)."""

    family: str
    nu: int
    b: Optional[Fraction] = None
    a: Fraction = Fraction(1)
    norm_sq: object = None
    regular: bool = True

    @classmethod
    def make(cls, family: str, nu: int, b=None, a=1) -> "TrialFunction":
        b = Fraction(b) if b is not None else None
        a = Fraction(a)
        nsq = normalization_sq(family, nu, b=b, a=a)
        regular = not (family == "f4" or (family == "f1" and nu == 0))
        return cls(family, nu, b, a, nsq, regular)

    def _norm(self, hp: bool):
        if isinstance(self.norm_sq, ExactScalar):
            v = self.norm_sq.hp(40)
        elif isinstance(self.norm_sq, F2NormSq):
            v = self.norm_sq.hp(40)
        else:
            v = self.norm_sq.hp_value
        v = mp.sqrt(v)
        return v if hp else float(v)

    def value(self, x):
        """Trial-function value at x (float or mpf; mpf keeps precision)."""
        is_mpf = isinstance(x, mp.mpf)
        norm = self._norm(is_mpf)
        exp = mp.exp if is_mpf else math.exp
        if self.family == "f1":
            if x < 0:
                raise ValueError("domain is x >= 0")
            return norm * exp(-3 * x * x / 2) * x ** self.nu
        if self.family == "f2":
            if x < 0:
                raise ValueError("domain is x >= 0")
            bf = (mp.mpf(self.b.numerator) / self.b.denominator if is_mpf
                  else self.b.numerator / self.b.denominator)
            trig = (mp.sin if is_mpf else math.sin) if self.nu % 2 == 0 \
                else (mp.cos if is_mpf else math.cos)
            return norm * exp(-x * x / 2) * hermite(self.nu, x) * trig(bf * x)
        af = (mp.mpf(self.a.numerator) / self.a.denominator if is_mpf
              else self.a.numerator / self.a.denominator)
        if not 0 <= x <= af:
            raise ValueError("domain is 0 <= x <= a")
        alg = (af * af - x * x) ** (self.nu - 0.5) if not is_mpf \
            else (af * af - x * x) ** (mp.mpf(self.nu) - mp.mpf("0.5"))
        if self.family == "f3":
            return norm * x * alg
        return norm * alg

    def boundary_value(self) -> float:
        """Value at the discontinuity point x = 0 (nonzero iff not regular)."""
        if self.family == "f1":
            return self.value(0.0)
        if self.family == "f4":
            return self.value(0.0)
        return 0.0

    def norm_check(self, tol: float = 1e-10) -> QuadResult:
        """Quadrature of |psi|^2 over the domain (should be 1)."""
        if self.family in ("f1", "f2"):
            decay = 3.0 if self.family == "f1" else 1.0
            deg = 2 * self.nu
            bound = max(float(self._norm(False)) ** 2, 1.0) * 4.0 ** self.nu \
                * math.factorial(self.nu)
            return integrate_gaussian_tail(
                lambda x: self.value(x) ** 2, tol, decay=decay,
                poly_degree=deg, coeff_bound=bound, dps=35)
        af = self.a.numerator / self.a.denominator
        return integrate_finite(lambda x: self.value(x) ** 2, 0.0, af,
                                tol, dps=35)
