"""Special functions used by the series families: Hermite H_n, generalized
Laguerre L_p^q, the terminating Gauss hypergeometric 2F1(-n, a; 3/2; 1/2),
Bessel J_k and Struve H_k of integer order.

Polynomial evaluation is generic over the numeric type of the argument
(Fraction in -> Fraction out, float in -> float out, mpf in -> mpf out).
The oscillatory functions switch between an ascending power series (run at
elevated working precision to absorb cancellation) and the large-argument
Hankel-type asymptotic expansion at a single crossover point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
import numpy as np

from .exactnum import ExactScalar

__all__ = [
    "hermite",
    "laguerre",
    "hyp2f1_term",
    "hyp1f1_poly",
    "bessel_j",
    "struve_h",
    "bessel_j_npi",
    "struve_h_npi",
    "OscFuncValue",
    "evaluate_osc",
    "CROSSOVER_Z",
]

#: series/asymptotic crossover for both Bessel and Struve
CROSSOVER_Z = 40.0

#: cap on asymptotic-series terms (smallest-term rule applies first)
_ASYM_CAP = 20

_MAX_ORDER = 12
_MAX_HERMITE_N = 10_000


def _as_numeric(x):
    if isinstance(x, ExactScalar):
        if not x.is_rational:
            raise TypeError("hermite/laguerre need a rational or float "
                            "argument, not a radical-scaled scalar")
        return x.rat
    return x


def hermite(n: int, x):
    """Physicists' Hermite H_n(x) by the three-term recurrence
    H_{n+1} = 2x H_n - 2n H_{n-1}; exact when x is exact."""
    if n < 0 or n > _MAX_HERMITE_N:
        raise ValueError(f"hermite order out of range: {n}")
    x = _as_numeric(x)
    h0 = x * 0 + 1      # one in the type of x
    if n == 0:
        return h0
    h1 = 2 * x
    for k in range(1, n):
        h0, h1 = h1, 2 * x * h1 - 2 * k * h0
    return h1


def laguerre(p: int, q: int, x):
    """Generalized Laguerre L_p^q(x) = sum_k (-1)^k C(p+q, p-k) x^k / k!.

    q may be a negative integer as long as p + q >= 0 (binomials with
    k > n vanish, so the leading terms drop out)."""
    if p < 0:
        raise ValueError("laguerre degree must be >= 0")
    if p + q < 0:
        raise ValueError("laguerre requires p + q >= 0")
    x = _as_numeric(x)
    want_float = isinstance(x, float)
    total = x * 0
    for k in range(p + 1):
        c = math.comb(p + q, p - k) if p - k <= p + q else 0
        if c == 0:
            continue
        term = Fraction((-1) ** k * c, math.factorial(k))
        total = total + (float(term) if want_float else term) * x ** k
    return total


def hyp2f1_term(n: int, a_num2: int) -> ExactScalar:
    """Exact rational value of 2F1(-n, a_num2/2; 3/2; 1/2).

    The first parameter terminates the series after n + 1 terms; every
    Pochhammer ratio is rational, so the value is an exact Fraction."""
    if n < 0 or n > 2000:
        raise ValueError("hyp2f1_term supports 0 <= n <= 2000")
    a = Fraction(a_num2, 2)
    total = Fraction(1)
    t = Fraction(1)
    for k in range(n):
        t *= Fraction(-(n - k)) * (a + k) / ((Fraction(3, 2) + k) * (k + 1) * 2)
        total += t
    return ExactScalar(total)


def hyp1f1_poly(n: int, x):
    """Terminating Kummer function 1F1(-n; 3/2; x) (a degree-n polynomial)."""
    x = _as_numeric(x)
    want_float = isinstance(x, float)
    total = x * 0 + 1
    t = total
    for k in range(n):
        coeff = Fraction(-(n - k), 1) / ((Fraction(3, 2) + k) * (k + 1))
        t = t * (float(coeff) if want_float else coeff) * x
        total = total + t
    return total


# ---------------------------------------------------------------------------
# oscillatory functions: Bessel J_k and Struve H_k
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OscFuncValue:
    """An evaluated Bessel/Struve value tagged with the regime that
    produced it (regime == 'series' iff argument < crossover)."""
    kind: str            # 'bessel_j' | 'struve_h'
    order: int
    argument: float
    value: float
    regime: str          # 'series' | 'asymptotic'


def _check_order_arg(k: int, z: float):
    if not isinstance(k, int) or k < 0 or k > _MAX_ORDER:
        raise ValueError(f"order must be an integer in 0..{_MAX_ORDER}")
    if not math.isfinite(z):
        raise ValueError("argument must be finite")
    if z < 0:
        raise ValueError("argument must be >= 0")


def _series_dps(z: float) -> int:
    # cancellation in the ascending series loses ~ 0.46 z decimal digits
    return 25 + int(0.46 * z)


def _bessel_j_series(k: int, z: float) -> float:
    """Ascending series sum_m (-1)^m (z/2)^(k+2m) / (m! (k+m)!), run at
    elevated precision to absorb the alternating-term cancellation."""
    if z == 0.0:
        return 1.0 if k == 0 else 0.0
    with mp.workdps(_series_dps(z)):
        zh = mp.mpf(z) / 2
        zh2 = zh * zh
        t = zh ** k / mp.factorial(k)
        total = t
        m = 0
        eps = mp.mpf(10) ** (-(mp.mp.dps - 3))
        while True:
            m += 1
            t = -t * zh2 / (m * (k + m))
            total += t
            if abs(t) < eps * (abs(total) + 1) and m > k:
                break
            if m > 5000:
                raise RuntimeError("bessel series failed to terminate")
        return float(total)


def _struve_h_series(k: int, z: float) -> float:
    """Power series sum_m (-1)^m (z/2)^(2m+k+1) / (G(m+3/2) G(m+k+3/2))."""
    if z == 0.0:
        return 0.0
    with mp.workdps(_series_dps(z)):
        zh = mp.mpf(z) / 2
        zh2 = zh * zh
        t = zh ** (k + 1) / (mp.gamma(mp.mpf(3) / 2) * mp.gamma(k + mp.mpf(3) / 2))
        total = t
        m = 0
        eps = mp.mpf(10) ** (-(mp.mp.dps - 3))
        while True:
            m += 1
            t = -t * zh2 / ((m + mp.mpf(1) / 2) * (m + k + mp.mpf(1) / 2))
            total += t
            if abs(t) < eps * (abs(total) + 1) and m > k:
                break
            if m > 5000:
                raise RuntimeError("struve series failed to terminate")
        return float(total)


def _hankel_pq(k: int, z: float):
    """P, Q of J_k(z) ~ sqrt(2/(pi z)) [P cos w - Q sin w].

    Smallest-term truncation capped at _ASYM_CAP terms; the first few terms
    may grow for large k, so truncation waits until decay has started."""
    mu = 4.0 * k * k
    t = 1.0
    p, q = 1.0, 0.0
    prev = 1.0
    decreasing = False
    for j in range(1, _ASYM_CAP + 1):
        t *= (mu - (2 * j - 1) ** 2) / (8.0 * z * j)
        at = abs(t)
        if decreasing and at > prev:
            break
        if at < prev:
            decreasing = True
        prev = at
        m, r = divmod(j, 2)
        contrib = t if m % 2 == 0 else -t
        if r == 0:
            p += contrib
        else:
            q += contrib
    return p, q


# three-part split of 2*pi for Cody-Waite style argument reduction;
# the high parts carry ~30 significant bits so n * part stays exact
# for n < 2^22 (covers z <= pi * 10^6 with lots of room)
_TWO_PI_HI = float.fromhex("0x1.921fb544p+2")
_TWO_PI_MI = float.fromhex("0x1.0b4611a6p-32")
_TWO_PI_LO = float(2 * mp.mpf(mp.pi) - mp.mpf(_TWO_PI_HI) - mp.mpf(_TWO_PI_MI))
_INV_2PI = float(1 / (2 * mp.mpf(mp.pi)))


def _reduce_2pi(z: float) -> float:
    """z mod 2*pi, in [-pi, pi], accurate for z up to ~1e7."""
    m = round(z * _INV_2PI)
    r = z - m * _TWO_PI_HI
    r -= m * _TWO_PI_MI
    r -= m * _TWO_PI_LO
    return r


def _bessel_j_asym(k: int, z: float) -> float:
    p, q = _hankel_pq(k, z)
    w = _reduce_2pi(z) - (2 * k + 1) * math.pi / 4.0
    return math.sqrt(2.0 / (math.pi * z)) * (p * math.cos(w) - q * math.sin(w))


def _bessel_y_asym(k: int, z: float) -> float:
    p, q = _hankel_pq(k, z)
    w = _reduce_2pi(z) - (2 * k + 1) * math.pi / 4.0
    return math.sqrt(2.0 / (math.pi * z)) * (p * math.sin(w) + q * math.cos(w))


def _struve_corr(k: int, z: float) -> float:
    """(1/pi) sum_j Gamma(j+1/2) (z/2)^(k-2j-1) / Gamma(k+1/2-j), the
    algebraic part of H_k - Y_k for large z."""
    zh2 = (z / 2.0) ** 2
    t = math.gamma(0.5) * (z / 2.0) ** (k - 1) / math.gamma(k + 0.5)
    s = t
    prev = abs(t)
    decreasing = False
    for j in range(1, _ASYM_CAP + 1):
        t *= (j - 0.5) * (k + 0.5 - j) / zh2
        at = abs(t)
        if decreasing and at > prev:
            break
        if at < prev:
            decreasing = True
        prev = at
        s += t
    return s / math.pi


def _struve_h_asym(k: int, z: float) -> float:
    return _bessel_y_asym(k, z) + _struve_corr(k, z)


def bessel_j(k: int, z: float, force_regime: str | None = None) -> float:
    """Bessel function of the first kind J_k(z) for integer k <= 12,
    z in [0, pi*1e6]."""
    _check_order_arg(k, z)
    regime = force_regime or ("series" if z < CROSSOVER_Z else "asymptotic")
    if regime == "series":
        return _bessel_j_series(k, z)
    return _bessel_j_asym(k, z)


def struve_h(k: int, z: float, force_regime: str | None = None) -> float:
    """Struve function H_k(z) for integer k <= 12, z >= 0."""
    _check_order_arg(k, z)
    regime = force_regime or ("series" if z < CROSSOVER_Z else "asymptotic")
    if regime == "series":
        return _struve_h_series(k, z)
    return _struve_h_asym(k, z)


def evaluate_osc(kind: str, k: int, z: float,
                 force_regime: str | None = None) -> OscFuncValue:
    fn = {"bessel_j": bessel_j, "struve_h": struve_h}[kind]
    regime = force_regime or ("series" if z < CROSSOVER_Z else "asymptotic")
    return OscFuncValue(kind, k, float(z), fn(k, z, force_regime), regime)


# ---------------------------------------------------------------------------
# fast paths at z = n*pi: the phase n*pi - (2k+1)pi/4 is known exactly
# modulo 2*pi, which removes all argument-reduction error for huge n
# ---------------------------------------------------------------------------

_SQRT_HALF = math.sqrt(0.5)


def _phase_cs(k: int):
    """cos and sin of (2k+1) pi/4 (each is +-sqrt(1/2))."""
    q = (2 * k + 1) % 8
    c = {1: 1.0, 3: -1.0, 5: -1.0, 7: 1.0}[q] * _SQRT_HALF
    s = {1: 1.0, 3: 1.0, 5: -1.0, 7: -1.0}[q] * _SQRT_HALF
    return c, s


def bessel_j_npi(k: int, n: int) -> float:
    """J_k(n*pi) with exact phase handling; series branch below crossover."""
    z = n * math.pi
    _check_order_arg(k, z)
    if z < CROSSOVER_Z:
        return _bessel_j_series(k, z)
    p, q = _hankel_pq(k, z)
    c, s = _phase_cs(k)
    sgn = 1.0 if n % 2 == 0 else -1.0
    # cos(n pi - phi) = (-1)^n cos(phi), sin(n pi - phi) = -(-1)^n sin(phi)
    return math.sqrt(2.0 / (math.pi * z)) * sgn * (p * c + q * s)


def struve_h_npi(k: int, n: int) -> float:
    """H_k(n*pi) with exact phase handling."""
    z = n * math.pi
    _check_order_arg(k, z)
    if z < CROSSOVER_Z:
        return _struve_h_series(k, z)
    p, q = _hankel_pq(k, z)
    c, s = _phase_cs(k)
    sgn = 1.0 if n % 2 == 0 else -1.0
    y = math.sqrt(2.0 / (math.pi * z)) * sgn * (q * c - p * s)
    return y + _struve_corr(k, z)


# vectorized block evaluation for the large-n summation loops; valid for
# n*pi >= CROSSOVER_Z where the capped 20-term expansion decays throughout

def _hankel_pq_vec(k: int, z: np.ndarray):
    mu = 4.0 * k * k
    t = np.ones_like(z)
    p = np.ones_like(z)
    q = np.zeros_like(z)
    for j in range(1, _ASYM_CAP + 1):
        t = t * ((mu - (2 * j - 1) ** 2) / (8.0 * j)) / z
        m, r = divmod(j, 2)
        contrib = t if m % 2 == 0 else -t
        if r == 0:
            p = p + contrib
        else:
            q = q + contrib
    return p, q


def bessel_j_npi_block(k: int, n: np.ndarray) -> np.ndarray:
    """J_k(n*pi) elementwise over an integer array with min(n)*pi >= crossover."""
    z = n * math.pi
    p, q = _hankel_pq_vec(k, z)
    c, s = _phase_cs(k)
    sgn = np.where(n % 2 == 0, 1.0, -1.0)
    return np.sqrt(2.0 / (math.pi * z)) * sgn * (p * c + q * s)


def struve_h_npi_block(k: int, n: np.ndarray) -> np.ndarray:
    """H_k(n*pi) elementwise, same domain restriction as bessel_j_npi_block."""
    z = n * math.pi
    p, q = _hankel_pq_vec(k, z)
    c, s = _phase_cs(k)
    sgn = np.where(n % 2 == 0, 1.0, -1.0)
    y = np.sqrt(2.0 / (math.pi * z)) * sgn * (q * c - p * s)
    zh2 = (z / 2.0) ** 2
    t = np.full_like(z, math.gamma(0.5) / math.gamma(k + 0.5)) * (z / 2.0) ** (k - 1)
    corr = t.copy()
    for j in range(1, _ASYM_CAP + 1):
        t = t * ((j - 0.5) * (k + 0.5 - j)) / zh2
        corr = corr + t
    return y + corr / math.pi
