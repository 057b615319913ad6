"""Exact arithmetic substrate: big rationals optionally scaled by powers of
sqrt(pi) and sqrt(3), half-integer gamma values, and the two structured
closed-form value types used to hold table constants.

All values are immutable after construction and safe to share between
threads.  High-precision rendering goes through mpmath; pi and sqrt(3) are
cached per working precision.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath as mp

__all__ = [
    "ExactScalar",
    "ClosedFormConstant",
    "ExpPolyForm",
    "gamma_half",
    "double_factorial",
    "render",
    "default_precision",
]

#: decimal digits corresponding to the default 256-bit working mantissa
_DEFAULT_DPS = 77


def default_precision() -> int:
    """Rendering precision in decimal digits (>= 16).

    Resolution order: SFSERIES_PRECISION environment variable, then the
    built-in default (256-bit mantissa, ~77 digits).
    """
    raw = os.environ.get("SFSERIES_PRECISION")
    if raw is not None:
        prec = int(raw)
        if prec < 16:
            raise ValueError("precision must be >= 16 decimal digits")
        return prec
    return _DEFAULT_DPS


# per-precision caches for the two irrational constants (write once, read many)
_PI_CACHE: dict[int, mp.mpf] = {}
_SQRT3_CACHE: dict[int, mp.mpf] = {}


def _pi(dps: int) -> mp.mpf:
    val = _PI_CACHE.get(dps)
    if val is None:
        with mp.workdps(dps):
            val = +mp.pi
        _PI_CACHE[dps] = val
    return val


def _sqrt3(dps: int) -> mp.mpf:
    val = _SQRT3_CACHE.get(dps)
    if val is None:
        with mp.workdps(dps):
            val = mp.sqrt(3)
        _SQRT3_CACHE[dps] = val
    return val


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, ExactScalar):
        if x.sqrt_pi_power != 0 or x.sqrt3_power != 0:
            raise ValueError("value carries radicals, not a plain rational")
        return x.rat
    raise TypeError(f"cannot interpret {type(x).__name__} as an exact rational")


class ExactScalar:
    """Arbitrary-precision rational scaled by sqrt(pi)^s * sqrt(3)^q.

    Addition and comparison are only defined between values with matching
    radical powers; multiplication and division combine them.  The rational
    part is kept reduced with a positive denominator (Fraction invariant).
    """

    __slots__ = ("rat", "sqrt_pi_power", "sqrt3_power")

    def __init__(self, value=0, den=None, *, sqrt_pi_power: int = 0,
                 sqrt3_power: int = 0):
        if den is not None:
            rat = Fraction(value, den)
        elif isinstance(value, ExactScalar):
            rat = value.rat
            sqrt_pi_power += value.sqrt_pi_power
            sqrt3_power += value.sqrt3_power
        else:
            rat = Fraction(value)
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "sqrt_pi_power", int(sqrt_pi_power))
        object.__setattr__(self, "sqrt3_power", int(sqrt3_power))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    # -- field accessors per the num/den contract -------------------------
    @property
    def num(self) -> int:
        return self.rat.numerator

    @property
    def den(self) -> int:
        return self.rat.denominator

    @property
    def is_rational(self) -> bool:
        return self.sqrt_pi_power == 0 and self.sqrt3_power == 0

    def _coerce(self, other) -> Optional["ExactScalar"]:
        if isinstance(other, ExactScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar(other)
        return None

    def _require_same_radicals(self, other: "ExactScalar", op: str):
        if (self.sqrt_pi_power != other.sqrt_pi_power
                or self.sqrt3_power != other.sqrt3_power):
            raise ValueError(
                f"{op} undefined for mismatched radical powers "
                f"(sqrt_pi {self.sqrt_pi_power} vs {other.sqrt_pi_power}, "
                f"sqrt3 {self.sqrt3_power} vs {other.sqrt3_power})")

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.rat == 0:
            return o
        if o.rat == 0:
            return self
        self._require_same_radicals(o, "addition")
        return ExactScalar(self.rat + o.rat, sqrt_pi_power=self.sqrt_pi_power,
                           sqrt3_power=self.sqrt3_power)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.rat, sqrt_pi_power=self.sqrt_pi_power,
                           sqrt3_power=self.sqrt3_power)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(self.rat * o.rat,
                           sqrt_pi_power=self.sqrt_pi_power + o.sqrt_pi_power,
                           sqrt3_power=self.sqrt3_power + o.sqrt3_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.rat == 0:
            raise ZeroDivisionError("division by exact zero")
        return ExactScalar(self.rat / o.rat,
                           sqrt_pi_power=self.sqrt_pi_power - o.sqrt_pi_power,
                           sqrt3_power=self.sqrt3_power - o.sqrt3_power)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ExactScalar(1) / (self ** (-k))
        return ExactScalar(self.rat ** k,
                           sqrt_pi_power=self.sqrt_pi_power * k,
                           sqrt3_power=self.sqrt3_power * k)

    def __abs__(self):
        return ExactScalar(abs(self.rat), sqrt_pi_power=self.sqrt_pi_power,
                           sqrt3_power=self.sqrt3_power)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.rat == 0 and o.rat == 0:
            return True
        return (self.rat == o.rat
                and self.sqrt_pi_power == o.sqrt_pi_power
                and self.sqrt3_power == o.sqrt3_power)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._require_same_radicals(o, "comparison")
        return self.rat < o.rat

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._require_same_radicals(o, "comparison")
        return self.rat <= o.rat

    def __hash__(self):
        if self.rat == 0:
            return hash(0)
        return hash((self.rat, self.sqrt_pi_power, self.sqrt3_power))

    def __bool__(self):
        return self.rat != 0

    def hp(self, dps: Optional[int] = None) -> mp.mpf:
        """Value as an mpmath float at `dps` decimal digits."""
        dps = default_precision() if dps is None else dps
        with mp.workdps(dps + 10):
            val = mp.mpf(self.rat.numerator) / self.rat.denominator
            if self.sqrt_pi_power:
                # the cache holds pi itself, so sqrt(pi)^s = pi^(s/2)
                val *= _pi(dps + 10) ** (mp.mpf(self.sqrt_pi_power) / 2)
            if self.sqrt3_power:
                # the cache holds sqrt(3) already
                val *= _sqrt3(dps + 10) ** self.sqrt3_power
        with mp.workdps(dps):
            return +val

    def __float__(self) -> float:
        if self.is_rational:
            return self.rat.numerator / self.rat.denominator
        return float(self.hp(30))

    def __repr__(self):
        s = f"{self.rat}"
        if self.sqrt_pi_power:
            s += f"*sqrt(pi)^{self.sqrt_pi_power}"
        if self.sqrt3_power:
            s += f"*sqrt(3)^{self.sqrt3_power}"
        return f"ExactScalar({s})"


def double_factorial(n: int) -> int:
    """n!! for n >= -1 (with (-1)!! = 0!! = 1)."""
    if n < -1:
        raise ValueError("double factorial needs n >= -1")
    out = 1
    for k in range(n, 1, -2):
        out *= k
    return out


def gamma_half(two_x: int) -> ExactScalar:
    """Gamma(two_x / 2) exactly, for positive integer two_x.

    Even arguments give plain factorials; odd arguments carry one power of
    sqrt(pi):  Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi).
    """
    if two_x < 1:
        raise ValueError("gamma_half requires two_x >= 1")
    if two_x % 2 == 0:
        return ExactScalar(math.factorial(two_x // 2 - 1))
    m = (two_x - 1) // 2
    rat = Fraction(math.factorial(2 * m), 4 ** m * math.factorial(m))
    return ExactScalar(rat, sqrt_pi_power=1)


_CFC_TOKEN = re.compile(
    r"^\s*(?P<rat>-?\d+(?:/\d+)?)"
    r"(?:\s*\*\s*pi\^(?P<pi>-?\d+))?"
    r"(?:\s*\*\s*sqrt3\^(?P<s3>-?\d+))?\s*$")


@dataclass(frozen=True)
class ClosedFormConstant:
    """Value of shape (rational) * pi^p * 3^(q/2).

    Normal form: integer powers of 3 are folded into the coefficient so
    that sqrt3_power is 0 or -1; structural equality on the normal form is
    exact table-entry comparison.
    """

    coeff: Fraction
    pi_power: int = 0
    sqrt3_power: int = 0

    def __post_init__(self):
        coeff, q = self.coeff, self.sqrt3_power
        if coeff == 0:
            q = 0
        else:
            # fold 3^(q//2); map odd remainder to the {0, -1} window
            k, r = divmod(q, 2)
            if r == 1:
                k += 1
                r = -1
            coeff = coeff * Fraction(3) ** k
            q = r
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "sqrt3_power", q)
        object.__setattr__(self, "pi_power", int(self.pi_power))

    @classmethod
    def from_exact(cls, value: Union[ExactScalar, Fraction, int],
                   pi_power: int = 0, sqrt3_power: int = 0) -> "ClosedFormConstant":
        """Build from an ExactScalar; its sqrt(pi) power must be even."""
        if isinstance(value, ExactScalar):
            if value.sqrt_pi_power % 2 != 0:
                raise ValueError("odd sqrt(pi) power cannot enter a "
                                 "ClosedFormConstant")
            return cls(value.rat, pi_power + value.sqrt_pi_power // 2,
                       sqrt3_power + value.sqrt3_power)
        return cls(Fraction(value), pi_power, sqrt3_power)

    def inverse(self) -> "ClosedFormConstant":
        if self.coeff == 0:
            raise ZeroDivisionError("inverse of exact zero")
        return ClosedFormConstant(1 / self.coeff, -self.pi_power,
                                  -self.sqrt3_power)

    def __mul__(self, other):
        if isinstance(other, ClosedFormConstant):
            return ClosedFormConstant(self.coeff * other.coeff,
                                      self.pi_power + other.pi_power,
                                      self.sqrt3_power + other.sqrt3_power)
        if isinstance(other, (int, Fraction)):
            return ClosedFormConstant(self.coeff * other, self.pi_power,
                                      self.sqrt3_power)
        return NotImplemented

    __rmul__ = __mul__

    def hp(self, dps: Optional[int] = None) -> mp.mpf:
        dps = default_precision() if dps is None else dps
        with mp.workdps(dps + 10):
            val = mp.mpf(self.coeff.numerator) / self.coeff.denominator
            if self.pi_power:
                val *= _pi(dps + 10) ** self.pi_power
            if self.sqrt3_power:
                val *= _sqrt3(dps + 10) ** self.sqrt3_power
        with mp.workdps(dps):
            return +val

    def __float__(self) -> float:
        return float(self.hp(30))

    def to_string(self) -> str:
        """Serialize in the data-file grammar `rational [* pi^p] [* sqrt3^q]`."""
        s = str(self.coeff)
        if self.pi_power:
            s += f" * pi^{self.pi_power}"
        if self.sqrt3_power:
            s += f" * sqrt3^{self.sqrt3_power}"
        return s

    @classmethod
    def parse(cls, text: str) -> "ClosedFormConstant":
        m = _CFC_TOKEN.match(text)
        if not m:
            raise ValueError(f"not a closed-form constant: {text!r}")
        return cls(Fraction(m.group("rat")),
                   int(m.group("pi") or 0),
                   int(m.group("s3") or 0))

    def __repr__(self):
        return f"ClosedFormConstant({self.to_string()})"


@dataclass(frozen=True)
class ExpPolyForm:
    """Value of shape scale * e^(-y/2) * (A(y) + B(y) e^y) with Laurent
    polynomials A, B over the rationals; holds the Table-4 right-hand sides
    with y = b^2.

    Negative exponents are allowed as long as they cancel in the y -> 0+
    limit (checked on construction), so rendering at y = 0 takes the finite
    limit instead of dividing by zero.
    """

    scale: Fraction
    a_poly: dict
    b_poly: dict

    def __post_init__(self):
        a = {int(k): Fraction(v) for k, v in self.a_poly.items() if Fraction(v)}
        b = {int(k): Fraction(v) for k, v in self.b_poly.items() if Fraction(v)}
        if not a and not b:
            raise ValueError("ExpPolyForm needs a nonempty A or B polynomial")
        object.__setattr__(self, "scale", Fraction(self.scale))
        object.__setattr__(self, "a_poly", a)
        object.__setattr__(self, "b_poly", b)
        self.limit_at_zero()  # must exist

    def limit_at_zero(self) -> Fraction:
        """Exact y -> 0+ limit of A(y) + B(y) e^y; raises if divergent.

        The Laurent coefficient of y^k in B(y) e^y is sum_j b_j / (k-j)!;
        all strictly negative k must cancel against A.
        """
        lo = min([0] + list(self.a_poly) + list(self.b_poly))
        for k in range(lo, 0):
            c = self.a_poly.get(k, Fraction(0))
            for j, bj in self.b_poly.items():
                if j <= k:
                    c += bj / math.factorial(k - j)
            if c != 0:
                raise ValueError(f"divergent y->0 limit (residual at y^{k})")
        const = self.a_poly.get(0, Fraction(0))
        for j, bj in self.b_poly.items():
            if j <= 0:
                const += bj / math.factorial(-j)
        return self.scale * const

    def hp(self, y, dps: Optional[int] = None) -> mp.mpf:
        """Evaluate at y >= 0 (rational or float) at `dps` digits."""
        dps = default_precision() if dps is None else dps
        yfrac = Fraction(y) if not isinstance(y, float) else None
        if (yfrac == 0) or (yfrac is None and y == 0.0):
            lim = self.limit_at_zero()
            with mp.workdps(dps):
                return mp.mpf(lim.numerator) / lim.denominator
        with mp.workdps(dps + 10):
            yv = (mp.mpf(yfrac.numerator) / yfrac.denominator
                  if yfrac is not None else mp.mpf(y))
            if yv < 0:
                raise ValueError("ExpPolyForm argument must be >= 0")
            av = mp.mpf(0)
            for k, c in sorted(self.a_poly.items()):
                av += mp.mpf(c.numerator) / c.denominator * yv ** k
            bv = mp.mpf(0)
            for k, c in sorted(self.b_poly.items()):
                bv += mp.mpf(c.numerator) / c.denominator * yv ** k
            val = (mp.mpf(self.scale.numerator) / self.scale.denominator
                   * mp.e ** (-yv / 2) * (av + bv * mp.e ** yv))
        with mp.workdps(dps):
            return +val

    def to_string(self) -> str:
        def poly(p):
            if not p:
                return "0"
            return " + ".join(f"{c}*y^{k}" for k, c in sorted(p.items()))
        return (f"{self.scale} * exp(-y/2) * (({poly(self.a_poly)}) + "
                f"({poly(self.b_poly)})*exp(y))")

    def to_record(self) -> dict:
        return {
            "scale": str(self.scale),
            "a": {str(k): str(v) for k, v in sorted(self.a_poly.items())},
            "b": {str(k): str(v) for k, v in sorted(self.b_poly.items())},
        }

    @classmethod
    def from_record(cls, rec: dict) -> "ExpPolyForm":
        return cls(Fraction(rec["scale"]),
                   {int(k): Fraction(v) for k, v in rec.get("a", {}).items()},
                   {int(k): Fraction(v) for k, v in rec.get("b", {}).items()})


def render(value, y=None, precision: Optional[int] = None) -> mp.mpf:
    """High-precision float rendering of any exact value type.

    `precision` is in decimal digits (>= 16); ExpPolyForm requires `y`.
    """
    if precision is not None and precision < 16:
        raise ValueError("precision must be >= 16 decimal digits")
    if isinstance(value, ExpPolyForm):
        if y is None:
            raise ValueError("ExpPolyForm rendering requires y")
        return value.hp(y, precision)
    if isinstance(value, (ExactScalar, ClosedFormConstant)):
        return value.hp(precision)
    if isinstance(value, (int, Fraction)):
        return ExactScalar(value).hp(precision)
    raise TypeError(f"cannot render {type(value).__name__}")
