"""Summation engine for the four term streams: per-family stopping policy,
exact-rational and compensated-float modes, and analytic tail estimation
for the slowly converging families.

Convergence behaviour differs sharply by family:

* family 1, odd nu: terms decay geometrically (ratio -> 1/4), a
  consecutive-small-terms stop suffices;
* family 1, even nu: terms decay like n^(-nu - 3/2) only, so the engine
  sums a fixed number of exact terms and eliminates the power-law tail
  N^(-nu-1/2) (d0 + d1/N + ...) through exact partial-sum samples;
* family 2: factorial decay, geometric stop;
* families 3/4: power-law tails with known leading asymptotics, handled by
  a fixed term count plus an analytic tail correction.

Float summation uses the Neumaier two-term error-free transformation in
strictly increasing index order, so totals are deterministic across runs
regardless of how term blocks were produced.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

import mpmath as mp

from .coeffs import f1_sum_term, f2_sum_term, f3_sum_term, f3_sum_term_block, \
    f4_sum_term, f4_sum_term_block
from .exactnum import ExactScalar

__all__ = [
    "GeometricStop",
    "FixedNStop",
    "SumPolicy",
    "SumReport",
    "TermStream",
    "make_stream",
    "default_policy",
    "sum_series",
    "tail_f3",
    "tail_f4",
    "tail_f3_error_bound",
    "tail_f4_error_bound",
]

#: first index whose block evaluation may use the float asymptotic branch
_BLOCK_START = 13
_BLOCK_SIZE = 50_000


@dataclass(frozen=True)
class GeometricStop:
    k_consecutive: int = 8
    rel_tol: float = 1e-16

    def __post_init__(self):
        if self.k_consecutive < 1 or self.rel_tol <= 0:
            raise ValueError("invalid geometric stop")


@dataclass(frozen=True)
class FixedNStop:
    n_terms: int
    tail_model: Optional[str] = None   # 'f3' | 'f4' | 'f1_power' | None

    def __post_init__(self):
        if self.n_terms < 10:
            raise ValueError("fixed-N stop needs N >= 10")


@dataclass(frozen=True)
class SumPolicy:
    mode: str                                   # 'exact_rational' | 'float_compensated'
    stop: Union[GeometricStop, FixedNStop]
    max_terms: int = 2000

    def __post_init__(self):
        if self.mode not in ("exact_rational", "float_compensated"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if isinstance(self.stop, FixedNStop) and self.max_terms < self.stop.n_terms:
            # permitted, but the sum will report non-convergence
            pass
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")


@dataclass
class SumReport:
    family: str = ""
    nu: Optional[int] = None
    b: Optional[Fraction] = None
    n_terms: int = 0
    partial_sum: float = 0.0
    tail_estimate: float = 0.0
    total: float = 0.0
    rhs_exact: str = ""
    rhs_float: Optional[float] = None
    abs_err: Optional[float] = None
    rel_err: Optional[float] = None
    converged: bool = False
    mode: str = ""
    elapsed_ms: float = 0.0
    # non-interface extras carrying full precision for exact-mode checks
    exact_partial: object = None
    total_hp: object = None
    summation_converged: bool = False
    stop_reason: str = ""


@dataclass
class TermStream:
    """Total-ordered non-negative term stream for one identity."""
    family: str
    nu: int
    b: Optional[Fraction]
    start: int
    exact: bool
    term: Callable[[int], object]
    block: Optional[Callable[[int, int], object]] = None
    tail_exponent: Optional[Fraction] = None     # q in tail ~ N^(-q)


def make_stream(family: str, nu: int, b=None, exact: bool = True) -> TermStream:
    """Build the summand stream of one table identity."""
    if family == "f1":
        if exact:
            term = lambda n: f1_sum_term(n, nu)
        else:
            f_state = {}

            def term(n, _s=f_state):
                # float prefactor 2^(2n) G(n+3/2)^2/(2n+1)! by recurrence
                from .specfun import hyp2f1_term
                if n == 0 or n - 1 not in _s:
                    u = math.pi / 4
                    for k in range(1, n + 1):
                        u *= (2 * k + 1) / (2.0 * k)
                else:
                    u = _s[n - 1] * (2 * n + 1) / (2.0 * n)
                _s[n] = u
                f = hyp2f1_term(n, nu + 2).rat
                return u * float(f) * float(f)
        return TermStream("f1", nu, None, 0, exact, term,
                          tail_exponent=Fraction(2 * nu + 1, 2))
    if family == "f2":
        if b is None or Fraction(b) <= 0:
            raise ValueError("family 2 needs b > 0")
        b = Fraction(b)
        b2 = b * b
        if exact:
            term = lambda n: f2_sum_term(n, nu, b2)
        else:
            term = lambda n: float(f2_sum_term(n, nu, b2))
        return TermStream("f2", nu, b, 0, exact, term)
    if family == "f3":
        return TermStream("f3", nu, None, 1, False,
                          lambda n: f3_sum_term(n, nu),
                          block=lambda n0, n1: f3_sum_term_block(nu, n0, n1),
                          tail_exponent=Fraction(2 * nu))
    if family == "f4":
        return TermStream("f4", nu, None, 1, False,
                          lambda n: f4_sum_term(n, nu),
                          block=lambda n0, n1: f4_sum_term_block(nu, n0, n1),
                          tail_exponent=Fraction(2 * nu))
    raise ValueError(f"unknown family {family!r}")


def default_policy(family: str, nu: int, mode: Optional[str] = None) -> SumPolicy:
    """Per-family default summation policy."""
    if family == "f1":
        if nu % 2 == 1:
            m = mode or "exact_rational"
            rel = 1e-16 if m == "exact_rational" else 1e-14
            return SumPolicy(m, GeometricStop(8, rel), 2000)
        return SumPolicy(mode or "exact_rational",
                         FixedNStop(200, "f1_power"), 200)
    if family == "f2":
        m = mode or "exact_rational"
        rel = 1e-16 if m == "exact_rational" else 1e-14
        return SumPolicy(m, GeometricStop(8, rel), 2000)
    if family == "f3":
        return SumPolicy("float_compensated", FixedNStop(10_000, "f3"), 10_000)
    if family == "f4":
        return SumPolicy("float_compensated", FixedNStop(100_000, "f4"), 100_000)
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# tail models
# ---------------------------------------------------------------------------

def tail_f3(nu: int, n_cut: int) -> float:
    """Leading tail of sum J_{nu+1}(n pi)^2 / n^(2 nu) beyond n_cut:
    J^2 averages 2/(pi^2 n) * 1/2, so the tail is ~ 1/(2 nu pi^2 N^(2 nu)).
    O-accurate, not exact."""
    if n_cut < 100:
        raise ValueError("tail model valid for N >= 100")
    return 1.0 / (2.0 * nu * math.pi ** 2 * float(n_cut) ** (2 * nu))


def tail_f4(nu: int, n_cut: int) -> float:
    """Leading tail of sum H_nu(n pi)^2 / n^(2 nu) beyond n_cut, from the
    non-oscillatory part H_nu(z) ~ (z/2)^(nu-1)/(sqrt(pi) Gamma(nu+1/2)):
    A_nu (1/N - 1/(2 N^2)) with A_nu = (pi/2)^(2nu-2)/(pi Gamma(nu+1/2)^2)."""
    if n_cut < 100:
        raise ValueError("tail model valid for N >= 100")
    a_nu = (math.pi / 2.0) ** (2 * nu - 2) / (math.pi * math.gamma(nu + 0.5) ** 2)
    n = float(n_cut)
    return a_nu * (1.0 / n - 1.0 / (2.0 * n * n))


def tail_f3_error_bound(nu: int, n_cut: int) -> float:
    """Documented bound on the f3 tail-model error: the ignored pieces are
    the Euler-Maclaurin 1/(2 N^(2nu+1)) correction and the first Hankel
    amplitude correction ~ (4(nu+1)^2-1)/(4 pi) per 1/n."""
    c1 = 0.5 + (4.0 * (nu + 1) ** 2 - 1.0) / (2.0 * math.pi)
    return 2.0 * c1 / (math.pi ** 2 * float(n_cut) ** (2 * nu + 1))


def tail_f4_error_bound(nu: int, n_cut: int) -> float:
    """Documented bound on the f4 tail-model error: ignored smooth pieces
    (squared oscillatory part ~ 1/(2 nu pi^2 N^(2nu)), cross terms
    ~ N^-(nu+3/2)) with a factor-2 safety margin."""
    n = float(n_cut)
    return 2.0 / (2.0 * nu * math.pi ** 2 * n ** (2 * nu)) + 4.0 / n ** (nu + 1.5)


def _f1_power_tail(nu: int, snapshots: dict, n_last: int,
                   n_orders: int = 8, dps: int = 60):
    """Eliminate the power-law remainder of the even-nu family-1 series.

    The exact partial sums S_N (rational multiples of pi) obey
    S_inf = S_N + N^(-q) (d0 + d1/N + ... ),  q = nu + 1/2.
    Solving for S_inf from n_orders+1 exact samples removes the d_j
    layer by layer; the model error is O(N^(-q - n_orders))."""
    q = Fraction(2 * nu + 1, 2)
    ns = sorted(snapshots)[-(n_orders + 1):]
    if len(ns) < 2:
        raise ValueError("not enough partial-sum samples for tail elimination")
    m = len(ns) - 1
    with mp.workdps(dps):
        qf = mp.mpf(q.numerator) / q.denominator
        rows, rhs = [], []
        for n_i in ns:
            rat = snapshots[n_i]
            rows.append([mp.mpf(1)] + [-mp.mpf(n_i) ** (-qf - j) for j in range(m)])
            rhs.append(mp.mpf(rat.numerator) / rat.denominator)
        sol = mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))
        total_rat_hp = sol[0]
        total_hp = total_rat_hp * mp.pi
        partial_hp = (mp.mpf(snapshots[n_last].numerator)
                      / snapshots[n_last].denominator) * mp.pi
        tail_hp = total_hp - partial_hp
        return float(tail_hp), +total_hp


# ---------------------------------------------------------------------------
# the summation loop
# ---------------------------------------------------------------------------

def _neumaier(values, s: float, c: float):
    for v in values:
        t = s + v
        if abs(s) >= abs(v):
            c += (s - t) + v
        else:
            c += (v - t) + s
        s = t
    return s, c


def sum_series(stream: TermStream, policy: SumPolicy) -> SumReport:
    """Sum a non-negative term stream under `policy`.

    Terms are consumed in strictly increasing index order; float mode uses
    Neumaier compensation, exact mode accumulates the rational (or
    rational-times-pi) values without rounding.  The report always comes
    back, with converged=False if max_terms ran out before the stop rule.
    """
    t0 = time.perf_counter()
    report = SumReport(family=stream.family, nu=stream.nu, b=stream.b,
                       mode=policy.mode)
    exact_mode = policy.mode == "exact_rational"
    if exact_mode and not stream.exact:
        raise ValueError(f"family {stream.family} has no exact term stream")

    geo = policy.stop if isinstance(policy.stop, GeometricStop) else None
    fixed = policy.stop if isinstance(policy.stop, FixedNStop) else None
    target_terms = policy.max_terms if geo else min(policy.max_terms,
                                                    fixed.n_terms)

    want_snapshots = fixed is not None and fixed.tail_model == "f1_power"
    snap_at = set()
    if want_snapshots:
        n_last = stream.start + target_terms - 1
        snap_at = {n_last - 12 * j for j in range(9) if n_last - 12 * j >= 10}

    acc_exact = None
    s = 0.0
    c = 0.0
    float_sum = 0.0
    consecutive = 0
    snapshots = {}
    n = stream.start
    used = 0
    stopped = False

    while used < target_terms:
        if (not exact_mode and stream.block is not None and geo is None
                and n >= _BLOCK_START):
            hi = min(stream.start + target_terms, n + _BLOCK_SIZE)
            vals = stream.block(n, hi).tolist()
            s, c = _neumaier(vals, s, c)
            used += hi - n
            n = hi
            continue
        t = stream.term(n)
        tf = float(t)
        if tf < 0:
            raise ValueError("term streams must be non-negative")
        if exact_mode:
            acc_exact = t if acc_exact is None else acc_exact + t
            float_sum += tf
        else:
            s, c = _neumaier((tf,), s, c)
        used += 1
        if want_snapshots and n in snap_at:
            rat = acc_exact.rat if isinstance(acc_exact, ExactScalar) else acc_exact
            snapshots[n] = rat
        if geo is not None:
            current = float_sum if exact_mode else s + c
            if tf <= geo.rel_tol * current:
                consecutive += 1
                if consecutive >= geo.k_consecutive:
                    stopped = True
                    n += 1
                    break
            else:
                consecutive = 0
        n += 1

    if geo is not None:
        report.summation_converged = stopped
        report.stop_reason = "geometric" if stopped else "max_terms"
    else:
        reached = used >= fixed.n_terms
        report.summation_converged = reached
        report.stop_reason = "fixed_n" if reached else "max_terms"

    report.n_terms = used
    if exact_mode:
        report.exact_partial = acc_exact
        with mp.workdps(60):
            if isinstance(acc_exact, ExactScalar):
                partial_hp = acc_exact.hp(60)
            elif acc_exact is None:
                partial_hp = mp.mpf(0)
            else:
                partial_hp = mp.mpf(acc_exact.numerator) / acc_exact.denominator
        report.partial_sum = float(partial_hp)
    else:
        partial_hp = None
        report.partial_sum = s + c

    tail = 0.0
    total_hp = None
    if fixed is not None and report.summation_converged and fixed.tail_model:
        n_last = stream.start + used - 1
        if fixed.tail_model == "f3":
            tail = tail_f3(stream.nu, n_last)
        elif fixed.tail_model == "f4":
            tail = tail_f4(stream.nu, n_last)
        elif fixed.tail_model == "f1_power":
            tail, total_hp = _f1_power_tail(stream.nu, snapshots, n_last)
        else:
            raise ValueError(f"unknown tail model {fixed.tail_model!r}")
    report.tail_estimate = tail
    report.total = report.partial_sum + tail
    if total_hp is not None:
        report.total_hp = total_hp
    elif partial_hp is not None:
        report.total_hp = partial_hp + mp.mpf(tail)
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report
