"""sfseries: numerical and semi-symbolic verification of infinite-series
identities for generalized hypergeometric, associated Laguerre, Bessel and
Struve functions, built from eigenbasis expansions of two 1-D quantum
models (half harmonic oscillator, infinite square well).
"""

from .exactnum import ClosedFormConstant, ExactScalar, ExpPolyForm, \
    default_precision, double_factorial, gamma_half, render
from .specfun import CROSSOVER_Z, OscFuncValue, bessel_j, bessel_j_npi, \
    evaluate_osc, hermite, hyp1f1_poly, hyp2f1_term, laguerre, struve_h, \
    struve_h_npi
from .quadrature import QuadratureError, QuadResult, gaussian_cutoff, \
    integrate_finite, integrate_gaussian_tail
from .qmodels import Eigenbasis, F2NormSq, TrialFunction, eigenfunction, \
    half_oscillator, infinite_well, normalization_sq
from .coeffs import CoeffSequence, coeff_f1, coeff_f2, coeff_f3, coeff_f4, \
    coeff_oracle, coeff_sq, f1_sum_term, f2_sum_term, f3_sum_term, f4_sum_term
from .series_engine import FixedNStop, GeometricStop, SumPolicy, SumReport, \
    TermStream, default_policy, make_stream, sum_series, tail_f3, \
    tail_f3_error_bound, tail_f4, tail_f4_error_bound
from .identities import APPENDIX_CHECK_IDS, CheckReport, IdentitySpec, \
    NoPaperValueError, appendix_all, appendix_check, derive_rhs, registry, \
    rhs_paper, verify_identity

__version__ = "0.1.0"
