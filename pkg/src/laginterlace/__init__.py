"""Zeros of linear combinations of Laguerre polynomials with shifted parameters."""

from .interlace import (
    HypothesisError,
    InterlacingReport,
    Pattern,
    Verdict,
    check_chain,
    check_negative_claims,
    check_theorem_R,
    check_theorem_S,
    interlace_check,
)
from .laguerre import (
    CombinationSpec,
    DomainError,
    Family,
    ParamSet,
    PureLaguerre,
    eval_combination,
    eval_laguerre,
    identity_residual,
)
from .rootfind import ConvergenceError, ZeroSet, combination_zeros, laguerre_zeros, oracle_zeros

__version__ = "0.1.0"
