"""Generalized Laguerre polynomials and their two-parameter linear combinations.

Two combination families are supported:

    R(n, alpha, t, a) = L_n^alpha + a * L_n^{alpha+t}
    S(n, alpha, t, b) = L_n^alpha + b * L_{n-1}^{alpha+t}

Everything is evaluated in binary64 by the upward three-term recurrence.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np


class DomainError(ValueError):
    """Raised for parameters outside the region where L_n^alpha is orthogonal."""


def _check_degree(n) -> int:
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"degree must be an integer, got {n!r}")
    n = int(n)
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    return n


def _check_alpha(alpha) -> float:
    alpha = float(alpha)
    if not alpha > -1.0:
        raise DomainError(f"alpha must be > -1, got {alpha}")
    return alpha


def eval_laguerre(n: int, alpha: float, x):
    """Evaluate L_n^alpha at ``x`` (scalar or array).

    Uses L_0 = 1, L_1 = 1 + alpha - x and
    (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}.
    """
    n = _check_degree(n)
    alpha = _check_alpha(alpha)
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("abscissa must be finite")

    prev = np.ones_like(x)
    if n == 0:
        return float(prev) if scalar else prev
    cur = 1.0 + alpha - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return float(cur) if scalar else cur


def laguerre_coefficients(n: int, alpha: float) -> np.ndarray:
    """Monomial coefficients of L_n^alpha, lowest power first.

    c_k = (-1)^k binom(n + alpha, n - k) / k!, built by the ratio
    c_k / c_{k-1} = -(n - k + 1) / (k (alpha + k)).
    """
    n = _check_degree(n)
    alpha = _check_alpha(alpha)
    c = np.empty(n + 1)
    c[0] = math.prod((alpha + j) / j for j in range(1, n + 1))
    for k in range(1, n + 1):
        c[k] = -c[k - 1] * (n - k + 1) / (k * (alpha + k))
    return c


class Family(str, enum.Enum):
    R = "R"
    S = "S"


@dataclass(frozen=True)
class ParamSet:
    """Degree, parameter, shift and coefficient of one combination instance."""

    n: int
    alpha: float
    t: float
    coeff: float

    def __post_init__(self):
        object.__setattr__(self, "n", _check_degree(self.n))
        object.__setattr__(self, "alpha", _check_alpha(self.alpha))
        t = float(self.t)
        coeff = float(self.coeff)
        if not math.isfinite(t) or not self.alpha + t > -1.0:
            raise DomainError(f"alpha + t must be > -1, got alpha={self.alpha}, t={t}")
        if not math.isfinite(coeff) or coeff == 0.0:
            raise DomainError(f"coefficient must be finite and nonzero, got {coeff}")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "coeff", coeff)


class Term(NamedTuple):
    weight: float
    n: int
    alpha: float


@dataclass(frozen=True)
class PureLaguerre:
    """Selector for a single polynomial L_n^alpha, usable wherever a spec is."""

    n: int
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "n", _check_degree(self.n))
        object.__setattr__(self, "alpha", _check_alpha(self.alpha))

    @property
    def degree(self) -> int:
        return self.n

    @property
    def terms(self) -> tuple[Term, ...]:
        return (Term(1.0, self.n, self.alpha),)

    @property
    def label(self) -> str:
        return f"L_{self.n}^{{{self.alpha:g}}}"

    def __call__(self, x):
        return eval_laguerre(self.n, self.alpha, x)

    def coefficients(self) -> np.ndarray:
        return laguerre_coefficients(self.n, self.alpha)


@dataclass(frozen=True)
class CombinationSpec:
    family: Family
    params: ParamSet

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family is Family.S and self.params.n < 1:
            raise DomainError("family S needs n >= 1")

    @classmethod
    def make(cls, family, n, alpha, t, coeff) -> "CombinationSpec":
        return cls(Family(family), ParamSet(n, alpha, t, coeff))

    @property
    def degree(self) -> int:
        """Effective degree; R with coeff == -1 loses its leading term."""
        p = self.params
        if self.family is Family.R and p.coeff == -1.0:
            return p.n - 1
        return p.n

    @property
    def reduced_degree(self) -> bool:
        return self.degree < self.params.n

    @property
    def terms(self) -> tuple[Term, ...]:
        p = self.params
        second_degree = p.n if self.family is Family.R else p.n - 1
        return (Term(1.0, p.n, p.alpha), Term(p.coeff, second_degree, p.alpha + p.t))

    @property
    def label(self) -> str:
        p = self.params
        return f"{self.family.value}_{p.n}^{{{p.alpha:g},{p.t:g}}}(coeff={p.coeff:g})"

    def __call__(self, x):
        return eval_combination(self, x)

    def coefficients(self) -> np.ndarray:
        """Monomial coefficients, lowest first, trimmed to the effective degree."""
        c = np.zeros(self.params.n + 1)
        for w, n, alpha in self.terms:
            c[: n + 1] += w * laguerre_coefficients(n, alpha)
        return c[: self.degree + 1]


def eval_combination(spec: CombinationSpec, x):
    """Evaluate the R or S combination described by ``spec`` at ``x``."""
    (_, n0, a0), (w, n1, a1) = spec.terms
    return eval_laguerre(n0, a0, x) + w * eval_laguerre(n1, a1, x)


IDENTITIES = (
    "shift_1",
    "shift_2",
    "three_term_lc",
    "r_t1_rewrite",
    "r_t2_rewrite",
    "s_t1_rewrite",
)


class IdentityResidual(NamedTuple):
    lhs: float
    rhs: float
    scale: float

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def relative(self) -> float:
        return self.residual / self.scale


def identity_sides(which: str, n: int, alpha: float, x: float, coeff: float | None = None) -> IdentityResidual:
    """Both sides of a parameter-shift identity at ``x``.

    ``scale`` is max(1, |each term entering either side|), the yardstick for
    a relative residual.
    """
    n = _check_degree(n)
    alpha = _check_alpha(alpha)
    x = float(x)
    if which not in IDENTITIES:
        raise ValueError(f"unknown identity {which!r}; choose from {IDENTITIES}")
    if n < (2 if which == "r_t2_rewrite" else 1):
        raise DomainError(f"identity {which} needs a larger degree, got n={n}")
    if which.endswith("rewrite") and coeff is None:
        raise ValueError(f"identity {which} needs a coefficient")

    L = lambda k, a: eval_laguerre(k, a, x)  # noqa: E731

    if which == "shift_1":
        terms_l = [L(n, alpha)]
        terms_r = [L(n, alpha + 1), -L(n - 1, alpha + 1)]
    elif which == "shift_2":
        terms_l = [x * L(n, alpha + 1)]
        terms_r = [(x - n) * L(n, alpha), (alpha + n) * L(n - 1, alpha)]
    elif which == "three_term_lc":
        terms_l = [(alpha + 1) * L(n, alpha + 1)]
        terms_r = [(alpha + n + 1) * L(n, alpha), x * L(n - 1, alpha + 2)]
    elif which == "r_t1_rewrite":
        terms_l = [L(n, alpha), coeff * L(n, alpha + 1)]
        terms_r = [(coeff + 1) * L(n, alpha + 1), -L(n - 1, alpha + 1)]
    elif which == "r_t2_rewrite":
        terms_l = [L(n, alpha), coeff * L(n, alpha + 2)]
        terms_r = [(coeff + 1) * L(n, alpha + 2), -2 * L(n - 1, alpha + 2), L(n - 2, alpha + 2)]
    else:
        terms_l = [L(n, alpha), coeff * L(n - 1, alpha + 1)]
        terms_r = [L(n, alpha + 1), (coeff - 1) * L(n - 1, alpha + 1)]

    scale = max([1.0] + [abs(v) for v in terms_l + terms_r])
    return IdentityResidual(math.fsum(terms_l), math.fsum(terms_r), scale)


def identity_residual(which: str, n: int, alpha: float, x: float, coeff: float | None = None) -> float:
    """|LHS - RHS| of the named identity; compare against a scaled tolerance."""
    return identity_sides(which, n, alpha, x, coeff).residual
