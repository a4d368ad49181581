"""Strict interlacing of zero sets, and checkers for the R/S interlacing theorems."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .laguerre import CombinationSpec, DomainError, Family, _check_alpha, _check_degree
from .rootfind import ZeroSet, combination_zeros, laguerre_zeros


class HypothesisError(ValueError):
    """Parameters fall outside the hypotheses of the theorem being checked."""


class Verdict(str, enum.Enum):
    INTERLACES = "interlaces"
    FAILS = "fails"
    DEGENERATE = "degenerate"


class Pattern(str, enum.Enum):
    A_FIRST = "A_first"
    B_FIRST = "B_first"
    MIXED = "mixed"
    NA = "n/a"


@dataclass(frozen=True)
class InterlacingReport:
    verdict: Verdict
    pattern: Pattern
    violation: tuple[int, int] | None
    min_gap: float
    detail: str = ""

    @property
    def interlaces(self) -> bool:
        return self.verdict is Verdict.INTERLACES


def default_tie_tol(a, b) -> float:
    top = max([0.0] + [abs(v) for v in a] + [abs(v) for v in b])
    return 1e-8 * (1.0 + top)


def _values(z) -> np.ndarray:
    return np.asarray(z.values if isinstance(z, ZeroSet) else z, dtype=float)


def interlace_check(A: ZeroSet | Sequence[float], B: ZeroSet | Sequence[float], tie_tol: float | None = None) -> InterlacingReport:
    """Decide whether two increasing zero lists strictly interlace.

    With sizes n and n-1 the longer list must bracket the shorter one
    (a_1 < b_1 < a_2 < ... < b_{n-1} < a_n). With equal sizes either list may
    lead; the leader is recorded in ``pattern``. Any cross-list pair closer
    than ``tie_tol`` makes the verdict degenerate. ``violation`` holds
    1-based indices (i into A, j into B) of the first broken inequality.
    """
    a = _values(A)
    b = _values(B)
    la, lb = len(a), len(b)
    if abs(la - lb) > 1:
        raise ValueError(f"zero lists differ in size by more than one ({la} vs {lb})")
    for name, v in (("A", a), ("B", b)):
        if np.any(np.diff(v) <= 0):
            raise ValueError(f"zero list {name} is not strictly increasing")
    if tie_tol is None:
        tie_tol = default_tie_tol(a, b)

    merged = np.sort(np.concatenate((a, b)))
    min_gap = float(np.min(np.diff(merged))) if len(merged) > 1 else float("inf")

    if la and lb:
        pos = np.clip(np.searchsorted(b, a), 1, lb) - 1
        near = np.where(
            pos + 1 < lb,
            np.where(abs(a - b[pos]) <= abs(a - b[np.minimum(pos + 1, lb - 1)]), pos, pos + 1),
            pos,
        )
        dist = abs(a - b[near])
        i = int(np.argmin(dist))
        if dist[i] < tie_tol:
            j = int(near[i])
            return InterlacingReport(
                Verdict.DEGENERATE,
                Pattern.NA,
                (i + 1, j + 1),
                min_gap,
                f"a_{i + 1} = {a[i]:.9g} and b_{j + 1} = {b[j]:.9g} coincide within {tie_tol:.3g}",
            )
    if la + lb <= 1:
        return InterlacingReport(Verdict.INTERLACES, Pattern.NA, None, min_gap)

    a_leads = la > lb or (la == lb and a[0] < b[0])
    lead, follow = (a, b) if a_leads else (b, a)
    pattern = Pattern.A_FIRST if a_leads else Pattern.B_FIRST

    # walk lead_1 < follow_1 < lead_2 < follow_2 < ...
    for k in range(len(follow)):
        checks = [(lead[k], follow[k], k, k, True)]
        if k + 1 < len(lead):
            checks.append((follow[k], lead[k + 1], k + 1, k, False))
        for lo, hi, li, fi, lead_low in checks:
            if not lo < hi:
                i, j = (li, fi) if a_leads else (fi, li)
                names = ("a", "b") if a_leads else ("b", "a")
                lo_name = f"{names[0]}_{li + 1}" if lead_low else f"{names[1]}_{fi + 1}"
                hi_name = f"{names[1]}_{fi + 1}" if lead_low else f"{names[0]}_{li + 1}"
                return InterlacingReport(
                    Verdict.FAILS,
                    Pattern.MIXED,
                    (i + 1, j + 1),
                    min_gap,
                    f"expected {lo_name} < {hi_name}, got {lo:.9g} >= {hi:.9g}",
                )
    return InterlacingReport(Verdict.INTERLACES, pattern, None, min_gap)


def compare_zero_sets(combo: ZeroSet, target: ZeroSet, tie_tol: float | None = None) -> InterlacingReport:
    """Like ``interlace_check`` but total: an incomplete or mis-sized set is a failure."""
    if not combo.complete or abs(len(combo) - len(target)) > 1:
        return InterlacingReport(
            Verdict.FAILS,
            Pattern.NA,
            None,
            float("nan"),
            f"combination zero set incomplete: found {len(combo)} of {combo.degree}",
        )
    return interlace_check(combo, target, tie_tol)


# Targets a combination can be compared against, keyed by a stable label.
TARGETS = {
    "L_n^alpha": lambda p: (p.n, p.alpha),
    "L_{n-1}^alpha": lambda p: (p.n - 1, p.alpha),
    "L_n^{alpha+t}": lambda p: (p.n, p.alpha + p.t),
    "L_{n-1}^{alpha+t}": lambda p: (p.n - 1, p.alpha + p.t),
}


def target_zeros(label: str, spec: CombinationSpec) -> ZeroSet:
    try:
        n, alpha = TARGETS[label](spec.params)
    except KeyError:
        raise ValueError(f"unknown target {label!r}; choose from {sorted(TARGETS)}") from None
    return laguerre_zeros(n, alpha)


@dataclass(frozen=True)
class TheoremCheck:
    """Outcome of one interlacing theorem on one parameter set.

    Unpacks as the pair of reports: ``first, second = check_theorem_R(...)``.
    """

    theorem: str
    spec: CombinationSpec
    combo: ZeroSet
    targets: tuple[str, str]
    reports: tuple[InterlacingReport, InterlacingReport]

    @property
    def reduced_degree(self) -> bool:
        return self.spec.reduced_degree

    @property
    def holds(self) -> bool:
        return all(r.interlaces for r in self.reports)

    def __iter__(self):
        return iter(self.reports)


def _common_hypotheses(n, alpha, t, coeff, t_max_inclusive=True):
    n = _check_degree(n)
    try:
        alpha = _check_alpha(alpha)
    except DomainError as exc:
        raise HypothesisError(str(exc)) from None
    if n < 2:
        raise HypothesisError(f"need n >= 2, got {n}")
    t = float(t)
    upper_ok = t <= 2.0 if t_max_inclusive else t < 2.0
    if not (t > 0.0 and upper_ok):
        bound = "0<t<=2" if t_max_inclusive else "0<t<2"
        raise HypothesisError(f"shift t={t} violates {bound}")
    if coeff is not None and float(coeff) == 0.0:
        raise HypothesisError("coefficient must be nonzero")
    return n, alpha, t


def _run_theorem(name, family, n, alpha, t, coeff, targets):
    spec = CombinationSpec.make(family, n, alpha, t, coeff)
    combo = combination_zeros(spec)
    reports = tuple(compare_zero_sets(combo, target_zeros(lbl, spec)) for lbl in targets)
    return TheoremCheck(name, spec, combo, targets, reports)


def check_theorem_R(n: int, alpha: float, t: float, a: float) -> TheoremCheck:
    """Zeros of L_n^alpha + a L_n^{alpha+t} against those of L_n^alpha and L_n^{alpha+t}.

    Valid for 0 < t <= 2. With a = -1 the combination drops to degree n-1 and
    is compared under the size-difference rule.
    """
    n, alpha, t = _common_hypotheses(n, alpha, t, a)
    return _run_theorem("R", Family.R, n, alpha, t, a, ("L_n^alpha", "L_n^{alpha+t}"))


def check_theorem_S(n: int, alpha: float, t: float, b: float) -> TheoremCheck:
    """Zeros of L_n^alpha + b L_{n-1}^{alpha+t} against L_n^alpha and L_{n-1}^{alpha+t}."""
    n, alpha, t = _common_hypotheses(n, alpha, t, b)
    return _run_theorem("S", Family.S, n, alpha, t, b, ("L_n^alpha", "L_{n-1}^{alpha+t}"))


@dataclass(frozen=True)
class ChainResult:
    holds: bool
    violation: str | None
    index: int | None
    x: ZeroSet
    y: ZeroSet
    t: ZeroSet
    X: ZeroSet

    def __bool__(self):
        return self.holds


def check_chain(n: int, alpha: float, t: float) -> ChainResult:
    """Four-way ordering 0 < x_k < y_k < t_k < X_k < x_{k+1}, k = 1..n-1.

    x: zeros of L_n^alpha, y: L_{n-1}^alpha, t: L_{n-1}^{alpha+t},
    X: L_{n-1}^{alpha+2}. Requires 0 < t < 2 strictly.
    """
    n, alpha, t = _common_hypotheses(n, alpha, t, None, t_max_inclusive=False)
    sets = {
        "x": laguerre_zeros(n, alpha),
        "y": laguerre_zeros(n - 1, alpha),
        "t": laguerre_zeros(n - 1, alpha + t),
        "X": laguerre_zeros(n - 1, alpha + 2),
    }
    x, y, tz, X = (sets[k].values for k in ("x", "y", "t", "X"))

    def result(msg, k):
        return ChainResult(msg is None, msg, k, sets["x"], sets["y"], sets["t"], sets["X"])

    if not x[0] > 0:
        return result(f"0 < x_1 fails (x_1 = {x[0]:.9g})", 1)
    for k in range(n - 1):
        chain = [
            (f"x_{k + 1}", x[k]),
            (f"y_{k + 1}", y[k]),
            (f"t_{k + 1}", tz[k]),
            (f"X_{k + 1}", X[k]),
            (f"x_{k + 2}", x[k + 1]),
        ]
        for (ln, lv), (rn, rv) in zip(chain, chain[1:]):
            if not lv < rv:
                return result(f"{ln} < {rn} fails ({lv:.9g} >= {rv:.9g})", k + 1)
    return result(None, None)


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    statement: str
    expected: Verdict
    report: InterlacingReport
    combo: ZeroSet
    target: ZeroSet

    @property
    def confirmed(self) -> bool:
        return self.report.verdict is self.expected


# (id, statement, family, n, alpha, t, coeff, target degree, target alpha, expected)
CLAIMS = (
    ("R-vs-Lnm1-alpha", "zeros of R_5^{1.45,1} (a=2.33) do not interlace with L_4^{1.45}",
     "R", 5, 1.45, 1.0, 2.33, 4, 1.45, Verdict.FAILS),
    ("S-vs-Lnm1-alpha", "zeros of S_5^{1.45,1} (b=2.33) do not interlace with L_4^{1.45}",
     "S", 5, 1.45, 1.0, 2.33, 4, 1.45, Verdict.FAILS),
    ("S-t2-vs-Ln-alpha+t", "zeros of S_5^{1.45,2} (b=2.33) do not interlace with L_5^{3.45}",
     "S", 5, 1.45, 2.0, 2.33, 5, 3.45, Verdict.FAILS),
    ("R-t1-vs-Lnm1-alpha+1", "zeros of R_5^{1.45,1} (a=2.33) interlace with L_4^{2.45}",
     "R", 5, 1.45, 1.0, 2.33, 4, 2.45, Verdict.INTERLACES),
    ("S-t1-vs-Ln-alpha+1", "zeros of S_5^{1.45,1} (b=2.33) interlace with L_5^{2.45}",
     "S", 5, 1.45, 1.0, 2.33, 5, 2.45, Verdict.INTERLACES),
)


def check_negative_claims() -> list[ClaimResult]:
    """Run the printed counterexamples and the two positive side remarks."""
    out = []
    for cid, text, fam, n, alpha, t, coeff, tn, talpha, expected in CLAIMS:
        combo = combination_zeros(CombinationSpec.make(fam, n, alpha, t, coeff))
        target = laguerre_zeros(tn, talpha)
        out.append(ClaimResult(cid, text, expected, compare_zero_sets(combo, target), combo, target))
    return out
