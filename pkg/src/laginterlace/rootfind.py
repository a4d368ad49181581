"""Real zeros of Laguerre polynomials and of the R/S combinations.

Three independent routes:

* ``laguerre_zeros``: eigenvalues of the symmetric tridiagonal Jacobi matrix.
* ``combination_zeros``: sign-change bracketing on a mesh seeded with the
  component zeros, vectorised bisection, then bracketed secant polish.
* ``oracle_zeros``: brute-force uniform grid plus scalar bisection, evaluated
  through scipy rather than this package's recurrence. Meant for tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
import scipy.special

from .laguerre import CombinationSpec, DomainError, PureLaguerre, _check_alpha, _check_degree, eval_laguerre

BISECT_RTOL = 1e-13
ORACLE_ATOL = 1e-12
MAX_REFINEMENTS = 8
SECANT_STEPS = 3


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class ZeroSet:
    """Sorted real zeros plus the tolerance they were resolved to.

    ``complete`` is True when the number of zeros equals the effective degree.
    """

    values: np.ndarray
    tolerance: float
    complete: bool
    degree: int = field(default=-1)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        if self.degree < 0:
            object.__setattr__(self, "degree", len(v))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())

    def __getitem__(self, i):
        return self.values[i]


def zero_bound(n: int, alpha: float) -> float:
    """Classical upper bound 4n + 2alpha + 2 on the zeros of L_n^alpha."""
    return 4.0 * n + 2.0 * alpha + 2.0


def laguerre_zeros(n: int, alpha: float) -> ZeroSet:
    """Zeros of L_n^alpha from the Jacobi matrix.

    Diagonal 2k + alpha + 1 (k = 0..n-1), off-diagonal sqrt(k (k + alpha))
    (k = 1..n-1).
    """
    n = _check_degree(n)
    alpha = _check_alpha(alpha)
    if n < 1:
        raise DomainError("laguerre_zeros needs n >= 1")
    k = np.arange(n, dtype=float)
    diag = 2.0 * k + alpha + 1.0
    off = np.sqrt(k[1:] * (k[1:] + alpha))
    try:
        z = scipy.linalg.eigh_tridiagonal(diag, off, eigvals_only=True)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise ConvergenceError(f"tridiagonal eigensolver failed for n={n}, alpha={alpha}") from exc
    z = np.sort(z)
    # eigenvalue error is ~eps * ||J||, and ||J|| <= 4n + 2alpha
    tol = 8.0 * np.finfo(float).eps * zero_bound(n, alpha)
    return ZeroSet(z, tol, True, n)


def _fujiwara_bound(coeffs) -> float:
    """Upper bound on |root| for the polynomial with ``coeffs`` (lowest first)."""
    c = np.asarray(coeffs, dtype=float)
    d = len(c) - 1
    lead = c[-1]
    if d < 1 or lead == 0.0:
        raise DomainError("polynomial must have degree >= 1 with nonzero leading coefficient")
    ratios = [abs(c[d - k] / lead) ** (1.0 / k) for k in range(1, d)]
    ratios.append(abs(c[0] / (2.0 * lead)) ** (1.0 / d))
    return 2.0 * max(ratios)


def search_bound(spec: CombinationSpec) -> float:
    """Default upper search bound U = 4n + 2(alpha + max(t, 0)) + 6."""
    p = spec.params
    return 4.0 * p.n + 2.0 * (p.alpha + max(p.t, 0.0)) + 6.0


def _bisect_all(f, lo, hi, flo):
    """Vectorised bisection of every bracket [lo_i, hi_i] with sign(f(lo_i)) = flo_i."""
    lo = lo.copy()
    hi = hi.copy()
    for _ in range(200):
        width = hi - lo
        scale = np.maximum(np.maximum(abs(lo), abs(hi)), np.finfo(float).tiny)
        active = width > BISECT_RTOL * scale
        if not active.any():
            break
        mid = 0.5 * (lo + hi)
        # bracket can no longer be split in binary64
        active &= (mid > lo) & (mid < hi)
        if not active.any():
            break
        fm = np.sign(f(mid))
        hit = active & (fm == 0)
        lo[hit] = hi[hit] = mid[hit]
        left = active & ~hit & (fm == flo)
        right = active & ~hit & (fm != flo)
        lo[left] = mid[left]
        hi[right] = mid[right]
    return lo, hi


def _secant_polish(f, lo, hi):
    """A few secant steps kept inside each bracket."""
    flo = f(lo)
    fhi = f(hi)
    x = 0.5 * (lo + hi)
    for _ in range(SECANT_STEPS):
        denom = fhi - flo
        ok = (denom != 0) & (hi > lo)
        cand = np.where(ok, hi - fhi * (hi - lo) / np.where(ok, denom, 1.0), x)
        inside = (cand >= lo) & (cand <= hi)
        x = np.where(inside, cand, x)
        fx = f(x)
        same = np.sign(fx) == np.sign(flo)
        move_lo = same & (fx != 0)
        move_hi = ~same & (fx != 0)
        lo = np.where(move_lo, x, lo)
        flo = np.where(move_lo, fx, flo)
        hi = np.where(move_hi, x, hi)
        fhi = np.where(move_hi, fx, fhi)
    return x


def _locate(f, mesh, sign_lo, sign_hi):
    """Roots of ``f`` on a sorted mesh whose end signs are known."""
    vals = np.sign(f(mesh[1:-1]))
    signs = np.concatenate(([sign_lo], vals, [sign_hi]))
    exact = mesh[signs == 0]
    s = np.where(signs == 0, np.nan, signs)
    # pair each nonzero-signed point with the next nonzero-signed point
    idx = np.flatnonzero(~np.isnan(s))
    a, b = idx[:-1], idx[1:]
    change = s[a] != s[b]
    # a sign pair straddling an exact zero is that zero, not a new root
    change &= (b - a) == 1
    lo, hi = mesh[a[change]], mesh[b[change]]
    if len(lo):
        lo, hi = _bisect_all(f, lo, hi, s[a[change]])
        roots = _secant_polish(f, lo, hi)
        width = float(np.max((hi - lo) / np.maximum(np.maximum(abs(lo), abs(hi)), 1.0)))
    else:
        roots = np.empty(0)
        width = 0.0
    return np.sort(np.concatenate((roots, exact))), width


def _merge_close(values, tol):
    """Merge zeros closer than ``tol`` (relative); report whether any merge happened."""
    if len(values) < 2:
        return values, False
    keep = [values[0]]
    merged = False
    for v in values[1:]:
        if v - keep[-1] <= tol * max(abs(v), 1.0):
            keep[-1] = 0.5 * (keep[-1] + v)
            merged = True
        else:
            keep.append(v)
    return np.array(keep), merged


def combination_zeros(spec: CombinationSpec) -> ZeroSet:
    """All real zeros of an R or S combination.

    The search interval encloses every complex root (Fujiwara bound), so
    zeros pushed far out or below zero by extreme coefficients are found too.
    The mesh starts from the zeros of both component polynomials and their
    midpoints; it is refined by halving up to ``MAX_REFINEMENTS`` times while
    the count falls short of the effective degree.
    """
    d = spec.degree
    if d < 1:
        raise DomainError(f"{spec.label} has effective degree {d}; nothing to solve")

    coeffs = spec.coefficients()
    bound = _fujiwara_bound(coeffs)
    hi = max(search_bound(spec), bound) * (1 + 1e-6) + 1.0
    lo = -bound * (1 + 1e-6) - 1.0
    # no roots beyond the bound, so the sign there is the sign at infinity
    lead = np.sign(coeffs[-1])
    sign_hi = lead
    sign_lo = lead * (-1) ** d

    pts = [lo, 0.0, hi]
    for _, n, alpha in spec.terms:
        if n >= 1:
            pts.extend(laguerre_zeros(n, alpha).values)
    mesh = np.unique(np.asarray(pts))
    mesh = _densify(mesh)

    f = spec.__call__
    for _ in range(MAX_REFINEMENTS + 1):
        roots, width = _locate(f, mesh, sign_lo, sign_hi)
        if len(roots) >= d:
            break
        mesh = _densify(mesh)
    roots, merged = _merge_close(roots, BISECT_RTOL * 10)
    tol = max(width, BISECT_RTOL)
    return ZeroSet(roots, tol, len(roots) == d and not merged, d)


def _densify(mesh):
    mids = 0.5 * (mesh[:-1] + mesh[1:])
    out = np.empty(len(mesh) + len(mids))
    out[0::2] = mesh
    out[1::2] = mids
    return out


# --------------------------------------------------------------------------
# Brute-force oracle. Deliberately shares nothing with the routes above:
# evaluation and coefficients come from scipy.special.


def _oracle_eval(target, x):
    if isinstance(target, PureLaguerre):
        return scipy.special.eval_genlaguerre(target.n, target.alpha, x)
    total = 0.0
    for w, n, alpha in target.terms:
        total = total + w * scipy.special.eval_genlaguerre(n, alpha, x)
    return total


def oracle_bounds(target) -> tuple[float, float]:
    """Search interval for ``oracle_zeros``.

    For a pure Laguerre polynomial this is (0, 4n + 2alpha + 2]. For a
    combination it is a root-modulus enclosure built from scipy's monomial
    coefficients.
    """
    if isinstance(target, PureLaguerre):
        return 0.0, zero_bound(target.n, target.alpha)
    poly = np.poly1d([0.0])
    for w, n, alpha in target.terms:
        poly = poly + w * scipy.special.genlaguerre(n, alpha)
    c = poly.coeffs[::-1][: target.degree + 1]
    d = len(c) - 1
    # Fujiwara: |z| <= 2 max |c_{d-k}/c_d|^(1/k), with the constant term halved
    r = [abs(c[d - k] / c[d]) ** (1.0 / k) for k in range(1, d + 1)]
    r[-1] *= 0.5 ** (1.0 / d)
    b = 2.0 * max(r) + 1.0
    return -b, b


def oracle_zeros(target, grid_density: int, bounds: tuple[float, float] | None = None) -> ZeroSet:
    """Grid scan plus bisection to ``ORACLE_ATOL``; returns whatever it finds.

    ``target`` is a ``PureLaguerre`` or a ``CombinationSpec``.
    """
    d = target.degree
    if d < 1:
        raise DomainError("oracle needs effective degree >= 1")
    if grid_density < 10 * d:
        raise ValueError(f"grid_density must be >= 10 * degree = {10 * d}")
    lo, hi = oracle_bounds(target) if bounds is None else bounds
    grid = np.linspace(lo, hi, int(grid_density))
    vals = _oracle_eval(target, grid)
    roots = list(grid[vals == 0])
    sgn = np.sign(vals)
    cells = np.flatnonzero(sgn[:-1] * sgn[1:] < 0)
    for i in cells:
        fa = vals[i]
        a, b = grid[i], grid[i + 1]
        while b - a > ORACLE_ATOL:
            m = 0.5 * (a + b)
            if m <= a or m >= b:
                break
            fm = _oracle_eval(target, m)
            if fm == 0:
                a = b = m
                break
            if (fm > 0) == (fa > 0):
                a, fa = m, fm
            else:
                b = m
        roots.append(0.5 * (a + b))
    roots = np.sort(np.array(roots))
    return ZeroSet(roots, ORACLE_ATOL, len(roots) == d, d)


def residual_ok(n: int, alpha: float, z: float, rtol: float = 1e-9) -> bool:
    """Newton-step test |L(z)| <= rtol * |L'(z)| * max(1, z), with L' = -L_{n-1}^{alpha+1}."""
    val = eval_laguerre(n, alpha, z)
    slope = eval_laguerre(n - 1, alpha + 1, z)
    return abs(val) <= rtol * abs(slope) * max(1.0, abs(z))
