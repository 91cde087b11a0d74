"""Weighted spectral measures, empirical functionals, quantile and CDF
comparison metrics, the Schatten zero-distribution test, and rank-bounded
perturbation robustness.
"""

import math
from dataclasses import dataclass

import numpy as np

from .eigen import EigenResult, dense_sym_eigenvalues, tridiag_eigenvalues
from .symbols import quantile


@dataclass(frozen=True)
class WeightedSpectrum:
    """Multiset of (eigenvalue, probability weight) pairs, sorted ascending.

    total_dim is the effective matrix dimension d_n — it may exceed the
    stored pair count when weights carry multiplicities.
    """

    values: np.ndarray
    weights: np.ndarray
    total_dim: int

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        w = np.asarray(self.weights, dtype=float)
        if v.ndim != 1 or v.shape != w.shape or len(v) == 0:
            raise ValueError("values and weights must be matching non-empty 1-D arrays")
        if np.any(w < 0):
            raise ValueError("weights must be non-negative")
        if abs(float(np.sum(w)) - 1.0) > 1e-10:
            raise ValueError("weights must sum to 1 within 1e-10")
        order = np.argsort(v, kind="stable")
        object.__setattr__(self, "values", v[order])
        object.__setattr__(self, "weights", w[order])


@dataclass(frozen=True)
class DistanceReport:
    """Quantile-gap and CDF distances between a spectrum and a reference."""

    sup_quantile_gap: float
    mean_abs_gap: float
    ks_distance: float


def _as_values(values):
    if isinstance(values, EigenResult):
        return values.values
    if isinstance(values, WeightedSpectrum):
        return values.values
    return np.asarray(values, dtype=float)


def from_eigenvalues(values):
    """Uniform-weight spectral measure of a plain eigenvalue list."""
    v = _as_values(values)
    if len(v) == 0:
        raise ValueError("need at least one eigenvalue")
    n = len(v)
    return WeightedSpectrum(values=v, weights=np.full(n, 1.0 / n), total_dim=n)


def empirical_functional(ws, F):
    """The weighted empirical functional sum_i w_i F(lambda_i)."""
    vals = ws.values
    try:
        out = np.asarray(F(vals), dtype=float)
        if out.shape != vals.shape:
            raise ValueError
    except Exception:
        out = np.array([float(F(float(v))) for v in vals])
    if not np.all(np.isfinite(out)):
        raise ValueError("F is not finite on the spectrum")
    return float(np.sum(ws.weights * out))


def ks_distance(a, b, tie_tol=0.0):
    """Kolmogorov distance sup_t |CDF_a(t) - CDF_b(t)| by a merged sweep.

    The difference is evaluated only at boundaries between value groups —
    runs of merged values closer than tie_tol are treated as a single atom,
    so identical multisets give exactly 0 and spectra matching to solver
    precision can be compared with a small positive tie_tol.
    """
    if tie_tol < 0:
        raise ValueError("tie_tol must be >= 0")
    vals = np.concatenate([a.values, b.values])
    steps = np.concatenate([a.weights, -b.weights])
    order = np.argsort(vals, kind="stable")
    v = vals[order]
    gap = np.cumsum(steps[order])
    boundary = np.empty(len(v), dtype=bool)
    boundary[:-1] = np.diff(v) > tie_tol
    boundary[-1] = True
    return float(np.max(np.abs(gap[boundary])))


def compare_quantiles(values, rearr):
    """Gap report between sorted eigenvalues and a rearranged symbol.

    sup and mean of |lambda_i - psi(i/(n+1))| over i = 1..n (open rank
    placement matching the midpoint sampling convention), plus the Kolmogorov
    distance between the two empirical distributions.
    """
    v = np.sort(_as_values(values))
    if len(v) == 0:
        raise ValueError("need at least one eigenvalue")
    n = len(v)
    gaps = np.array([abs(v[i - 1] - quantile(rearr, i / (n + 1.0))) for i in range(1, n + 1)])
    sample_ws = from_eigenvalues(rearr.sorted_values)
    spec_ws = from_eigenvalues(v)
    return DistanceReport(
        sup_quantile_gap=float(np.max(gaps)),
        mean_abs_gap=float(np.mean(gaps)),
        ks_distance=ks_distance(spec_ws, sample_ws),
    )


def schatten_zero_test(ws, p=2.0):
    """Scaled Schatten norm (sum_i w_i |lambda_i|^p)^(1/p) of a Hermitian
    spectrum — equal to ||A||_p / d_n^(1/p) for uniform weights — or
    max |lambda| for p = inf. A vanishing limit certifies zero distribution.
    """
    if p != math.inf and p < 1:
        raise ValueError("p must be >= 1 or inf")
    absv = np.abs(ws.values)
    if p == math.inf:
        return float(np.max(absv))
    return float(np.sum(ws.weights * absv ** p) ** (1.0 / p))


def _orthonormal_columns(g):
    """Modified Gram-Schmidt orthonormalization (deterministic, BLAS-free)."""
    q = np.array(g, dtype=float)
    n, k = q.shape
    for j in range(k):
        for prev in range(j):
            q[:, j] -= float(q[:, prev] @ q[:, j]) * q[:, prev]
        nrm = math.sqrt(float(q[:, j] @ q[:, j]))
        if nrm == 0.0:
            raise ValueError("rank-deficient random draw")
        q[:, j] /= nrm
    return q


def perturbation_robustness(m, rank_k, seed=0):
    """Distance report between a tridiagonal spectrum and the spectrum of the
    matrix plus a seeded random symmetric rank-k perturbation of spectral
    norm <= 1 (eigenvector directions from an orthonormalized Gaussian draw,
    eigenvalues uniform in [-1, 1] scaled so the largest magnitude is 1).

    The Kolmogorov distance is bounded by rank_k / dim: a rank-k perturbation
    moves the eigenvalue counting function by at most k at any threshold.
    """
    n = m.dim
    if rank_k < 0 or rank_k > n // 4:
        raise ValueError("rank_k must lie in [0, dim/4]")
    base = tridiag_eigenvalues(m).values
    if rank_k == 0:
        return DistanceReport(sup_quantile_gap=0.0, mean_abs_gap=0.0, ks_distance=0.0)
    rng = np.random.default_rng(seed)
    q = _orthonormal_columns(rng.standard_normal((n, rank_k)))
    c = rng.uniform(-1.0, 1.0, rank_k)
    c /= float(np.max(np.abs(c)))
    perturbed_matrix = m.to_dense() + (q * c) @ q.T
    pert = dense_sym_eigenvalues(perturbed_matrix).values
    gaps = np.abs(np.sort(base) - np.sort(pert))
    return DistanceReport(
        sup_quantile_gap=float(np.max(gaps)),
        mean_abs_gap=float(np.mean(gaps)),
        ks_distance=ks_distance(from_eigenvalues(base), from_eigenvalues(pert)),
    )
