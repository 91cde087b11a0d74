"""Weighted-spectrum container, tie-aware KS distance, quantile comparison,
Schatten zero tests, and low-rank perturbation stability."""

import math

import numpy as np
import pytest

from cwglt import (
    ModelParams,
    WeightedSpectrum,
    compare_quantiles,
    cw_restricted,
    cw_symbol,
    empirical_functional,
    fd_dirichlet,
    from_eigenvalues,
    ks_distance,
    perturbation_robustness,
    rearrangement,
    sample_grid,
    schatten_zero_test,
    tridiag_eigenvalues,
)
from cwglt.fixtures import load_fixtures


def _ws(values, weights=None):
    values = np.asarray(values, dtype=float)
    if weights is None:
        weights = np.full(values.size, 1.0 / values.size)
    return WeightedSpectrum(values=values, weights=np.asarray(weights, dtype=float),
                            total_dim=values.size)


def test_weighted_spectrum_sorts_and_validates():
    ws = _ws([3.0, 1.0, 2.0])
    assert np.array_equal(ws.values, [1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        _ws([1.0, 2.0], weights=[0.5, 0.4])  # weights do not sum to 1
    with pytest.raises(ValueError):
        _ws([1.0, 2.0], weights=[1.5, -0.5])  # negative weight
    with pytest.raises(ValueError):
        WeightedSpectrum(values=np.array([[1.0]]), weights=np.array([1.0]), total_dim=1)
    with pytest.raises(ValueError):
        WeightedSpectrum(values=np.array([]), weights=np.array([]), total_dim=0)


def test_from_eigenvalues_uniform():
    ws = from_eigenvalues(np.array([2.0, -1.0, 0.0]))
    assert np.array_equal(ws.values, [-1.0, 0.0, 2.0])
    assert np.allclose(ws.weights, 1.0 / 3.0)
    assert ws.total_dim == 3


def test_empirical_functional_linearity_and_monotonicity():
    ws = _ws([0.0, 1.0, 2.0, 3.0], weights=[0.4, 0.3, 0.2, 0.1])
    f = empirical_functional(ws, lambda v: v)
    g = empirical_functional(ws, lambda v: v * v)
    combo = empirical_functional(ws, lambda v: 2.0 * v + 3.0 * v * v)
    assert combo == pytest.approx(2.0 * f + 3.0 * g, abs=1e-15)
    assert f == pytest.approx(0.3 + 0.4 + 0.3, abs=1e-15)
    # scalar-only callables go through the per-point fallback
    h = empirical_functional(ws, lambda v: float(v) ** 2)
    assert h == pytest.approx(g, abs=1e-15)
    with np.errstate(divide="ignore", invalid="ignore"):
        with pytest.raises(ValueError, match="not finite"):
            empirical_functional(ws, lambda v: v / (v - 1.0))


def test_ks_distance_identity_and_simple_split():
    a = _ws([0.0, 1.0, 2.0])
    assert ks_distance(a, a) == 0.0
    # {0, 1} vs {0.5, 1}: the CDFs disagree by 1/2 on [0, 0.5)
    assert ks_distance(_ws([0.0, 1.0]), _ws([0.5, 1.0])) == pytest.approx(0.5)


def test_ks_distance_tie_tolerance():
    # atoms at 0 and 1e-12 are distinct points for tie_tol=0 but one atom
    # once the tolerance absorbs the gap.
    a = _ws([0.0])
    b = _ws([1e-12])
    assert ks_distance(a, b, tie_tol=0.0) == pytest.approx(1.0)
    assert ks_distance(a, b, tie_tol=1e-10) == 0.0


def test_ks_distance_metric_axioms_random():
    rng = np.random.default_rng(7)
    triples = [_ws(rng.standard_normal(40)) for _ in range(3)]
    a, b, c = triples
    ab, ba = ks_distance(a, b), ks_distance(b, a)
    assert ab == pytest.approx(ba, abs=1e-15)
    assert ks_distance(a, c) <= ab + ks_distance(b, c) + 1e-15
    assert ab > 0.0


def test_ks_distance_weighted_atoms():
    heavy = _ws([0.0, 1.0], weights=[0.9, 0.1])
    light = _ws([0.0, 1.0], weights=[0.1, 0.9])
    assert ks_distance(heavy, light) == pytest.approx(0.8)


def test_compare_quantiles_hand_case():
    # values (0.25, 0.75) against the rearrangement of {0, 1}: ranks are
    # 1/3 and 2/3, interpolated quantiles 1/3 and 2/3, so both gaps are 1/12.
    rearr = rearrangement(np.array([0.0, 1.0]))
    report = compare_quantiles(np.array([0.25, 0.75]), rearr)
    assert report.sup_quantile_gap == pytest.approx(1.0 / 12.0, abs=1e-15)
    assert report.mean_abs_gap == pytest.approx(1.0 / 12.0, abs=1e-15)
    assert 0.0 <= report.ks_distance <= 1.0


def test_compare_quantiles_model_decreases_with_size():
    params = ModelParams()
    rearr = rearrangement(sample_grid(cw_symbol(params), 1000, 1000))
    fx = load_fixtures()["quantile_gaps"]
    for family, build in (("restricted", cw_restricted), ("fd", fd_dirichlet)):
        small = compare_quantiles(
            tridiag_eigenvalues(build(40, params)).values, rearr)
        big = compare_quantiles(
            tridiag_eigenvalues(build(320, params)).values, rearr)
        assert big.sup_quantile_gap < small.sup_quantile_gap
        key = f"{family}_b1.0_n320"
        assert big.sup_quantile_gap == pytest.approx(fx[key]["sup"], rel=1e-9)
        assert big.mean_abs_gap == pytest.approx(fx[key]["mean"], rel=1e-9)


def test_schatten_norms_and_validation():
    ws = _ws([3.0, -4.0])
    assert schatten_zero_test(ws, p=2.0) == pytest.approx(math.sqrt(12.5))
    assert schatten_zero_test(ws, p=float("inf")) == pytest.approx(4.0)
    assert schatten_zero_test(ws, p=1.0) == pytest.approx(3.5)
    with pytest.raises(ValueError):
        schatten_zero_test(ws, p=0.5)


def test_schatten_frobenius_identity():
    # p = 2 with uniform weights is the scaled Frobenius norm ||A||_F / sqrt(n)
    rng = np.random.default_rng(11)
    vals = rng.standard_normal(64)
    ws = from_eigenvalues(vals)
    assert schatten_zero_test(ws, p=2.0) == pytest.approx(
        np.linalg.norm(vals) / math.sqrt(64), abs=1e-14)


def test_perturbation_rank_zero_and_validation():
    m = cw_restricted(60, ModelParams())
    report = perturbation_robustness(m, rank_k=0)
    assert report.sup_quantile_gap == 0.0
    assert report.ks_distance == 0.0
    with pytest.raises(ValueError):
        perturbation_robustness(m, rank_k=60)  # exceeds dim // 4
    with pytest.raises(ValueError):
        perturbation_robustness(m, rank_k=-1)


def test_perturbation_ks_bounded_by_rank_fraction():
    # a rank-k perturbation with entries in [-1, 1] moves at most k
    # eigenvalue ranks at any threshold, so KS <= k / n.
    m = cw_restricted(320, ModelParams())
    report = perturbation_robustness(m, rank_k=5, seed=0)
    assert report.ks_distance <= 5.0 / 321.0 + 1e-12
    fx = load_fixtures()["perturbation_ks_n321_rank5_seed0"]
    assert report.ks_distance == pytest.approx(fx, rel=1e-12)


def test_perturbation_deterministic_in_seed():
    m = cw_restricted(80, ModelParams())
    r1 = perturbation_robustness(m, rank_k=3, seed=42)
    r2 = perturbation_robustness(m, rank_k=3, seed=42)
    r3 = perturbation_robustness(m, rank_k=3, seed=43)
    assert r1.sup_quantile_gap == r2.sup_quantile_gap
    assert r1.ks_distance == r2.ks_distance
    assert r1.sup_quantile_gap != r3.sup_quantile_gap