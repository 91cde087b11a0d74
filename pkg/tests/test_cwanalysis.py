"""Full-spectrum assembly across spin sectors, the block-size measure and its
concentration bound, coherent-state machinery, zero-distribution traces, and
the extremal-eigenvalue convergence tables."""

import math

import numpy as np
import pytest

from cwglt import (
    ModelParams,
    NonPositiveGapError,
    berezin_deviation,
    berezin_symbol,
    chernoff_bound,
    coherent_state,
    cw_restricted,
    cw_symbol,
    dense_cw_oracle,
    dense_sym_eigenvalues,
    extremal_convergence,
    full_cw_spectrum,
    from_eigenvalues,
    ks_distance,
    nu_measure,
    resolution_identity_check,
    sector_list,
    symbol_extrema,
    zero_dist_trace_test,
)
from cwglt.cwanalysis import _decade_ratios
from cwglt.fixtures import load_fixtures


# --- full spectrum over sectors ---------------------------------------------

def test_full_spectrum_weights_and_dimension():
    ws = full_cw_spectrum(8)
    assert ws.total_dim == 2 ** 8
    assert ws.weights.sum() == pytest.approx(1.0, abs=1e-12)
    # number of eigenvalues = sum over sectors of block size 2J+1
    expected = sum(s.two_j + 1 for s in sector_list(8))
    assert ws.values.size == expected


def test_full_spectrum_matches_dense_oracle():
    for n in (1, 2, 5, 10):
        params = ModelParams(gamma=1.0, bfield=0.7)
        ws = full_cw_spectrum(n, params)
        dense = from_eigenvalues(
            dense_sym_eigenvalues(dense_cw_oracle(n, params)).values)
        assert ks_distance(ws, dense, tie_tol=1e-10) < 1e-9


def test_full_spectrum_size_guard():
    with pytest.raises(ValueError, match="sector sweep guard"):
        full_cw_spectrum(2001)


# --- block-size measure nu and Chernoff-type bound ---------------------------

def test_nu_measure_totals_and_consistency():
    for n in (1, 2, 7, 64, 501, 2000):
        nu = nu_measure(n)
        assert nu.total_mass() == pytest.approx(1.0, abs=1e-10)
        sectors = sector_list(n)
        assert nu.points.size == len(sectors)
        # masses are (2J+1) * multiplicity / 2^N, points are u = 2J/N
        k = len(sectors) // 2
        s = sectors[k]
        expected = (s.two_j + 1) * math.exp(s.log_multiplicity - n * math.log(2.0))
        assert nu.masses[k] == pytest.approx(expected, rel=1e-12)
        assert nu.points[k] == pytest.approx(s.two_j / n, abs=1e-15)


def test_nu_interval_mass_and_validation():
    nu = nu_measure(6)
    # u = 0 sector of 6 sites: multiplicity C(0,6) = 5, mass 5/64
    assert nu.interval_mass(0.0, 0.0) == pytest.approx(5.0 / 64.0, rel=1e-12)
    assert nu.interval_mass(0.0, 1.0) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError, match="out of order"):
        nu.interval_mass(0.5, 0.2)


def test_nu_concentrates_near_zero():
    # mass outside [0, eps] decays with N; compare two sizes at eps = 0.3
    tail_small = 1.0 - nu_measure(100).interval_mass(0.0, 0.3)
    tail_large = 1.0 - nu_measure(400).interval_mass(0.0, 0.3)
    assert tail_large < tail_small < 0.02


def test_chernoff_bound_dominates_tail():
    for n in (50, 100, 200, 500):
        nu = nu_measure(n)
        for eps in (0.2, 0.4, 0.6):
            tail = 1.0 - nu.interval_mass(0.0, eps)
            assert tail <= chernoff_bound(n, eps) + 1e-15


def test_chernoff_bound_validation():
    with pytest.raises(ValueError):
        chernoff_bound(100, 0.0)
    with pytest.raises(ValueError):
        chernoff_bound(100, 1.5)


# --- coherent states ----------------------------------------------------------

def test_coherent_state_normalized():
    for spin in (0.5, 1.0, 5.0, 50.0):
        for theta, phi in ((0.3, 1.2), (1.8, 4.0), (math.pi / 2, 0.0)):
            st = coherent_state(spin, theta, phi)
            assert np.sum(np.abs(st.amplitudes) ** 2) == pytest.approx(1.0, abs=1e-10)
            assert st.dim == int(2 * spin) + 1


def test_coherent_state_poles():
    # theta = 0 concentrates on the top weight m = J; theta = pi on m = -J
    st0 = coherent_state(3.0, 0.0, 0.7)
    assert abs(st0.amplitudes[-1]) == pytest.approx(1.0, abs=1e-15)
    assert np.max(np.abs(st0.amplitudes[:-1])) == 0.0
    stpi = coherent_state(3.0, math.pi, 0.7)
    assert abs(stpi.amplitudes[0]) == pytest.approx(1.0, abs=1e-15)
    # phase at the south pole is e^{i 2J phi}
    assert np.angle(stpi.amplitudes[0]) == pytest.approx(
        math.remainder(6.0 * 0.7, 2 * math.pi), abs=1e-12)


def test_coherent_state_validation():
    with pytest.raises(ValueError):
        coherent_state(0.4, 0.0, 0.0)  # not a half-integer
    with pytest.raises(ValueError):
        coherent_state(1.0, -0.1, 0.0)
    with pytest.raises(ValueError):
        coherent_state(1.0, 4.0, 0.0)  # theta beyond pi
    with pytest.raises(ValueError):
        coherent_state(1.0, 0.5, float("nan"))


def test_berezin_symbol_matches_classical_on_sphere():
    # <Omega| H/N |Omega> at spin N/2 equals the classical surface function
    # up to O(1/N) corrections
    n = 60
    params = ModelParams(gamma=1.0, bfield=0.5)
    m = cw_restricted(n, params)
    for theta, phi in ((0.8, 0.3), (2.0, 5.1)):
        st = coherent_state(n / 2.0, theta, phi)
        val = berezin_symbol(m, st)
        u = 1.0
        classical = -0.5 * (u * math.cos(theta)) ** 2 - 0.5 * u * math.sin(
            theta) * math.cos(phi)
        assert abs(val - classical) < 3.0 / n


def test_berezin_symbol_dimension_mismatch():
    m = cw_restricted(10, ModelParams())
    st = coherent_state(4.0, 0.5, 0.5)
    with pytest.raises(ValueError, match="dimension mismatch"):
        berezin_symbol(m, st)


def test_berezin_deviation_scaling():
    # sup over the sphere of |<H/N> - h0| equals Gamma/(2N) at maximal spin
    fx = load_fixtures()
    for n_str, pinned in fx["berezin_n_times_dev"].items():
        n = int(n_str)
        dev = berezin_deviation(n, n / 2.0)
        assert n * dev == pytest.approx(pinned, rel=1e-9)
        assert n * dev <= fx["berezin_bound"]


def test_resolution_identity():
    for spin in (0.5, 1.0, 2.5, 10.0):
        assert resolution_identity_check(spin) < 1e-10


def test_resolution_identity_node_validation():
    with pytest.raises(ValueError, match="n_theta must be >= 2J\\+2 = 6, got 5"):
        resolution_identity_check(2.0, n_theta=5)
    with pytest.raises(ValueError, match="n_phi"):
        resolution_identity_check(2.0, n_phi=3)


# --- zero-distribution traces -------------------------------------------------

def test_zero_dist_rows():
    rows = zero_dist_trace_test(sizes=(4, 10, 50, 200))
    fx = load_fixtures()["schatten2"]
    for row in rows:
        assert math.isfinite(row.schatten2) and row.schatten2 > 0.0
        if str(row.n_sites) in fx:
            assert row.schatten2 == pytest.approx(fx[str(row.n_sites)], rel=1e-9)
    means = {row.n_sites: row.mean_F for row in rows}
    assert means[10] == pytest.approx(0.107, abs=1e-3)
    # normalized trace of the correction term is exactly -Gamma/(2N)
    for n in (4, 10, 50, 200):
        trace_row = zero_dist_trace_test(sizes=(n,), F=lambda v: v)[0]
        assert trace_row.mean_F == pytest.approx(-1.0 / (2.0 * n), abs=1e-10)


def test_zero_dist_schatten_decreasing():
    rows = zero_dist_trace_test(sizes=(25, 50, 100, 200))
    s = [row.schatten2 for row in rows]
    assert all(a > b for a, b in zip(s, s[1:]))


# --- extremal-eigenvalue convergence tables ------------------------------------

def test_decade_ratio_uses_4dp_rounding():
    # the table convention: ratios of gaps rounded to 4 decimals
    alphas = _decade_ratios((0.0064272740019807317, 0.0025150539402954974))
    assert alphas[0] == pytest.approx(math.log10(0.0064 / 0.0025), abs=1e-15)
    with pytest.raises(ValueError, match="rounds to"):
        _decade_ratios((1e-6, 1e-7))


def test_extremal_convergence_structure_and_exponents():
    table = extremal_convergence()
    assert table.model == "fd"
    assert table.sizes == (40, 80, 160, 320)
    assert len(table.tau) == 4 and len(table.alpha) == 3
    # gaps shrink monotonically, extremes approach the range from inside
    assert all(a > b > 0 for a, b in zip(table.tau, table.tau[1:]))
    assert all(a > b > 0 for a, b in zip(table.tau_hat, table.tau_hat[1:]))
    assert all(a > b for a, b in zip(table.lambda_min, table.lambda_min[1:]))
    assert all(a < b for a, b in zip(table.lambda_max, table.lambda_max[1:]))
    fx = load_fixtures()["convergence_exponents"]
    p_min, p_max = table.fitted_exponents
    assert p_min == pytest.approx(fx["p_min"], abs=1e-9)
    assert p_max == pytest.approx(fx["p_max"], abs=1e-9)


def test_extremal_convergence_second_parameter_set():
    table = extremal_convergence(ModelParams(gamma=1.0, bfield=0.5))
    assert all(a > b > 0 for a, b in zip(table.tau, table.tau[1:]))
    assert all(a > b > 0 for a, b in zip(table.tau_hat, table.tau_hat[1:]))
    ext = symbol_extrema(cw_symbol(ModelParams(gamma=1.0, bfield=0.5)))
    assert table.m_used == pytest.approx(ext.m)
    assert table.M_used == pytest.approx(ext.M)


def test_extremal_convergence_override_bounds():
    table = extremal_convergence(m_used=-0.6241, M_used=0.4982,
                                 params=ModelParams(gamma=1.0, bfield=0.5))
    assert table.m_used == -0.6241
    assert table.M_used == 0.4982


def test_restricted_model_raises_nonpositive_gap():
    # the maximal-spin restriction overshoots the essential range, so the
    # lower gap tau = lambda_min - m comes out negative
    with pytest.raises(NonPositiveGapError) as exc:
        extremal_convergence(model="restricted")
    err = exc.value
    assert err.row == "lambda_min"
    assert err.size == 40
    assert err.eigenvalue < err.bound == -1.0
    assert "non-positive gap in lambda_min row at size 40" in str(err)


def test_extremal_convergence_validation():
    with pytest.raises(ValueError):
        extremal_convergence(sizes=(40,))
    with pytest.raises(ValueError):
        extremal_convergence(sizes=(1, 40))
    with pytest.raises(ValueError):
        extremal_convergence(model="bogus")