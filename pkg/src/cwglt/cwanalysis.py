"""Model-level analysis: full weighted spectra across spin sectors, the
sector-size measure with its concentration bound, spin coherent states and
Berezin symbols, the resolution-of-identity quadrature check, trace-moment
zero-distribution scans, and extremal-eigenvalue convergence tables.
"""

import math
from dataclasses import dataclass

import numpy as np

from .distribution import WeightedSpectrum, empirical_functional, schatten_zero_test
from .eigen import dense_sym_eigenvalues, tridiag_eigenvalues
from .matrices import (
    ModelParams,
    SymTridiagonal,
    cw_restricted,
    fd_dirichlet,
    sector_list,
    spin_block,
)
from .symbols import classical_h0, cw_symbol, symbol_extrema

MAX_FULL_SITES = 2000

_LOG10_2 = math.log10(2.0)


@dataclass(frozen=True)
class NuMeasure:
    """Discrete measure on [0, 1]: mass of each spin sector at u = 2J/N."""

    n_sites: int
    points: np.ndarray
    masses: np.ndarray

    def total_mass(self):
        return float(np.sum(self.masses))

    def interval_mass(self, lo, hi=1.0):
        """Mass of the closed interval [lo, hi]."""
        if lo > hi:
            raise ValueError("interval bounds out of order")
        sel = (self.points >= lo) & (self.points <= hi)
        return float(np.sum(self.masses[sel]))


@dataclass(frozen=True)
class CoherentState:
    """Spin coherent state |theta, phi> in the standard J_3 basis,
    amplitudes indexed by m = -J..J ascending."""

    two_j: int
    theta: float
    phi: float
    amplitudes: np.ndarray

    @property
    def spin(self):
        return self.two_j / 2.0

    @property
    def dim(self):
        return self.two_j + 1


@dataclass(frozen=True)
class ZeroDistRow:
    """One size of a trace-moment scan: the scaled Schatten-2 norm and a
    weighted trace functional of the full spectrum."""

    n_sites: int
    schatten2: float
    mean_F: float


@dataclass(frozen=True)
class ConvergenceTable:
    """Extremal-eigenvalue gaps tau_j = lambda_min(n_j) - m and
    tau_hat_j = M - lambda_max(n_j) over a ladder of sizes, with decade
    ratios alpha_j = log10(tau_j / tau_{j+1}) (and beta for the max row)
    computed from the gaps rounded to 4 decimals, plus least-squares decay
    exponents fitted to the unrounded gaps.
    """

    model: str
    sizes: tuple
    m_used: float
    M_used: float
    lambda_min: tuple
    tau: tuple
    alpha: tuple
    lambda_max: tuple
    tau_hat: tuple
    beta: tuple
    fitted_exponents: tuple


class NonPositiveGapError(ValueError):
    """An extremal gap came out non-positive: the supplied bound lies on the
    wrong side of the computed eigenvalue. Records which row and size."""

    def __init__(self, row, size, eigenvalue, bound):
        self.row = row
        self.size = size
        self.eigenvalue = eigenvalue
        self.bound = bound
        super().__init__(
            f"non-positive gap in {row} row at size {size}: "
            f"eigenvalue {eigenvalue!r} vs bound {bound!r}"
        )


def full_cw_spectrum(n_sites, params=ModelParams()):
    """Weighted spectrum of the scaled mean-field model on N sites: every
    spin-J sector contributes its block eigenvalues with weight
    multiplicity(J, N) / 2^N, merged ascending. Total dimension 2^N."""
    if n_sites < 1:
        raise ValueError("n_sites must be >= 1")
    if n_sites > MAX_FULL_SITES:
        raise ValueError(f"n_sites > {MAX_FULL_SITES} refused (sector sweep guard)")
    log2n = n_sites * math.log(2.0)
    values = []
    weights = []
    for sector in sector_list(n_sites):
        block = spin_block(n_sites, sector.spin, params)
        eigs = tridiag_eigenvalues(block).values
        w = math.exp(sector.log_multiplicity - log2n)
        values.append(eigs)
        weights.append(np.full(len(eigs), w))
    return WeightedSpectrum(
        values=np.concatenate(values),
        weights=np.concatenate(weights),
        total_dim=2 ** n_sites,
    )


def nu_measure(n_sites):
    """Sector-size measure: mass (2J+1) * multiplicity(J, N) / 2^N at
    u = 2J/N for each admissible J. Total mass is exactly 1."""
    if n_sites < 1:
        raise ValueError("n_sites must be >= 1")
    log2n = n_sites * math.log(2.0)
    points = []
    masses = []
    for sector in sector_list(n_sites):
        points.append(sector.two_j / n_sites)
        masses.append(
            (sector.two_j + 1) * math.exp(sector.log_multiplicity - log2n)
        )
    return NuMeasure(
        n_sites=n_sites, points=np.array(points), masses=np.array(masses)
    )


def chernoff_bound(n_sites, eps):
    """Concentration bound 2(N+1)^2 exp(-(N eps + 1)^2 / (6(N+1))) dominating
    the tail mass nu_N([eps, 1])."""
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    n = n_sites
    return 2.0 * (n + 1) ** 2 * math.exp(-((n * eps + 1.0) ** 2) / (6.0 * (n + 1)))


def coherent_state(spin, theta, phi):
    """Spin-J coherent state with amplitudes
    a_m = sqrt(C(2J, J+m)) cos(theta/2)^(J+m) sin(theta/2)^(J-m) e^(i(J-m)phi),
    evaluated in log space so large J and the poles theta in {0, pi} are exact.
    """
    two_j = round(2 * spin)
    if abs(2 * spin - two_j) > 1e-9 or two_j < 1:
        raise ValueError(f"spin must be a positive half-integer, got {spin!r}")
    if not (0.0 <= theta <= math.pi):
        raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
    if not math.isfinite(phi):
        raise ValueError("phi must be finite")
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    amps = np.zeros(two_j + 1, dtype=complex)
    for k in range(two_j + 1):  # k = J + m, ascending m
        up, down = k, two_j - k
        if (c == 0.0 and up > 0) or (s == 0.0 and down > 0):
            continue
        log_mag = 0.5 * (
            math.lgamma(two_j + 1) - math.lgamma(up + 1) - math.lgamma(down + 1)
        )
        if up > 0:
            log_mag += up * math.log(c)
        if down > 0:
            log_mag += down * math.log(s)
        amps[k] = math.exp(log_mag) * complex(math.cos(down * phi), math.sin(down * phi))
    # The magnitudes sum to 1 exactly (binomial theorem); renormalize away the
    # accumulated exp/log rounding so the state has unit norm to full precision.
    amps /= math.sqrt(float(np.sum(np.abs(amps) ** 2)))
    return CoherentState(two_j=two_j, theta=theta, phi=phi, amplitudes=amps)


def berezin_symbol(m, state):
    """Diagonal matrix element <state| m |state> of a real symmetric
    tridiagonal operator in the coherent state."""
    if not isinstance(m, SymTridiagonal):
        raise TypeError("berezin_symbol expects a SymTridiagonal")
    if m.dim != state.dim:
        raise ValueError(
            f"dimension mismatch: matrix dim {m.dim} vs state dim {state.dim}"
        )
    a = state.amplitudes
    d = np.asarray(m.diag)
    e = np.asarray(m.offdiag)
    val = float(np.sum(d * np.abs(a) ** 2))
    if len(e):
        val += 2.0 * float(np.sum(e * np.real(np.conj(a[:-1]) * a[1:])))
    return val


def berezin_deviation(n_sites, spin, params=ModelParams(), sphere_grid=(41, 40)):
    """Sup over a sphere grid of |Berezin symbol - classical symbol| for the
    spin-J block at u = 2J/N. Grid: n_theta points uniform on [0, pi]
    inclusive, n_phi points uniform on [0, 2pi)."""
    n_theta, n_phi = sphere_grid
    if n_theta < 2 or n_phi < 1:
        raise ValueError("sphere_grid must have n_theta >= 2 and n_phi >= 1")
    block = spin_block(n_sites, spin, params)
    u = round(2 * spin) / n_sites
    worst = 0.0
    for theta in np.linspace(0.0, math.pi, n_theta):
        for j in range(n_phi):
            phi = 2.0 * math.pi * j / n_phi
            state = coherent_state(spin, float(theta), phi)
            dev = abs(berezin_symbol(block, state) - classical_h0(u, float(theta), phi, params))
            if dev > worst:
                worst = dev
    return worst


def resolution_identity_check(spin, n_theta=None, n_phi=None):
    """Spectral-norm defect of the coherent-state resolution of identity,
    (2J+1)/(4 pi) * integral |Omega><Omega| dOmega = I, quadratured with
    Gauss-Legendre in cos(theta) and a uniform phi grid. Needs
    n_theta >= 2J+2 and n_phi >= 4J+2 nodes for the quadrature to be exact;
    fewer is an error."""
    two_j = round(2 * spin)
    if abs(2 * spin - two_j) > 1e-9 or two_j < 1:
        raise ValueError(f"spin must be a positive half-integer, got {spin!r}")
    min_theta = two_j + 2
    min_phi = 2 * two_j + 2
    if n_theta is None:
        n_theta = min_theta
    if n_phi is None:
        n_phi = min_phi
    if n_theta < min_theta:
        raise ValueError(f"n_theta must be >= 2J+2 = {min_theta}, got {n_theta}")
    if n_phi < min_phi:
        raise ValueError(f"n_phi must be >= 4J+2 = {min_phi}, got {n_phi}")
    dim = two_j + 1
    nodes, gauss_w = np.polynomial.legendre.leggauss(n_theta)
    acc = np.zeros((dim, dim), dtype=complex)
    for u, w in zip(nodes, gauss_w):
        theta = math.acos(float(u))
        scale = (two_j + 1) * float(w) / (2.0 * n_phi)
        for j in range(n_phi):
            a = coherent_state(spin, theta, 2.0 * math.pi * j / n_phi).amplitudes
            acc += scale * np.outer(a, np.conj(a))
    defect = acc - np.eye(dim)
    embed = np.block(
        [[defect.real, -defect.imag], [defect.imag, defect.real]]
    )
    eigs = dense_sym_eigenvalues(embed).values
    return float(np.max(np.abs(eigs)))


def zero_dist_trace_test(sizes, params=ModelParams(), F=None):
    """Scaled Schatten-2 norm and weighted trace functional of the full
    spectrum at each size. F defaults to the square, so mean_F is the
    normalized trace of the squared operator."""
    if F is None:
        F = lambda x: x * x
    rows = []
    for n in sizes:
        ws = full_cw_spectrum(n, params)
        rows.append(
            ZeroDistRow(
                n_sites=n,
                schatten2=schatten_zero_test(ws, 2.0),
                mean_F=empirical_functional(ws, F),
            )
        )
    return rows


def _decade_ratios(gaps):
    """log10 ratios of consecutive gaps, each first rounded to 4 decimals
    (the resolution the reference tables are stated at)."""
    rounded = [round(g, 4) for g in gaps]
    for g, r in zip(gaps, rounded):
        if r <= 0.0:
            raise ValueError(
                f"gap {g!r} rounds to {r!r} at 4 decimals; ratio undefined"
            )
    return tuple(
        math.log10(rounded[j] / rounded[j + 1]) for j in range(len(rounded) - 1)
    )


def _ls_exponent(sizes, gaps):
    """Decay exponent p from a least-squares fit gap ~ size^-p on the
    unrounded gaps."""
    slope = np.polyfit(np.log10(np.asarray(sizes, dtype=float)), np.log10(gaps), 1)[0]
    return -float(slope)


def extremal_convergence(
    params=ModelParams(),
    sizes=(40, 80, 160, 320),
    m_used=None,
    M_used=None,
    model="fd",
):
    """Convergence table of the extremal eigenvalues toward symbol bounds.

    For each matrix size n the gaps tau = lambda_min(n) - m and
    tau_hat = M - lambda_max(n) are recorded together with their decade
    ratios and fitted decay exponents. Bounds default to the computed symbol
    extrema. model selects the matrix family: "fd" (the discretized
    Schrodinger form, sized exactly n) or "restricted" (the maximal-spin
    sector on n-1 sites, which also has dimension n).
    """
    if model not in ("fd", "restricted"):
        raise ValueError(f"model must be 'fd' or 'restricted', got {model!r}")
    if len(sizes) < 2:
        raise ValueError("need at least 2 sizes")
    if any(s < 2 for s in sizes):
        raise ValueError("every size must be >= 2")
    if m_used is None or M_used is None:
        ext = symbol_extrema(cw_symbol(params))
        if m_used is None:
            m_used = ext.m
        if M_used is None:
            M_used = ext.M
    lam_min, lam_max, tau, tau_hat = [], [], [], []
    for n in sizes:
        if model == "fd":
            mat = fd_dirichlet(n, params)
        else:
            mat = cw_restricted(n - 1, params)
        eigs = tridiag_eigenvalues(mat).values
        lo, hi = float(eigs[0]), float(eigs[-1])
        gap_lo = lo - m_used
        gap_hi = M_used - hi
        if gap_lo <= 0.0:
            raise NonPositiveGapError("lambda_min", n, lo, m_used)
        if gap_hi <= 0.0:
            raise NonPositiveGapError("lambda_max", n, hi, M_used)
        lam_min.append(lo)
        lam_max.append(hi)
        tau.append(gap_lo)
        tau_hat.append(gap_hi)
    return ConvergenceTable(
        model=model,
        sizes=tuple(int(s) for s in sizes),
        m_used=float(m_used),
        M_used=float(M_used),
        lambda_min=tuple(lam_min),
        tau=tuple(tau),
        alpha=_decade_ratios(tau),
        lambda_max=tuple(lam_max),
        tau_hat=tuple(tau_hat),
        beta=_decade_ratios(tau_hat),
        fitted_exponents=(_ls_exponent(sizes, tau), _ls_exponent(sizes, tau_hat)),
    )
