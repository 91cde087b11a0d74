"""Structured matrix constructors: Toeplitz, diagonal sampling, spin-sector
blocks, the restricted mean-field model, finite-difference analogues, sector
multiplicities, and a dense Kronecker-basis cross-check for small site counts.

Dense matrices are plain NumPy arrays; tridiagonal matrices use the
SymTridiagonal container below. Sector multiplicities are carried as natural
logs so site counts up to 2000 stay in range.
"""

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class ModelParams:
    """Coupling Gamma (> 0) and transverse field B of the mean-field model."""

    gamma: float = 1.0
    bfield: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and math.isfinite(self.bfield)):
            raise ValueError("parameters must be finite")
        if self.gamma <= 0:
            raise ValueError("gamma must be > 0")


@dataclass(frozen=True)
class SymTridiagonal:
    """Real symmetric tridiagonal matrix: diagonal and off-diagonal sequences."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.diag, dtype=float)
        e = np.asarray(self.offdiag, dtype=float)
        if d.ndim != 1 or e.ndim != 1 or len(e) != max(len(d) - 1, 0):
            raise ValueError("offdiag length must be diag length minus one")
        if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
            raise ValueError("entries must be finite")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def dim(self):
        return len(self.diag)

    def to_dense(self):
        """Dense ndarray embedding."""
        a = np.diag(self.diag)
        n = self.dim
        if n > 1:
            idx = np.arange(n - 1)
            a[idx + 1, idx] = self.offdiag
            a[idx, idx + 1] = self.offdiag
        return a


@dataclass(frozen=True)
class FourierCoefficients:
    """Finite family of Fourier coefficients {k: f_hat(k)} of a generating function."""

    entries: dict

    def __post_init__(self):
        for k, v in self.entries.items():
            if not isinstance(k, int):
                raise ValueError("offsets must be integers")
            if not (math.isfinite(complex(v).real) and math.isfinite(complex(v).imag)):
                raise ValueError(f"coefficient at offset {k} is not finite")

    def __getitem__(self, k):
        return self.entries.get(k, 0.0)


@dataclass(frozen=True)
class SpinSectorSpec:
    """One irreducible sector: site count N, spin J (stored as 2J), dimension,
    and log multiplicity."""

    n_sites: int
    two_j: int
    dim: int
    log_multiplicity: float

    @property
    def spin(self):
        return self.two_j / 2.0


def allowed_two_j(n_sites):
    """The admissible doubled spins for N sites: N mod 2, N mod 2 + 2, ..., N."""
    if n_sites < 1:
        raise ValueError("N must be >= 1")
    return range(n_sites % 2, n_sites + 1, 2)


def _log_binomial(n, k):
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def toeplitz_from_coeffs(coeffs, n):
    """n x n Toeplitz matrix with entry (i, j) = f_hat(i - j).

    Missing offsets are zero. Returns a real array when every coefficient in
    range is real, complex otherwise.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not isinstance(coeffs, FourierCoefficients):
        coeffs = FourierCoefficients(dict(coeffs))
    a = np.zeros((n, n), dtype=complex)
    for k, v in coeffs.entries.items():
        if -n < k < n:
            idx = np.arange(max(0, k), min(n, n + k))
            a[idx, idx - k] = v
    if float(np.max(np.abs(a.imag), initial=0.0)) == 0.0:
        return a.real.copy()
    return a


def fourier_coeffs(f, max_offset, quad_points=None):
    """Fourier coefficients f_hat(k) = (1/2pi) * integral f(theta) e^{-ik theta},
    |k| <= max_offset, by the uniform midpoint rule on [-pi, pi].

    The rule is spectrally exact for trigonometric polynomials of degree
    <= max_offset once quad_points > 2*max_offset; the default grid is
    max(256, 4*max_offset + 4).
    """
    if max_offset < 0:
        raise ValueError("max_offset must be >= 0")
    if quad_points is None:
        quad_points = max(256, 4 * max_offset + 4)
    if quad_points < 4 * max_offset + 4:
        raise ValueError("quad_points must be >= 4*max_offset + 4")
    j = np.arange(1, quad_points + 1)
    theta = -np.pi + (j - 0.5) * (2.0 * np.pi / quad_points)
    samples = np.array([complex(f(t)) for t in theta])
    if not np.all(np.isfinite(samples.real)) or not np.all(np.isfinite(samples.imag)):
        bad = int(np.flatnonzero(~(np.isfinite(samples.real) & np.isfinite(samples.imag)))[0])
        raise ValueError(f"non-finite sample of f at theta = {theta[bad]}")
    entries = {}
    for k in range(-max_offset, max_offset + 1):
        entries[k] = complex(np.sum(samples * np.exp(-1j * k * theta)) / quad_points)
    return FourierCoefficients(entries)


def diag_sampling(a, n):
    """Diagonal sampling matrix diag(a(i/n), i = 1..n) as a dense array."""
    if n < 1:
        raise ValueError("n must be >= 1")
    vals = np.empty(n, dtype=float)
    for i in range(1, n + 1):
        v = float(a(i / n))
        if not math.isfinite(v):
            raise ValueError(f"non-finite sample a({i}/{n}) at index {i}")
        vals[i - 1] = v
    return np.diag(vals)


def spin_block(n_sites, spin, params):
    """Tridiagonal matrix of the normalized model restricted to the spin-J sector.

    In the basis of third-component eigenstates m = -J..J (ascending):
    diag_m = -(Gamma/2)(2m/N)^2, off-diagonal between m and m+1 equal to
    -(B/N) sqrt(J(J+1) - m(m+1)).
    """
    two_j = int(round(2 * spin))
    if abs(2 * spin - two_j) > 1e-9:
        raise ValueError(f"spin {spin} is not a half-integer")
    if two_j not in allowed_two_j(n_sites):
        raise ValueError(f"spin {spin} is not admissible for N = {n_sites}")
    g, b = params.gamma, params.bfield
    j = two_j / 2.0
    m = np.arange(-two_j, two_j + 1, 2, dtype=float) / 2.0
    diag = -(g / 2.0) * (2.0 * m / n_sites) ** 2
    mm = m[:-1]
    off = -(b / n_sites) * np.sqrt(j * (j + 1.0) - mm * (mm + 1.0))
    return SymTridiagonal(diag=diag, offdiag=off)


def cw_restricted(n_sites, params):
    """The maximal-spin restriction: (N+1) x (N+1) symmetric tridiagonal with
    diag_k = -(Gamma/2)(2(k-1)/N - 1)^2 and off_k = -B sqrt(1-(k-1)/N) sqrt(k/N).

    Entrywise identical to spin_block(N, N/2, params).
    """
    if n_sites < 1:
        raise ValueError("N must be >= 1")
    g, b = params.gamma, params.bfield
    k = np.arange(1, n_sites + 2, dtype=float)
    diag = -(g / 2.0) * (2.0 * (k - 1.0) / n_sites - 1.0) ** 2
    kk = np.arange(1, n_sites + 1, dtype=float)
    off = -b * np.sqrt(1.0 - (kk - 1.0) / n_sites) * np.sqrt(kk / n_sites)
    return SymTridiagonal(diag=diag, offdiag=off)


def sector_list(n_sites):
    """All spin sectors for N sites with log multiplicities.

    log C(J, N) = log[(2J+1)/(N+1)] + log binomial(N+1, N/2+J+1), evaluated
    through log-gamma so the result is exact in log space for any N.
    """
    out = []
    for two_j in allowed_two_j(n_sites):
        logc = math.log((two_j + 1.0) / (n_sites + 1.0)) + _log_binomial(
            n_sites + 1, (n_sites + two_j) // 2 + 1
        )
        out.append(
            SpinSectorSpec(
                n_sites=n_sites,
                two_j=two_j,
                dim=two_j + 1,
                log_multiplicity=logc,
            )
        )
    return out


def fd_schrodinger(n_sites, params):
    """Centered-difference matrix of -(h^2) a(x) u'' + c(x) u on x_k = k/(N+1),
    k = 1..N+1, h = 1/(N+1): diag 2a(x_k) + c(x_k), off-diagonal -a(x_min(k,k+1)),
    with a(x) = B sqrt((1-x)x) and c(x) = -(Gamma/2)(2x-1)^2 - 2B sqrt((1-x)x).

    By construction 2a(x)(1 - cos theta) + c(x) equals the model symbol.
    """
    if n_sites < 1:
        raise ValueError("N must be >= 1")
    g, b = params.gamma, params.bfield
    k = np.arange(1, n_sites + 2, dtype=float)
    x = k / (n_sites + 1.0)
    a = b * np.sqrt((1.0 - x) * x)
    c = -(g / 2.0) * (2.0 * x - 1.0) ** 2 - 2.0 * b * np.sqrt((1.0 - x) * x)
    return SymTridiagonal(diag=2.0 * a + c, offdiag=-a[:-1])


def fd_dirichlet(size, params):
    """Interior-grid discretization whose spectrum reproduces the reference
    convergence tables: size x size, grid x_k = k/(size+1), diagonal
    -(Gamma/2)(2x_k-1)^2, off-diagonal -sqrt(a(x_k) a(x_{k+1})) with
    a(x) = B sqrt((1-x)x).

    The geometric-mean coupling makes this the symmetrized form of the
    row-sampled difference matrix (same eigenvalues). Unlike cw_restricted,
    whose extreme eigenvalues overshoot the symbol range by O(1/N) from
    outside, this matrix keeps all eigenvalues inside the range and converges
    to the extrema from within.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    g, b = params.gamma, params.bfield
    k = np.arange(1, size + 1, dtype=float)
    x = k / (size + 1.0)
    a = np.abs(b) * np.sqrt((1.0 - x) * x)
    diag = -(g / 2.0) * (2.0 * x - 1.0) ** 2
    off = -np.sqrt(a[:-1] * a[1:])
    if b < 0:
        off = -off
    return SymTridiagonal(diag=diag, offdiag=off)


def dense_cw_oracle(n_sites, params):
    """Dense 2^N mean-field Hamiltonian -(Gamma/2) S3^2 - B S1, S_i the averaged
    Pauli sums, built in the product basis. Cross-check tool; N <= 12.

    Basis index i encodes the spin configuration bitwise (bit = 1 means third
    component -1), so S3 is diagonal in i and S1 connects single bit flips.
    """
    if n_sites < 1:
        raise ValueError("N must be >= 1")
    if n_sites > 12:
        raise ValueError("N > 12 refused (2^N memory guard)")
    g, b = params.gamma, params.bfield
    dim = 1 << n_sites
    idx = np.arange(dim)
    popcount = np.array([bin(i).count("1") for i in idx])
    s3 = (n_sites - 2.0 * popcount) / n_sites
    h = np.diag(-(g / 2.0) * s3 ** 2)
    for bit in range(n_sites):
        flipped = idx ^ (1 << bit)
        h[flipped, idx] += -b / n_sites
    return h
