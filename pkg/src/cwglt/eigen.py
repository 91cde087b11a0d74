"""Eigenvalue and singular-value solvers with explicit accuracy contracts.

Two interchangeable kernel backends implement implicit-shift QL (tridiagonal
eigenvalues) and Householder reduction (dense symmetric): a compiled Cython
extension and a pure-NumPy fallback. The compiled one is used when available;
set ``CWGLT_PURE_PYTHON=1`` to force the fallback.
"""

import os
from dataclasses import dataclass

import numpy as np

from .matrices import SymTridiagonal


def _load_kernel():
    if os.environ.get("CWGLT_PURE_PYTHON", "").strip() not in ("", "0"):
        from . import _eigen_py

        return _eigen_py, "pure"
    try:
        from . import _eigen_cy

        return _eigen_cy, "compiled"
    except ImportError:
        from . import _eigen_py

        return _eigen_py, "pure"


_KERNEL, BACKEND = _load_kernel()

DENSE_DIM_LIMIT = 4096
SINGULAR_DIM_LIMIT = 2048


def backend_name():
    """Name of the active kernel backend: 'compiled' or 'pure'."""
    return BACKEND


@dataclass(frozen=True)
class EigenResult:
    """All eigenvalues of a symmetric matrix, sorted ascending."""

    values: np.ndarray
    tol_used: float

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if np.any(np.diff(self.values) < 0):
            raise ValueError("eigenvalues must be sorted ascending")


def tridiag_eigenvalues(m, tol=1e-10):
    """All eigenvalues of a SymTridiagonal via implicit-shift QL.

    Each value is within tol * (norm estimate) of the true eigenvalue; the
    kernel iterates to its fixed deflation threshold (1e-15 relative), so the
    default contract has ample headroom.
    """
    if tol <= 0:
        raise ValueError("tol must be > 0")
    if not isinstance(m, SymTridiagonal):
        raise TypeError("expected a SymTridiagonal")
    vals = _KERNEL.tridiag_eigvals(m.diag, m.offdiag)
    return EigenResult(values=vals, tol_used=float(tol))


def dense_sym_eigenvalues(m, tol=1e-10):
    """All eigenvalues of a real symmetric dense matrix.

    Householder reduction to tridiagonal form followed by the QL kernel.
    Rejects matrices whose asymmetry exceeds 1e-12 relative to their scale.
    """
    if tol <= 0:
        raise ValueError("tol must be > 0")
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    n = a.shape[0]
    if n > DENSE_DIM_LIMIT:
        raise ValueError(f"dimension {n} exceeds limit {DENSE_DIM_LIMIT}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    scale = max(1.0, float(np.max(np.abs(a))))
    dev = float(np.max(np.abs(a - a.T))) if n else 0.0
    if dev > 1e-12 * scale:
        raise ValueError(f"matrix is not symmetric: max |A - A^T| = {dev:.3e}")
    if n == 0:
        return EigenResult(values=np.empty(0), tol_used=float(tol))
    d, e = _KERNEL.dense_sym_tridiagonalize(a)
    vals = _KERNEL.tridiag_eigvals(d, e)
    return EigenResult(values=vals, tol_used=float(tol))


def singular_values(m):
    """Singular values of a dense (real or complex) matrix, descending.

    Square roots of the eigenvalues of m^H m, clamped at zero. Complex
    Hermitian Gram matrices are handled through the standard real embedding
    [[Re, -Im], [Im, Re]], whose spectrum doubles each eigenvalue.
    """
    a = np.asarray(m)
    if a.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    if max(a.shape) > SINGULAR_DIM_LIMIT:
        raise ValueError(f"dimension {max(a.shape)} exceeds limit {SINGULAR_DIM_LIMIT}")
    if not np.all(np.isfinite(a.real)) or (np.iscomplexobj(a) and not np.all(np.isfinite(a.imag))):
        raise ValueError("matrix entries must be finite")
    gram = a.conj().T @ a
    if np.iscomplexobj(gram) and float(np.max(np.abs(gram.imag), initial=0.0)) > 0.0:
        re, im = gram.real, gram.imag
        embedded = np.block([[re, -im], [im, re]])
        eigs = dense_sym_eigenvalues(embedded).values[::2]
    else:
        eigs = dense_sym_eigenvalues(np.ascontiguousarray(gram.real)).values
    sv = np.sqrt(np.clip(eigs, 0.0, None))
    return sv[::-1].copy()
