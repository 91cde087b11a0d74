"""Pure-NumPy eigenvalue kernels; fallback when the compiled extension is absent.

Same algorithms and contracts as ``_eigen_cy``: implicit-shift QL for
tridiagonal eigenvalues, Householder reduction for dense symmetric matrices.
The QL sweep is a scalar recurrence (not vectorizable); the Householder
update uses NumPy rank-2 outer products, so this backend stays usable at the
sizes the toolkit needs, just slower than the compiled one.
"""

import math

import numpy as np

SPLIT_TOL = 1e-15
MAX_SWEEPS = 64


def tridiag_eigvals(diag, offdiag):
    """All eigenvalues of the symmetric tridiagonal (diag, offdiag), ascending."""
    d = np.array(diag, dtype=np.float64)
    n = d.shape[0]
    if n == 1:
        return d
    e = np.zeros(n, dtype=np.float64)
    e[: n - 1] = offdiag
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= SPLIT_TOL * dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > MAX_SWEEPS:
                raise ArithmeticError("QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0.0 else -r))
            s = 1.0
            c = 1.0
            p = 0.0
            broke = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    broke = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if not broke:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    d.sort()
    return d


def dense_sym_tridiagonalize(a):
    """Householder reduction of a real symmetric matrix to tridiagonal (d, e)."""
    A = np.array(a, dtype=np.float64, order="C")
    n = A.shape[0]
    for k in range(n - 2):
        x = A[k + 1:, k]
        nx = math.sqrt(float(x @ x))
        if nx == 0.0:
            continue
        v = x.copy()
        if v[0] >= 0.0:
            v[0] += nx
            alpha = -nx
        else:
            v[0] -= nx
            alpha = nx
        v /= math.sqrt(float(v @ v))
        B = A[k + 1:, k + 1:]
        w = B @ v
        w -= (v @ w) * v
        B -= 2.0 * (np.outer(v, w) + np.outer(w, v))
        A[k + 1, k] = alpha
        A[k, k + 1] = alpha
        A[k + 2:, k] = 0.0
        A[k, k + 2:] = 0.0
    d = np.diagonal(A).copy()
    e = np.diagonal(A, offset=-1).copy()
    return d, e
