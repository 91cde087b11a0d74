# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled eigenvalue kernels: implicit-shift QL and Householder reduction.

Same contracts as the pure backend in ``_eigen_py``; selected at import by
``cwglt.eigen``.
"""

from libc.math cimport fabs, hypot, sqrt

import numpy as np

# Off-diagonal entries below SPLIT_TOL * (|d_i| + |d_{i+1}|) deflate the
# problem into independent blocks.
DEF SPLIT_TOL = 1e-15
DEF MAX_SWEEPS = 64


cdef int _ql_inplace(double[::1] d, double[::1] e, Py_ssize_t n) except -1:
    """Implicit-shift QL on (d, e); eigenvalues overwrite d. e needs length n."""
    cdef Py_ssize_t l, m, i
    cdef int it
    cdef double dd, g, r, s, c, p, f, b, sgn
    if n == 1:
        return 0
    e[n - 1] = 0.0
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = fabs(d[m]) + fabs(d[m + 1])
                if fabs(e[m]) <= SPLIT_TOL * dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > MAX_SWEEPS:
                raise ArithmeticError("QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = hypot(g, 1.0)
            sgn = r if g >= 0.0 else -r
            g = d[m] - d[l] + e[l] / (g + sgn)
            s = 1.0
            c = 1.0
            p = 0.0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            else:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return 0


def tridiag_eigvals(diag, offdiag):
    """All eigenvalues of the symmetric tridiagonal (diag, offdiag), ascending."""
    cdef double[::1] d = np.array(diag, dtype=np.float64)
    cdef Py_ssize_t n = d.shape[0]
    e_arr = np.zeros(n, dtype=np.float64)
    if n > 1:
        e_arr[: n - 1] = offdiag
    cdef double[::1] e = e_arr
    _ql_inplace(d, e, n)
    out = np.asarray(d)
    out.sort()
    return out


def dense_sym_tridiagonalize(a):
    """Householder reduction of a real symmetric matrix to tridiagonal (d, e)."""
    a_arr = np.array(a, dtype=np.float64, order="C")
    cdef double[:, ::1] A = a_arr
    cdef Py_ssize_t n = A.shape[0]
    v_arr = np.zeros(n, dtype=np.float64)
    w_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] v = v_arr
    cdef double[::1] w = w_arr
    cdef Py_ssize_t i, j, k
    cdef double nx, vn, kv, alpha, s
    for k in range(n - 2):
        nx = 0.0
        for i in range(k + 1, n):
            nx += A[i, k] * A[i, k]
        nx = sqrt(nx)
        if nx == 0.0:
            continue
        for i in range(k + 1, n):
            v[i] = A[i, k]
        if v[k + 1] >= 0.0:
            v[k + 1] += nx
            alpha = -nx
        else:
            v[k + 1] -= nx
            alpha = nx
        vn = 0.0
        for i in range(k + 1, n):
            vn += v[i] * v[i]
        vn = sqrt(vn)
        for i in range(k + 1, n):
            v[i] /= vn
        # w = B v - (v' B v) v on the trailing block B = A[k+1:, k+1:]
        for i in range(k + 1, n):
            s = 0.0
            for j in range(k + 1, n):
                s += A[i, j] * v[j]
            w[i] = s
        kv = 0.0
        for i in range(k + 1, n):
            kv += v[i] * w[i]
        for i in range(k + 1, n):
            w[i] -= kv * v[i]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i, j] -= 2.0 * (v[i] * w[j] + w[i] * v[j])
        A[k + 1, k] = alpha
        A[k, k + 1] = alpha
        for i in range(k + 2, n):
            A[i, k] = 0.0
            A[k, i] = 0.0
    d = np.empty(n, dtype=np.float64)
    e = np.empty(n - 1 if n > 1 else 0, dtype=np.float64)
    for i in range(n):
        d[i] = A[i, i]
    for i in range(n - 1):
        e[i] = A[i + 1, i]
    return d, e
