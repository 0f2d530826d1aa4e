# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled Jacobi kernels.

Both routines mirror ``_fallback.py`` line for line; keep them in sync.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs, hypot, copysign
from libc.float cimport DBL_EPSILON

cnp.import_array()


def jacobi_eigh(double[:, ::1] a_in, int max_sweeps=30):
    """Cyclic-by-row Jacobi on a symmetric matrix.

    Returns ``(diag, V, sweeps, converged)``; eigenvalues are unsorted.
    """
    cdef Py_ssize_t n = a_in.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] a_arr = np.array(a_in, dtype=np.float64, order="C")
    cdef cnp.ndarray[cnp.float64_t, ndim=2] v_arr = np.eye(n, dtype=np.float64)
    cdef double[:, ::1] a = a_arr
    cdef double[:, ::1] v = v_arr
    cdef Py_ssize_t p, q, r
    cdef double apq, app, aqq, theta, t, c, s, arp, arq, floor_abs, norm_f = 0.0
    cdef int sweep = 0, rotated = 1
    cdef bint converged = False

    for p in range(n):
        for q in range(n):
            norm_f += a[p, q] * a[p, q]
    norm_f = sqrt(norm_f)
    floor_abs = 1e-2 * DBL_EPSILON * norm_f / (n if n > 0 else 1)

    while sweep < max_sweeps:
        rotated = 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                if fabs(apq) <= DBL_EPSILON * sqrt(fabs(app) * fabs(aqq)) or fabs(apq) <= floor_abs:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                rotated += 1
                theta = (aqq - app) / (2.0 * apq)
                t = copysign(1.0, theta) / (fabs(theta) + hypot(1.0, theta))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for r in range(n):
                    if r != p and r != q:
                        arp = a[r, p]
                        arq = a[r, q]
                        a[r, p] = c * arp - s * arq
                        a[p, r] = a[r, p]
                        a[r, q] = s * arp + c * arq
                        a[q, r] = a[r, q]
                for r in range(n):
                    arp = v[r, p]
                    arq = v[r, q]
                    v[r, p] = c * arp - s * arq
                    v[r, q] = s * arp + c * arq
        sweep += 1
        if rotated == 0:
            converged = True
            break

    diag = np.array([a[p, p] for p in range(n)], dtype=np.float64)
    return diag, v_arr, sweep, converged


def jacobi_svd(double[:, ::1] g_in, int max_sweeps=30):
    """One-sided (Hestenes) Jacobi on the columns of a tall block.

    Returns ``(G, V, sweeps, converged)`` with ``G = B V`` having mutually
    orthogonal columns; singular values are the column norms of ``G``.
    """
    cdef Py_ssize_t m = g_in.shape[0]
    cdef Py_ssize_t n = g_in.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] g_arr = np.array(g_in, dtype=np.float64, order="C")
    cdef cnp.ndarray[cnp.float64_t, ndim=2] v_arr = np.eye(n, dtype=np.float64)
    cdef double[:, ::1] g = g_arr
    cdef double[:, ::1] v = v_arr
    cdef Py_ssize_t p, q, i
    cdef double alpha, beta, gamma, zeta, t, c, s, gp, gq
    cdef double tol = sqrt(<double>m) * DBL_EPSILON
    cdef int sweep = 0, rotated = 1
    cdef bint converged = False

    while sweep < max_sweeps:
        rotated = 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = 0.0
                beta = 0.0
                gamma = 0.0
                for i in range(m):
                    alpha += g[i, p] * g[i, p]
                    beta += g[i, q] * g[i, q]
                    gamma += g[i, p] * g[i, q]
                if alpha == 0.0 or beta == 0.0:
                    continue
                if fabs(gamma) <= tol * sqrt(alpha) * sqrt(beta):
                    continue
                rotated += 1
                zeta = (beta - alpha) / (2.0 * gamma)
                t = copysign(1.0, zeta) / (fabs(zeta) + hypot(1.0, zeta))
                c = 1.0 / sqrt(1.0 + t * t)
                s = c * t
                for i in range(m):
                    gp = g[i, p]
                    gq = g[i, q]
                    g[i, p] = c * gp - s * gq
                    g[i, q] = s * gp + c * gq
                for i in range(n):
                    gp = v[i, p]
                    gq = v[i, q]
                    v[i, p] = c * gp - s * gq
                    v[i, q] = s * gp + c * gq
        sweep += 1
        if rotated == 0:
            converged = True
            break

    return g_arr, v_arr, sweep, converged
