"""Pure-Python Jacobi kernels, used when the compiled extension is absent.

Same algorithms and stopping rules as ``_kernels.pyx``; row/column updates
are vectorized with numpy but the rotation loop is interpreted.
"""
import math

import numpy as np

_EPS = np.finfo(np.float64).eps


def jacobi_eigh(a_in, max_sweeps=30):
    a = np.array(a_in, dtype=np.float64, order="C")
    n = a.shape[0]
    v = np.eye(n)
    norm_f = math.sqrt(float(np.sum(a * a)))
    floor_abs = 1e-2 * _EPS * norm_f / max(n, 1)
    sweep = 0
    converged = False
    while sweep < max_sweeps:
        rotated = 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                if abs(apq) <= _EPS * math.sqrt(abs(app) * abs(aqq)) or abs(apq) <= floor_abs:
                    a[p, q] = a[q, p] = 0.0
                    continue
                rotated += 1
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                new_p = c * col_p - s * col_q
                new_q = s * col_p + c * col_q
                a[:, p] = new_p
                a[p, :] = new_p
                a[:, q] = new_q
                a[q, :] = new_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        sweep += 1
        if rotated == 0:
            converged = True
            break
    return np.diagonal(a).copy(), v, sweep, converged


def jacobi_svd(g_in, max_sweeps=30):
    g = np.array(g_in, dtype=np.float64, order="C")
    m, n = g.shape
    v = np.eye(n)
    tol = math.sqrt(m) * _EPS
    sweep = 0
    converged = False
    while sweep < max_sweeps:
        rotated = 0
        for p in range(n - 1):
            gp_col = g[:, p]
            for q in range(p + 1, n):
                gq_col = g[:, q]
                alpha = float(gp_col @ gp_col)
                beta = float(gq_col @ gq_col)
                gamma = float(gp_col @ gq_col)
                if alpha == 0.0 or beta == 0.0:
                    continue
                if abs(gamma) <= tol * math.sqrt(alpha) * math.sqrt(beta):
                    continue
                rotated += 1
                zeta = (beta - alpha) / (2.0 * gamma)
                t = math.copysign(1.0, zeta) / (abs(zeta) + math.hypot(1.0, zeta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = c * t
                gp = gp_col.copy()
                g[:, p] = c * gp - s * gq_col
                g[:, q] = s * gp + c * gq_col
                vp = v[:, p].copy()
                v[:, p] = c * vp - s * v[:, q]
                v[:, q] = s * vp + c * v[:, q]
        sweep += 1
        if rotated == 0:
            converged = True
            break
    return g, v, sweep, converged
