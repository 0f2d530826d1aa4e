"""Dense kernels built on the Jacobi backends.

Everything here works on plain ``numpy`` float arrays and returns fresh
arrays; nothing is modified in place.
"""
from __future__ import annotations

import numpy as np

from .. import errors
from . import _backend

TOL_SYM = 1e-10
TOL_PSD = 1e-10
TOL_PD = 1e-12
RANK_TOL = 1e-12
MAX_SWEEPS = 30


def as_block(b, name: str = "block") -> np.ndarray:
    arr = np.array(b, dtype=np.float64, ndmin=2)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise errors.InvalidInput(f"{name} must be a non-empty 2-D array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise errors.InvalidInput(f"{name} has non-finite entries")
    return arr


def as_symmetric(m, tol_sym: float = TOL_SYM, name: str = "matrix") -> np.ndarray:
    """Validate a square symmetric matrix and return its exact symmetric part."""
    arr = as_block(m, name)
    if arr.shape[0] != arr.shape[1]:
        raise errors.InvalidInput(f"{name} must be square, got shape {arr.shape}")
    norm = np.linalg.norm(arr)
    if np.max(np.abs(arr - arr.T)) > tol_sym * norm:
        raise errors.InvalidInput(f"{name} is not symmetric within {tol_sym:g}*||M||_F")
    return 0.5 * (arr + arr.T)


def sym_eig(m, tol_sym: float = TOL_SYM) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi.

    Returns ``(lam, V)`` with ``lam`` decreasing and ``M V = V diag(lam)``.
    Ties keep the order in which the kernel produced them.
    """
    a = as_symmetric(m, tol_sym)
    diag, v, _, converged = _backend.jacobi_eigh(np.ascontiguousarray(a), MAX_SWEEPS)
    if not converged:
        raise errors.NumericalFailure(f"Jacobi eigensolver did not converge in {MAX_SWEEPS} sweeps")
    order = np.argsort(-diag, kind="stable")
    return diag[order], v[:, order]


def eigvals(m, tol_sym: float = TOL_SYM) -> np.ndarray:
    return sym_eig(m, tol_sym)[0]


def _complete_columns(u: np.ndarray, missing: np.ndarray) -> np.ndarray:
    # fill the columns flagged in ``missing`` with unit vectors orthogonal to the rest
    u = u.copy()
    rows = u.shape[0]
    have = [j for j in range(u.shape[1]) if not missing[j]]
    for j in np.flatnonzero(missing):
        for e in range(rows):
            cand = np.zeros(rows)
            cand[e] = 1.0
            for _ in range(2):
                for k in have:
                    cand -= (u[:, k] @ cand) * u[:, k]
            nrm = np.linalg.norm(cand)
            if nrm > 0.5:
                u[:, j] = cand / nrm
                have.append(j)
                break
    return u


def svd(b, compute_uv: bool = True):
    """Thin SVD by one-sided Jacobi.

    Returns ``(s, U, V)`` with ``B = U diag(s) V^T`` (or just ``s``), ``s``
    decreasing and of length ``min(rows, cols)``.  Small singular values are
    accurate to a few ulps of ``s[0]``, which the small-angle path needs.
    """
    g = as_block(b)
    rows, cols = g.shape
    if rows < cols:
        out = svd(g.T, compute_uv)
        if not compute_uv:
            return out
        s, u, v = out
        return s, v, u
    cols_out, v, _, converged = _backend.jacobi_svd(np.ascontiguousarray(g), MAX_SWEEPS)
    if not converged:
        raise errors.NumericalFailure(f"one-sided Jacobi SVD did not converge in {MAX_SWEEPS} sweeps")
    s = np.sqrt(np.einsum("ij,ij->j", cols_out, cols_out))
    order = np.argsort(-s, kind="stable")
    s = s[order]
    if not compute_uv:
        return s
    cols_out = cols_out[:, order]
    v = v[:, order]
    zero = s == 0.0
    u = np.zeros_like(cols_out)
    u[:, ~zero] = cols_out[:, ~zero] / s[~zero]
    if zero.any():
        u = _complete_columns(u, zero)
    return s, u, v


def singular_values(b) -> np.ndarray:
    return svd(b, compute_uv=False)


def orthonormalize(b, rank_tol: float = RANK_TOL) -> np.ndarray:
    """Orthonormal basis for ``range(B)``; column count is the numerical rank."""
    g = as_block(b)
    s, u, _ = svd(g)
    if s.size == 0 or s[0] == 0.0:
        raise errors.RankDeficient("cannot orthonormalize a zero block")
    rank = int(np.count_nonzero(s > rank_tol * s[0]))
    return u[:, :rank].copy()


def sqrt_psd(m, tol_psd: float = TOL_PSD) -> np.ndarray:
    """Symmetric PSD square root; eigenvalues within tolerance of 0 are clamped."""
    a = as_symmetric(m)
    lam, v = sym_eig(a)
    norm = np.linalg.norm(a)
    if lam[-1] < -tol_psd * norm:
        raise errors.NotPSD(f"smallest eigenvalue {lam[-1]:.3e} below -{tol_psd:g}*||M||_F")
    r = (v * np.sqrt(np.clip(lam, 0.0, None))) @ v.T
    return 0.5 * (r + r.T)


def cholesky(m, tol_pd: float = TOL_PD) -> np.ndarray:
    """Lower-triangular ``L`` with ``L L^T = M``."""
    a = as_symmetric(m)
    n = a.shape[0]
    floor = tol_pd * np.linalg.norm(a)
    low = np.zeros_like(a)
    for j in range(n):
        row = low[j, :j]
        d = a[j, j] - row @ row
        if not d > floor:
            raise errors.NotPD(f"pivot {j} is {d:.3e}, not above {floor:.3e}")
        low[j, j] = np.sqrt(d)
        if j + 1 < n:
            low[j + 1:, j] = (a[j + 1:, j] - low[j + 1:, :j] @ row) / low[j, j]
    return low
