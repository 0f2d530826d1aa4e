"""Ritz values, sum-space extremes and the spread vector."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInput
from .linalg import eigvals
from .linalg.dense import as_symmetric
from .subspaces import Subspace, subspace_sum


def _compress(a: np.ndarray, s: Subspace) -> np.ndarray:
    c = s.basis.T @ a @ s.basis
    return 0.5 * (c + c.T)


def ritz_values(a, s: Subspace) -> np.ndarray:
    """Decreasing eigenvalues of ``S^T A S``."""
    a = as_symmetric(a)
    if a.shape[0] != s.ambient_dim:
        raise InvalidInput(f"operator is {a.shape[0]}x{a.shape[0]} but subspace lives in R^{s.ambient_dim}")
    return eigvals(_compress(a, s))


def ritz_top_slice(a, y: Subspace, k: int) -> np.ndarray:
    if not 1 <= k <= y.dim:
        raise InvalidInput(f"k={k} outside 1..{y.dim}")
    return ritz_values(a, y)[:k]


def ritz_bottom_slice(a, y: Subspace, k: int) -> np.ndarray:
    """The ``k`` smallest Ritz values, still in decreasing order."""
    if not 1 <= k <= y.dim:
        raise InvalidInput(f"k={k} outside 1..{y.dim}")
    return ritz_values(a, y)[-k:]


@dataclass(frozen=True)
class RitzSummary:
    ritz_x: np.ndarray
    ritz_y: np.ndarray
    ritz_sum: np.ndarray
    lambda_min_sum: float
    lambda_max_sum: float
    # spread_vec[i] = ritz_sum[i] - ritz_sum[-1-i]; entries past
    # dim(X+Y) - dim(Y) may be negative and always meet a zero sine
    spread_vec: np.ndarray
    sum_space: Subspace = field(repr=False)


def spread_vector(ritz_sum: np.ndarray, k: int) -> np.ndarray:
    m = ritz_sum.size
    idx = np.arange(k)
    return ritz_sum[idx] - ritz_sum[m - 1 - idx]


def ritz_summary(a, x: Subspace, y: Subspace) -> RitzSummary:
    a = as_symmetric(a)
    if x.dim > y.dim:
        raise InvalidInput(f"dim X={x.dim} exceeds dim Y={y.dim}")
    z = subspace_sum(x, y)
    ritz_sum = ritz_values(a, z)
    if ritz_sum.size < x.dim:
        raise InvalidInput("sum space is smaller than X; the bases are inconsistent")
    return RitzSummary(
        ritz_x=ritz_values(a, x),
        ritz_y=ritz_values(a, y),
        ritz_sum=ritz_sum,
        lambda_min_sum=float(ritz_sum[-1]),
        lambda_max_sum=float(ritz_sum[0]),
        spread_vec=spread_vector(ritz_sum, x.dim),
        sum_space=z,
    )
