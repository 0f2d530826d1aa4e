"""Subspaces as orthonormal bases, principal angles, sums and invariance tests."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import InvalidInput
from .linalg import cholesky, eigvals, orthonormalize, singular_values
from .linalg.dense import RANK_TOL, as_block, as_symmetric
from .majorization import sort_desc

ORTHO_TOL = 1e-10
TOL_INV = 1e-8

InvariantClass = Literal["not-invariant", "invariant", "contiguous-top", "contiguous-bottom"]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A ``p``-dimensional subspace of R^n held as an ``n x p`` orthonormal basis."""

    basis: np.ndarray

    def __post_init__(self):
        b = as_block(self.basis, "basis")
        n, p = b.shape
        if p > n:
            raise InvalidInput(f"basis has more columns ({p}) than rows ({n})")
        err = np.linalg.norm(b.T @ b - np.eye(p))
        if err > ORTHO_TOL:
            raise InvalidInput(f"basis columns are not orthonormal (||B^T B - I||_F = {err:.2e})")
        b = b.copy()
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @classmethod
    def span(cls, vectors, rank_tol: float = RANK_TOL) -> "Subspace":
        """Subspace spanned by the columns of ``vectors`` (any basis)."""
        return cls(orthonormalize(vectors, rank_tol))

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.T

    def __repr__(self):
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def _check_pair(x: Subspace, y: Subspace):
    if x.ambient_dim != y.ambient_dim:
        raise InvalidInput(f"ambient dimensions differ: {x.ambient_dim} vs {y.ambient_dim}")
    if x.dim > y.dim:
        raise InvalidInput(f"angles are taken from the smaller subspace: dim X={x.dim} > dim Y={y.dim}")


def _angles_from_bases(xb: np.ndarray, yb: np.ndarray) -> np.ndarray:
    proj = yb.T @ xb
    cos = np.sort(np.clip(singular_values(proj), 0.0, 1.0))
    sin = sort_desc(np.clip(singular_values(xb - yb @ proj), 0.0, 1.0))
    # cosines lose all accuracy below sqrt(eps); use the sine where the angle is small
    theta = np.where(cos * cos >= 0.5, np.arcsin(sin), np.arccos(cos))
    return sort_desc(np.clip(theta, 0.0, math.pi / 2))


def angles(x: Subspace, y: Subspace) -> np.ndarray:
    """Principal angles from ``x`` to ``y`` (``dim x`` values, decreasing)."""
    _check_pair(x, y)
    return _angles_from_bases(x.basis, y.basis)


def angles_weighted(x: Subspace, y: Subspace, a) -> np.ndarray:
    """Principal angles from ``x`` to ``y`` in the scalar product ``(u, A v)``.

    With ``A = L L^T`` the ``A``-product becomes Euclidean after mapping by
    ``L^T``; the mapped bases are re-orthonormalized before the angle kernel.
    """
    _check_pair(x, y)
    low = cholesky(a)
    if low.shape[0] != x.ambient_dim:
        raise InvalidInput("operator and subspaces have different dimensions")
    xa = orthonormalize(low.T @ x.basis)
    ya = orthonormalize(low.T @ y.basis)
    if xa.shape[1] != x.dim or ya.shape[1] != y.dim:
        raise InvalidInput("operator is too ill-conditioned to preserve subspace dimensions")
    return _angles_from_bases(xa, ya)


def subspace_sum(x: Subspace, y: Subspace) -> Subspace:
    if x.ambient_dim != y.ambient_dim:
        raise InvalidInput(f"ambient dimensions differ: {x.ambient_dim} vs {y.ambient_dim}")
    return Subspace(orthonormalize(np.hstack([x.basis, y.basis])))


def is_invariant(x: Subspace, a, tol_inv: float = TOL_INV) -> tuple[bool, float]:
    """Return ``(invariant, residual)`` with residual ``||A X - X (X^T A X)||_F``."""
    a = as_symmetric(a)
    if a.shape[0] != x.ambient_dim:
        raise InvalidInput("operator and subspace have different dimensions")
    ax = a @ x.basis
    residual = float(np.linalg.norm(ax - x.basis @ (x.basis.T @ ax)))
    return residual <= tol_inv * float(np.linalg.norm(a)), residual


@dataclass(frozen=True)
class Classification:
    invariant: bool
    top: bool
    bottom: bool
    residual: float

    @property
    def label(self) -> InvariantClass:
        if not self.invariant:
            return "not-invariant"
        if self.top:
            return "contiguous-top"
        if self.bottom:
            return "contiguous-bottom"
        return "invariant"


def classify(x: Subspace, a, ctx: Subspace | None = None, tol: float = TOL_INV) -> Classification:
    """Invariance and contiguity of ``x`` for the compression of ``A`` to ``ctx``.

    ``ctx`` defaults to the whole space.  Passing the sum space ``X + Y``
    classifies ``x`` for the reduced operator used throughout the bounds.
    """
    a = as_symmetric(a)
    if ctx is None:
        a_ctx, x_ctx = a, x.basis
    else:
        if ctx.ambient_dim != x.ambient_dim:
            raise InvalidInput("context and subspace have different ambient dimensions")
        z = ctx.basis
        x_ctx = z.T @ x.basis
        if np.linalg.norm(x.basis - z @ x_ctx) > ORTHO_TOL * max(1, x.dim):
            raise InvalidInput("subspace is not contained in the context subspace")
        a_ctx = z.T @ a @ z
        a_ctx = 0.5 * (a_ctx + a_ctx.T)
        x_ctx = orthonormalize(x_ctx)
    inv, residual = is_invariant(Subspace(x_ctx), a_ctx, tol)
    if not inv:
        return Classification(False, False, False, residual)
    p = x.dim
    ritz_x = eigvals(x_ctx.T @ a_ctx @ x_ctx)
    full = eigvals(a_ctx)
    scale = tol * max(float(np.linalg.norm(a_ctx)), np.finfo(float).tiny)
    top = bool(np.max(np.abs(ritz_x - full[:p])) <= scale)
    bottom = bool(np.max(np.abs(ritz_x - full[-p:])) <= scale)
    return Classification(True, top, bottom, residual)


def invariant_class(x: Subspace, a, ctx: Subspace | None = None, tol: float = TOL_INV) -> InvariantClass:
    return classify(x, a, ctx, tol).label


# Cross-checks that materialize orthoprojectors; only used to validate angles().

def sines_from_projector_product(x: Subspace, y: Subspace) -> np.ndarray:
    """Largest ``dim x`` singular values of ``P_{X^perp} P_Y``."""
    n = x.ambient_dim
    s = singular_values((np.eye(n) - x.projector()) @ y.projector())
    return s[: x.dim]


def sines_from_projector_difference(x: Subspace, y: Subspace) -> np.ndarray:
    """Largest ``dim x`` eigenvalues of ``P_X - P_Y``."""
    return eigvals(x.projector() - y.projector())[: x.dim]


def nonzero_angle_count(x: Subspace, y: Subspace, tol: float = 1e-8) -> int:
    return int(np.count_nonzero(angles(x, y) > tol))

