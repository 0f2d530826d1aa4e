"""Oracle checks for classical eigenvalue and singular value majorizations.

Each kind takes plain matrices and returns the :class:`MajorizationVerdict`
of the inequality it names.  Rectangular factors are treated as if padded
with zero blocks to a common square size, which amounts to appending zeros
to singular value vectors.
"""
from __future__ import annotations

from typing import Literal

import numpy as np

from .errors import InvalidInput
from .linalg import eigvals, singular_values, sqrt_psd
from .linalg.dense import as_block, as_symmetric
from .majorization import TOL_MAJ, MajorizationVerdict, log_diff_majorizes, strong_majorizes, weak_majorizes

ClassicalKind = Literal["lidskii", "gelfand-naimark", "sv-product", "three-factor",
                        "pinching-weak", "pinching-strong"]
CLASSICAL_KINDS: tuple[str, ...] = ("lidskii", "gelfand-naimark", "sv-product", "three-factor",
                                    "pinching-weak", "pinching-strong")
ARITY = {"lidskii": 2, "gelfand-naimark": 2, "sv-product": 2, "three-factor": 3,
         "pinching-weak": 5, "pinching-strong": 3}


def _pad(v: np.ndarray, size: int) -> np.ndarray:
    return np.pad(v, (0, size - v.size))


def _matmul(*mats: np.ndarray) -> np.ndarray:
    out = mats[0]
    for m in mats[1:]:
        if out.shape[1] != m.shape[0]:
            raise InvalidInput(f"cannot multiply {out.shape} by {m.shape}")
        out = out @ m
    return out


def _lidskii(a, b, tol):
    a = as_symmetric(a, name="A")
    b = as_symmetric(b, name="B")
    if a.shape != b.shape:
        raise InvalidInput(f"A is {a.shape} but B is {b.shape}")
    return strong_majorizes(eigvals(a) - eigvals(b), eigvals(a - b), tol)


def _square_size(*mats) -> int:
    return max(max(m.shape) for m in mats)


def _padded_sv(m: np.ndarray, size: int) -> np.ndarray:
    return _pad(singular_values(m), size)


def _gelfand_naimark(a, b, tol):
    ab = _matmul(a, b)
    n = _square_size(a, b)
    return log_diff_majorizes(_padded_sv(ab, n), _padded_sv(b, n), _padded_sv(a, n), True, tol)


def _sv_product(a, b, tol):
    sab = singular_values(_matmul(a, b))
    sa, sb = singular_values(a), singular_values(b)
    size = max(sa.size, sb.size)
    return weak_majorizes(sab, _pad(sa, size) * _pad(sb, size), tol)


def _three_factor(a, b, c, tol):
    abc = _matmul(a, b, c)
    n = _square_size(a, b, c)
    return log_diff_majorizes(_padded_sv(abc, n), _padded_sv(b, n),
                              _padded_sv(a, n) * _padded_sv(c, n), True, tol)


def _pinching_weak(a1, a2, b, c1, c2, tol):
    if a1.shape[0] != a2.shape[0] or c1.shape[0] != c2.shape[0]:
        raise InvalidInput("A1, A2 (and C1, C2) must have the same number of rows")
    lhs = np.concatenate([singular_values(_matmul(a1.T, b, c1)), singular_values(_matmul(a2.T, b, c2))])
    ra = sqrt_psd(a1 @ a1.T + a2 @ a2.T)
    rc = sqrt_psd(c1 @ c1.T + c2 @ c2.T)
    return weak_majorizes(lhs, singular_values(_matmul(ra, b, rc)), tol)


def _pinching_strong(a1, a2, b, tol):
    b = as_symmetric(b, name="B")
    if a1.shape[0] != a2.shape[0] or a1.shape[0] != b.shape[0]:
        raise InvalidInput(f"A1 {a1.shape}, A2 {a2.shape} and B {b.shape} are incompatible")
    lhs = np.concatenate([eigvals(a1.T @ b @ a1), eigvals(a2.T @ b @ a2)])
    root = sqrt_psd(a1 @ a1.T + a2 @ a2.T)
    rhs = np.clip(eigvals(root @ b @ root), 0.0, None)
    # lhs may be shorter or longer than n; compare against rhs truncated or zero-extended
    rhs = _pad(rhs[: lhs.size], lhs.size)
    return weak_majorizes(lhs, rhs, tol)


_CHECKS = {
    "lidskii": _lidskii,
    "gelfand-naimark": _gelfand_naimark,
    "sv-product": _sv_product,
    "three-factor": _three_factor,
    "pinching-weak": _pinching_weak,
    "pinching-strong": _pinching_strong,
}


def check_classical(kind: str, *mats, tol: float = TOL_MAJ) -> MajorizationVerdict:
    """Verdict of the classical inequality ``kind`` on ``mats``.

    Argument order: ``lidskii(A, B)``, ``gelfand-naimark(A, B)``,
    ``sv-product(A, B)``, ``three-factor(A, B, C)``,
    ``pinching-weak(A1, A2, B, C1, C2)`` and ``pinching-strong(A1, A2, B)``.
    """
    if kind not in _CHECKS:
        raise InvalidInput(f"unknown kind {kind!r}; known: {', '.join(CLASSICAL_KINDS)}")
    if len(mats) != ARITY[kind]:
        raise InvalidInput(f"{kind} takes {ARITY[kind]} matrices, got {len(mats)}")
    blocks = [as_block(m, f"argument {i}") for i, m in enumerate(mats)]
    return _CHECKS[kind](*blocks, tol)


def random_classical_inputs(kind: str, rng: np.random.Generator, max_dim: int = 6) -> tuple[np.ndarray, ...]:
    """Random matrices of compatible shapes for ``check_classical(kind, ...)``."""
    dims = lambda k: rng.integers(1, max_dim + 1, size=k)  # noqa: E731

    def sym(n):
        g = rng.standard_normal((n, n))
        return g + g.T

    if kind == "lidskii":
        (n,) = dims(1)
        return sym(n), sym(n)
    if kind in ("gelfand-naimark", "sv-product"):
        m, k, n = dims(3)
        return rng.standard_normal((m, k)), rng.standard_normal((k, n))
    if kind == "three-factor":
        m, k, l, n = dims(4)
        return rng.standard_normal((m, k)), rng.standard_normal((k, l)), rng.standard_normal((l, n))
    if kind == "pinching-weak":
        n, p, k1, k2, j1, j2 = dims(6)
        return (rng.standard_normal((n, k1)), rng.standard_normal((n, k2)), rng.standard_normal((n, p)),
                rng.standard_normal((p, j1)), rng.standard_normal((p, j2)))
    if kind == "pinching-strong":
        n, k1, k2 = dims(3)
        return rng.standard_normal((n, k1)), rng.standard_normal((n, k2)), sym(n)
    raise InvalidInput(f"unknown kind {kind!r}")
