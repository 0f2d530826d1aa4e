"""Weak, strong and multiplicative majorization with per-prefix margins.

``x ≺_w y`` means every prefix sum of ``sort_desc(x)`` is bounded by the
matching prefix sum of ``sort_desc(y)``.  Margins are reported as
``rhs prefix - lhs prefix`` so that negative entries locate violations.

Tolerances are relative: prefix ``k`` passes when its margin is at least
``-tol * (1 + k * scale)`` where ``scale`` is ``max|y|`` (or ``max|log y|``
for the multiplicative relations).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import ConventionViolation, InvalidInput

TOL_MAJ = 1e-9
LOG_FLOOR = -745.0

Relation = Literal["weak", "strong", "log-weak", "log-strong"]


@dataclass(frozen=True)
class MajorizationVerdict:
    relation: Relation
    holds: bool
    prefix_margins: np.ndarray = field(repr=False)
    # prefix length (1-based) with the smallest margin; 0 for empty input
    worst_k: int = 0

    @property
    def min_margin(self) -> float:
        return float(self.prefix_margins.min()) if self.prefix_margins.size else 0.0


def sort_desc(x) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64).ravel()
    return -np.sort(-arr, kind="stable")


def _as_vec(x, name):
    arr = np.asarray(x, dtype=np.float64).ravel()
    if np.isnan(arr).any():
        raise InvalidInput(f"{name} contains NaN")
    return arr


def _pad_pair(x, y, tol):
    if x.size == y.size:
        return x, y
    if (x < -tol).any() or (y < -tol).any():
        raise ConventionViolation(
            "vectors of different lengths are compared by appending zeros, "
            "which is only valid for nonnegative entries"
        )
    size = max(x.size, y.size)
    return np.pad(x, (0, size - x.size)), np.pad(y, (0, size - y.size))


def _verdict(relation, margins, thresholds, strong):
    if margins.size == 0:
        return MajorizationVerdict(relation, True, margins, 0)
    holds = bool(np.all(margins >= -thresholds))
    if strong:
        holds = holds and bool(abs(margins[-1]) <= thresholds[-1])
    return MajorizationVerdict(relation, holds, margins, int(np.argmin(margins)) + 1)


def _additive(x, y, tol, strong):
    x = _as_vec(x, "x")
    y = _as_vec(y, "y")
    x, y = _pad_pair(x, y, tol)
    margins = np.cumsum(sort_desc(y)) - np.cumsum(sort_desc(x))
    k = np.arange(1, x.size + 1)
    scale = float(np.max(np.abs(y))) if y.size else 0.0
    return _verdict("strong" if strong else "weak", margins, tol * (1.0 + scale * k), strong)


def weak_majorizes(x, y, tol: float = TOL_MAJ) -> MajorizationVerdict:
    """Verdict for ``x ≺_w y``; unequal lengths are zero-padded (nonnegative only)."""
    return _additive(x, y, tol, strong=False)


def strong_majorizes(x, y, tol: float = TOL_MAJ) -> MajorizationVerdict:
    """Verdict for ``x ≺ y``: weak majorization plus equal totals."""
    return _additive(x, y, tol, strong=True)


def _safe_log(v):
    with np.errstate(divide="ignore"):
        return np.maximum(np.log(v), LOG_FLOOR)


def _log_scale(logs):
    finite = np.abs(logs[logs > LOG_FLOOR])
    return float(finite.max()) if finite.size else 0.0


def _multiplicative(x, y, tol, strong):
    x = _as_vec(x, "x")
    y = _as_vec(y, "y")
    if (x < 0).any() or (y < 0).any():
        raise InvalidInput("multiplicative majorization needs nonnegative vectors")
    x, y = _pad_pair(x, y, tol)
    lx = _safe_log(sort_desc(x))
    ly = _safe_log(sort_desc(y))
    margins = np.cumsum(ly) - np.cumsum(lx)
    k = np.arange(1, x.size + 1)
    thresholds = tol * (1.0 + _log_scale(ly) * k)
    relation = "log-strong" if strong else "log-weak"
    verdict = _verdict(relation, margins, thresholds, strong=False)
    if strong and margins.size:
        both_zero = (lx <= LOG_FLOOR).any() and (ly <= LOG_FLOOR).any()
        total_ok = both_zero or abs(margins[-1]) <= thresholds[-1]
        verdict = MajorizationVerdict(relation, verdict.holds and total_ok, margins, verdict.worst_k)
    return verdict


def log_weak_majorizes(x, y, tol: float = TOL_MAJ) -> MajorizationVerdict:
    """Verdict for ``log x ≺_w log y``, i.e. prefix products of nonnegative vectors."""
    return _multiplicative(x, y, tol, strong=False)


def log_strong_majorizes(x, y, tol: float = TOL_MAJ) -> MajorizationVerdict:
    return _multiplicative(x, y, tol, strong=True)


def log_diff_majorizes(x, y, z, strong: bool = True, tol: float = TOL_MAJ,
                       zero_tol: float = 1e-10) -> MajorizationVerdict:
    """Verdict for ``log x - log y ≺ log z`` (or ``≺_w``) on nonnegative vectors.

    Read in product form: for every ``k`` and every index set ``i_1<...<i_k``,
    ``prod x_{i_j} <= prod_{j<=k} z_j * y_{i_j}``, with equality of the full
    products in the strong case.  Entries below ``zero_tol`` times the vector's
    maximum count as exact zeros, so rank-deficient products are handled
    without taking logs of rounding noise.
    """
    vecs = [_as_vec(v, name) for v, name in ((x, "x"), (y, "y"), (z, "z"))]
    if any((v < 0).any() for v in vecs):
        raise InvalidInput("log_diff_majorizes needs nonnegative vectors")
    size = max(v.size for v in vecs)
    x, y, z = (sort_desc(np.pad(v, (0, size - v.size))) for v in vecs)

    def zeros(v):
        top = v.max() if v.size else 0.0
        return v <= zero_tol * top if top > 0 else np.ones_like(v, dtype=bool)

    x0, y0, z0 = zeros(x), zeros(y), zeros(z)
    relation = "log-strong" if strong else "log-weak"
    # y_i = 0 forces x_i = 0 (s_i(AB) <= |A| s_i(B)); such indices add nothing
    if (~x0 & y0).any():
        return MajorizationVerdict(relation, False, np.array([-np.inf]), 1)
    keep = ~y0
    with np.errstate(divide="ignore"):
        d = np.where(x0[keep], -np.inf, np.log(np.where(x0, 1.0, x))[keep] - np.log(y[keep]))
        lz = np.where(z0, -np.inf, np.log(np.where(z0, 1.0, z)))
    d = sort_desc(d)
    kmax = d.size
    lhs = np.cumsum(d)
    rhs = np.cumsum(lz)[:kmax]
    margins = np.empty(kmax)
    for i in range(kmax):
        if lhs[i] == -np.inf:
            margins[i] = np.inf if rhs[i] > -np.inf else 0.0
        elif rhs[i] == -np.inf:
            margins[i] = -np.inf
        else:
            margins[i] = rhs[i] - lhs[i]
    scale = _log_scale(np.where(np.isfinite(lz), lz, 0.0))
    thresholds = tol * (1.0 + scale * np.arange(1, kmax + 1))
    verdict = _verdict(relation, margins, thresholds, strong=False)
    if not strong:
        return verdict
    if x0.any() or y0.any() or z0.any():
        total_ok = bool(x0.any()) == bool(y0.any() or z0.any())
    else:
        total = np.log(z).sum() + np.log(y).sum() - np.log(x).sum()
        total_ok = abs(total) <= tol * (1.0 + scale * size)
    return MajorizationVerdict(relation, verdict.holds and total_ok, margins, verdict.worst_k)
