"""Seeded instance descriptions and their realization as ``(A, X, Y)``."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace
from typing import Literal

import numpy as np

from ..bounds import get_spec
from ..errors import InvalidInput
from ..linalg import orthonormalize
from ..subspaces import Subspace

XKind = Literal["contiguous-top", "contiguous-bottom", "invariant-random", "arbitrary"]
YKind = Literal["perturb", "planted-angles", "random"]
X_KINDS: tuple[str, ...] = ("contiguous-top", "contiguous-bottom", "invariant-random", "arbitrary")
Y_KINDS: tuple[str, ...] = ("perturb", "planted-angles", "random")
REGIMES: tuple[str, ...] = ("auto", "n4", "small", "contiguous-top")


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    dim_x: int
    dim_y: int
    spectrum: tuple[float, ...]
    x_kind: XKind = "contiguous-top"
    y_kind: YKind = "perturb"
    eps: float = 0.1
    angles: tuple[float, ...] | None = None
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.dim_x <= self.dim_y <= self.n:
            raise InvalidInput(f"need 1 <= dim_x <= dim_y <= n, got {self.dim_x}, {self.dim_y}, {self.n}")
        spec = tuple(float(v) for v in self.spectrum)
        if len(spec) != self.n:
            raise InvalidInput(f"spectrum has {len(spec)} values for n={self.n}")
        if any(a < b for a, b in zip(spec, spec[1:])) or not all(math.isfinite(v) for v in spec):
            raise InvalidInput("spectrum must be finite and decreasing")
        object.__setattr__(self, "spectrum", spec)
        if self.x_kind not in X_KINDS:
            raise InvalidInput(f"unknown x_kind {self.x_kind!r}")
        if self.y_kind not in Y_KINDS:
            raise InvalidInput(f"unknown y_kind {self.y_kind!r}")
        if self.y_kind == "planted-angles":
            if self.dim_x != self.dim_y or self.n < 2 * self.dim_x:
                raise InvalidInput("planted angles need dim_x == dim_y and n >= 2*dim_x")
            if self.angles is None or len(self.angles) != self.dim_x:
                raise InvalidInput(f"planted angles need {self.dim_x} target angles")
            ang = tuple(float(t) for t in self.angles)
            if any(not 0.0 <= t <= math.pi / 2 for t in ang):
                raise InvalidInput("planted angles must lie in [0, pi/2]")
            object.__setattr__(self, "angles", ang)
        elif self.angles is not None:
            object.__setattr__(self, "angles", tuple(float(t) for t in self.angles))
        if self.y_kind == "perturb" and not (self.eps >= 0 and math.isfinite(self.eps)):
            raise InvalidInput("perturbation size must be finite and nonnegative")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["spectrum"] = list(self.spectrum)
        d["angles"] = None if self.angles is None else list(self.angles)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "InstanceSpec":
        d = dict(d)
        d["spectrum"] = tuple(d["spectrum"])
        if d.get("angles") is not None:
            d["angles"] = tuple(d["angles"])
        return cls(**d)


def random_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed orthogonal matrix (QR of a Gaussian with sign fix)."""
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.where(np.diag(r) < 0, -1.0, 1.0)


def _complement_block(xb: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((xb.shape[0], k))
    for _ in range(2):
        g -= xb @ (xb.T @ g)
    w = orthonormalize(g)
    if w.shape[1] != k:
        raise InvalidInput("could not build an orthogonal complement block")
    return w


def generate(spec: InstanceSpec) -> tuple[np.ndarray, Subspace, Subspace]:
    """Realize ``spec``: ``A = Q diag(spectrum) Q^T`` with X and Y built from seeded draws."""
    rng = np.random.default_rng(spec.seed)
    n, p, q = spec.n, spec.dim_x, spec.dim_y
    qmat = random_orthogonal(n, rng)
    a = (qmat * np.asarray(spec.spectrum)) @ qmat.T
    a = 0.5 * (a + a.T)

    if spec.x_kind == "contiguous-top":
        xb = qmat[:, :p]
    elif spec.x_kind == "contiguous-bottom":
        xb = qmat[:, n - p:]
    elif spec.x_kind == "invariant-random":
        xb = qmat[:, np.sort(rng.choice(n, size=p, replace=False))]
    else:
        xb = random_orthogonal(n, rng)[:, :p]
    x = Subspace(orthonormalize(xb))
    xb = x.basis

    if spec.y_kind == "planted-angles":
        theta = np.asarray(spec.angles)
        w = _complement_block(xb, p, rng)
        yb = xb * np.cos(theta) + w * np.sin(theta)
        # already orthonormal to rounding; re-orthonormalizing would blur tiny angles
        y = Subspace(yb)
    elif spec.y_kind == "perturb":
        base = xb if q == p else np.hstack([xb, _complement_block(xb, q - p, rng)])
        y = Subspace(orthonormalize(base + spec.eps * rng.standard_normal((n, q))))
        if y.dim != q:
            raise InvalidInput("perturbed basis lost rank")
    else:
        y = Subspace(random_orthogonal(n, rng)[:, :q])
    return a, x, y


# ----- sampling instance specs for suites and searches -----

def trial_seed(seed: int, trial: int, stream: int = 0) -> int:
    """Independent per-trial seed so results do not depend on evaluation order."""
    return int(np.random.SeedSequence([seed, stream, trial]).generate_state(1)[0])


def random_spectrum(n: int, rng: np.random.Generator, dim_x: int, positive: bool = False) -> tuple[float, ...]:
    vals = rng.uniform(-1.0, 1.0, n)
    if rng.random() < 0.2:
        vals = np.round(vals, 1)  # repeated eigenvalues
    vals = -np.sort(-vals)
    if rng.random() < 0.3 and dim_x < n:
        vals[:dim_x] += rng.uniform(0.0, 2.0)
    if positive:
        vals = vals - vals[-1] + rng.uniform(1e-2, 1.0)
    return tuple(float(v) for v in vals)


def _x_kind_for(bound_id: str, rng: np.random.Generator) -> str:
    need = get_spec(bound_id).x_needs
    if need == "top":
        return "contiguous-top"
    if need == "bottom":
        return "contiguous-bottom"
    if need == "contiguous-either":
        return str(rng.choice(["contiguous-top", "contiguous-bottom"]))
    if need == "invariant-either":
        return str(rng.choice(["contiguous-top", "contiguous-bottom", "invariant-random"]))
    return str(rng.choice(X_KINDS))


def _random_angles(p: int, rng: np.random.Generator) -> tuple[float, ...]:
    scale = 10.0 ** rng.uniform(-6, 0)
    return tuple(float(t) for t in np.minimum(rng.uniform(0, 1, p) * scale * math.pi / 2, math.pi / 2))


def sample_spec(bound_id: str, seed: int, regime: str = "auto", n_max: int = 12) -> InstanceSpec:
    """Draw an instance aimed at the hypotheses of ``bound_id``.

    ``regime`` narrows the draw: ``n4`` fixes ``n=4, dim X=dim Y=2``,
    ``small`` caps ``n`` at 6, ``contiguous-top`` forces a top-invariant X.
    """
    if regime not in REGIMES:
        raise InvalidInput(f"unknown regime {regime!r}; known: {', '.join(REGIMES)}")
    bspec = get_spec(bound_id)
    rng = np.random.default_rng(seed)
    if regime == "small":
        n_max = min(n_max, 6)
    if regime == "n4":
        n, p, q = 4, 2, 2
    else:
        n = int(rng.integers(2, n_max + 1))
        p = int(rng.integers(1, n // 2 + 1))
        q = p if bspec.equal_dims else int(rng.integers(p, n + 1))
    x_kind = "contiguous-top" if regime == "contiguous-top" else _x_kind_for(bound_id, rng)
    if regime == "n4" and bspec.x_needs == "none":
        x_kind = str(rng.choice(["contiguous-top", "arbitrary"]))
    y_choices = ["perturb", "random"] + (["planted-angles"] if p == q and n >= 2 * p else [])
    y_kind = str(rng.choice(y_choices))
    return InstanceSpec(
        n=n, dim_x=p, dim_y=q,
        spectrum=random_spectrum(n, rng, p, positive=bspec.positive_definite),
        x_kind=x_kind, y_kind=y_kind,
        eps=float(10.0 ** rng.uniform(-6, 0.5)),
        angles=_random_angles(p, rng) if y_kind == "planted-angles" else None,
        seed=int(rng.integers(0, 2**31 - 1)),
    )


def shrink_candidates(spec: InstanceSpec, rng: np.random.Generator) -> list[InstanceSpec]:
    """Smaller variants of ``spec``: halve ``n`` toward 4, then halve eps or angles."""
    out = []
    if spec.n > 4:
        n = max(4, spec.n // 2)
        p = min(spec.dim_x, n // 2) if spec.y_kind == "planted-angles" else min(spec.dim_x, n)
        q = p if spec.dim_y == spec.dim_x else min(max(spec.dim_y, p), n)
        lo, hi = min(spec.spectrum), max(spec.spectrum)
        spectrum = tuple(float(v) for v in -np.sort(-rng.uniform(lo, hi, n)))
        if lo > 0:
            spectrum = tuple(max(v, lo) for v in spectrum)
        angles = spec.angles[:p] if spec.angles is not None else None
        out.append(replace(spec, n=n, dim_x=p, dim_y=q, spectrum=spectrum, angles=angles,
                           seed=int(rng.integers(0, 2**31 - 1))))
    if spec.y_kind == "perturb" and spec.eps > 1e-12:
        out.append(replace(spec, eps=spec.eps / 2))
    if spec.y_kind == "planted-angles" and spec.angles and max(spec.angles) > 1e-12:
        out.append(replace(spec, angles=tuple(t / 2 for t in spec.angles)))
    return out

