"""Registry and evaluator for the Rayleigh-Ritz majorization error bounds.

Notation used in the lhs/rhs formulas below, all vectors decreasing:

* ``rx``  Ritz values of A on X (``p`` values), ``ry`` on Y (``q >= p`` values)
* ``top`` / ``bot``  the ``p`` largest / smallest entries of ``ry``
* ``lmin``, ``lmax``  extreme Ritz values on the sum space X + Y
* ``spr``  spread vector on X + Y
* ``s``  sines of the angles from X to Y (A-based angles for ``rel-*``)

Hypotheses about X (invariance, contiguity) are checked for the compression
of A to X + Y, which is the setting the theorems reduce to; an A-invariant X
always passes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

import numpy as np

from .errors import InvalidInput, NotPD
from .linalg import cholesky
from .linalg.dense import as_symmetric
from .majorization import TOL_MAJ, MajorizationVerdict, log_weak_majorizes, sort_desc, weak_majorizes
from .ritz import RitzSummary, ritz_summary
from .subspaces import TOL_INV, Classification, Subspace, angles, angles_weighted, classify

TOL_STRICT = 1e-8

Status = Literal["proven", "conjecture", "known-false"]
BoundRelation = Literal["weak-maj", "log-weak-maj", "componentwise", "scalar-max"]


@dataclass(frozen=True)
class BoundSpec:
    bound_id: str
    status: Status
    relation: BoundRelation
    summary: str
    equal_dims: bool = True
    # which hypothesis X must satisfy on the sum space
    x_needs: Literal["none", "invariant-either", "contiguous-either", "top", "bottom"] = "none"
    strict: bool = False
    positive_definite: bool = False
    # lhs entries must also stay above this value (0 or 1); None means unchecked
    floor: float | None = None
    absolute: bool = False


_SPECS = [
    BoundSpec("ritz-sin", "proven", "weak-maj",
              "|rx - ry| ≺w (lmax - lmin) sin", absolute=True),
    BoundSpec("invariant-sin2", "proven", "weak-maj",
              "|rx - ry| ≺w (lmax - lmin) sin^2, X or Y invariant",
              x_needs="invariant-either", absolute=True),
    BoundSpec("conj-spread-sin", "conjecture", "weak-maj",
              "|rx - ry| ≺w spr * sin", absolute=True),
    BoundSpec("spread-sin2", "proven", "weak-maj",
              "|rx - ry| ≺w spr * sin^2, X or Y contiguous extreme invariant",
              x_needs="contiguous-either", absolute=True),
    BoundSpec("top-sin2", "proven", "weak-maj",
              "0 <= rx - ry ≺w (rx - lmin) sin^2, X top invariant",
              x_needs="top", floor=0.0, absolute=True),
    BoundSpec("top-sin2-max", "proven", "componentwise",
              "0 <= rx - ry <= (rx - lmin) max sin^2, X top invariant",
              x_needs="top", floor=0.0, absolute=True),
    BoundSpec("mult-log-tan", "proven", "log-weak-maj",
              "(rx - lmin)/(ry - lmin) ≺w,log 1 + tan^2, X top invariant",
              x_needs="top", strict=True, floor=1.0),
    BoundSpec("mult-tan2", "proven", "weak-maj",
              "0 <= (rx - ry)/(ry - lmin) ≺w tan^2, X top invariant",
              x_needs="top", strict=True, floor=0.0),
    BoundSpec("nq-sin2", "proven", "weak-maj",
              "0 <= rx - top ≺w (rx - lmin) sin^2, dim X <= dim Y",
              equal_dims=False, x_needs="top", floor=0.0, absolute=True),
    BoundSpec("nq-log-tan", "proven", "log-weak-maj",
              "(rx - lmin)/(top - lmin) ≺w,log 1 + tan^2, dim X <= dim Y",
              equal_dims=False, x_needs="top", strict=True, floor=1.0),
    BoundSpec("nq-tan2", "proven", "weak-maj",
              "0 <= (rx - top)/(top - lmin) ≺w tan^2, dim X <= dim Y",
              equal_dims=False, x_needs="top", strict=True, floor=0.0),
    BoundSpec("nq-max-sin2", "proven", "componentwise",
              "0 <= rx - top <= (rx - lmin) max sin^2, dim X <= dim Y",
              equal_dims=False, x_needs="top", floor=0.0, absolute=True),
    BoundSpec("rel-max-sinA2", "proven", "componentwise",
              "0 <= 1 - rx/bot <= max sin_A^2, A > 0, X bottom invariant",
              equal_dims=False, x_needs="bottom", strict=True, positive_definite=True, floor=0.0),
    BoundSpec("rel-log-tanA", "proven", "log-weak-maj",
              "bot/rx ≺w,log 1 + tan_A^2, A > 0, X bottom invariant",
              equal_dims=False, x_needs="bottom", strict=True, positive_definite=True, floor=1.0),
    BoundSpec("rel-tanA2", "proven", "weak-maj",
              "0 <= bot/rx - 1 ≺w tan_A^2, A > 0, X bottom invariant",
              equal_dims=False, x_needs="bottom", strict=True, positive_definite=True, floor=0.0),
    BoundSpec("conj-spread-sin-divided", "known-false", "weak-maj",
              "|rx - ry| / spr ≺w sin (fails on the n=4 witness)"),
    BoundSpec("rel-sinA2-maj", "known-false", "weak-maj",
              "1 - rx/bot ≺w sin_A^2, A > 0, X bottom invariant (fails on the n=4 witness)",
              equal_dims=False, x_needs="bottom", strict=True, positive_definite=True, floor=0.0),
]

REGISTRY: dict[str, BoundSpec] = {spec.bound_id: spec for spec in _SPECS}
BOUND_IDS: tuple[str, ...] = tuple(REGISTRY)
PROVEN: tuple[str, ...] = tuple(b for b, s in REGISTRY.items() if s.status == "proven")
ABSOLUTE_PROVEN: tuple[str, ...] = tuple(b for b in PROVEN if REGISTRY[b].absolute)


def get_spec(bound_id: str) -> BoundSpec:
    try:
        return REGISTRY[bound_id]
    except KeyError:
        raise InvalidInput(f"unknown bound id {bound_id!r}; known: {', '.join(BOUND_IDS)}") from None


@dataclass(frozen=True)
class BoundReport:
    bound_id: str
    status: Status
    precondition_ok: bool
    reasons: tuple[str, ...]
    lhs: np.ndarray = field(repr=False)
    rhs: np.ndarray = field(repr=False)
    relation: BoundRelation
    holds: bool
    # prefix margins for majorization relations, rhs - lhs for componentwise
    margins: np.ndarray = field(repr=False)
    worst_k: int = 0
    floor_ok: bool = True
    verdict: MajorizationVerdict | None = field(default=None, repr=False)


class Instance:
    """Lazily computed quantities shared by all bounds on one ``(A, X, Y)``."""

    def __init__(self, a, x: Subspace, y: Subspace, tol_inv: float = TOL_INV):
        self.a = as_symmetric(a)
        if self.a.shape[0] != x.ambient_dim or x.ambient_dim != y.ambient_dim:
            raise InvalidInput("operator and subspaces must share one ambient dimension")
        self.x = x
        self.y = y
        self.tol_inv = tol_inv

    @property
    def p(self) -> int:
        return self.x.dim

    @cached_property
    def summary(self) -> RitzSummary:
        return ritz_summary(self.a, self.x, self.y)

    @cached_property
    def theta(self) -> np.ndarray:
        return angles(self.x, self.y)

    @cached_property
    def is_pd(self) -> bool:
        try:
            cholesky(self.a)
        except NotPD:
            return False
        return True

    @cached_property
    def theta_a(self) -> np.ndarray:
        return angles_weighted(self.x, self.y, self.a)

    @cached_property
    def class_x(self) -> Classification:
        return classify(self.x, self.a, self.summary.sum_space, self.tol_inv)

    @cached_property
    def class_y(self) -> Classification:
        return classify(self.y, self.a, self.summary.sum_space, self.tol_inv)

    @cached_property
    def scale(self) -> float:
        s = self.summary
        return s.lambda_max_sum - s.lambda_min_sum


def _preconditions(spec: BoundSpec, inst: Instance, tol_strict: float) -> list[str]:
    reasons = []
    if inst.x.dim > inst.y.dim:
        return [f"dim X={inst.x.dim} > dim Y={inst.y.dim}"]
    if spec.equal_dims and inst.x.dim != inst.y.dim:
        reasons.append(f"needs dim X == dim Y, got {inst.x.dim} and {inst.y.dim}")
        return reasons
    if spec.positive_definite and not inst.is_pd:
        reasons.append("A is not positive definite")
        return reasons
    need = spec.x_needs
    if need == "invariant-either":
        if not (inst.class_x.invariant or inst.class_y.invariant):
            reasons.append("neither X nor Y is invariant on X + Y")
    elif need == "contiguous-either":
        cx, cy = inst.class_x, inst.class_y
        if not (cx.top or cx.bottom or cy.top or cy.bottom):
            reasons.append("neither X nor Y is a contiguous extreme invariant subspace on X + Y")
    elif need == "top" and not inst.class_x.top:
        reasons.append(f"X is {inst.class_x.label} on X + Y, needs contiguous-top")
    elif need == "bottom" and not inst.class_x.bottom:
        reasons.append(f"X is {inst.class_x.label} on X + Y, needs contiguous-bottom")
    if spec.bound_id == "conj-spread-sin-divided":
        if np.any(inst.summary.spread_vec <= tol_strict * max(inst.scale, 1e-300)):
            reasons.append("spread vector has non-positive entries")
    if spec.strict and not reasons:
        theta = inst.theta_a if spec.positive_definite else inst.theta
        if theta.size and theta[0] >= math.pi / 2 - tol_strict:
            reasons.append(f"largest angle {theta[0]:.3e} not below pi/2")
        if not spec.positive_definite:
            gap = inst.summary.ritz_x[-1] - inst.summary.lambda_min_sum
            if not gap > tol_strict * inst.scale:
                reasons.append("smallest Ritz value on X not above lambda_min on X + Y")
    return reasons


def _safe_div(num, den):
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(den > 0, num / np.where(den > 0, den, 1.0), np.inf)
    return out


def _sides(bound_id: str, inst: Instance) -> tuple[np.ndarray, np.ndarray]:
    s = inst.summary
    p = inst.p
    rx, ry = s.ritz_x, s.ritz_y
    lmin, lmax = s.lambda_min_sum, s.lambda_max_sum
    if bound_id.startswith("rel-"):
        theta = inst.theta_a
    else:
        theta = inst.theta
    sin = np.sin(theta)
    sin2 = sin * sin
    cos = np.cos(theta)
    inv_cos2 = _safe_div(np.ones_like(cos), cos * cos)
    tan2 = _safe_div(sin2, cos * cos)
    top, bot = ry[:p], ry[-p:]

    if bound_id in ("ritz-sin", "invariant-sin2", "conj-spread-sin", "spread-sin2",
                    "conj-spread-sin-divided"):
        lhs = sort_desc(np.abs(rx - ry))
        rhs = {
            "ritz-sin": (lmax - lmin) * sin,
            "invariant-sin2": (lmax - lmin) * sin2,
            "conj-spread-sin": s.spread_vec * sin,
            "spread-sin2": s.spread_vec * sin2,
            "conj-spread-sin-divided": sin,
        }[bound_id]
        if bound_id == "conj-spread-sin-divided":
            lhs = lhs / s.spread_vec
        return lhs, rhs
    if bound_id in ("top-sin2", "top-sin2-max", "nq-sin2", "nq-max-sin2"):
        lhs = rx - top
        if bound_id in ("top-sin2-max", "nq-max-sin2"):
            return lhs, (rx - lmin) * (sin2.max() if sin2.size else 0.0)
        return lhs, (rx - lmin) * sin2
    if bound_id in ("mult-log-tan", "nq-log-tan"):
        return _safe_div(rx - lmin, top - lmin), inv_cos2
    if bound_id in ("mult-tan2", "nq-tan2"):
        return _safe_div(rx - top, top - lmin), tan2
    if bound_id == "rel-max-sinA2":
        return 1.0 - rx / bot, np.full(p, sin2.max())
    if bound_id == "rel-sinA2-maj":
        return 1.0 - rx / bot, sin2
    if bound_id == "rel-log-tanA":
        return bot / rx, inv_cos2
    if bound_id == "rel-tanA2":
        return bot / rx - 1.0, tan2
    raise InvalidInput(f"no formula for {bound_id!r}")


def _judge(spec: BoundSpec, lhs, rhs, tol):
    if not (np.all(np.isfinite(lhs)) and np.all(np.isfinite(rhs))) and spec.relation != "log-weak-maj":
        bad = np.where(np.isfinite(lhs), 0.0, -np.inf)
        return False, bad, int(np.argmin(bad)) + 1, None
    if spec.relation == "componentwise":
        margins = rhs - lhs
        thr = tol * (1.0 + (np.max(np.abs(rhs)) if rhs.size else 0.0))
        holds = bool(np.all(margins >= -thr))
        return holds, margins, int(np.argmin(margins)) + 1 if margins.size else 0, None
    if spec.relation == "log-weak-maj":
        if not np.all(np.isfinite(lhs)):
            bad = np.where(np.isfinite(lhs), 0.0, -np.inf)
            return False, bad, int(np.argmin(bad)) + 1, None
        verdict = log_weak_majorizes(np.maximum(lhs, 0.0), rhs, tol)
    else:
        verdict = weak_majorizes(lhs, rhs, tol)
    return verdict.holds, verdict.prefix_margins, verdict.worst_k, verdict


def evaluate_instance(bound_id: str, inst: Instance, tol: float = TOL_MAJ,
                      tol_strict: float = TOL_STRICT) -> BoundReport:
    spec = get_spec(bound_id)
    reasons = _preconditions(spec, inst, tol_strict)
    empty = np.zeros(0)
    if reasons:
        return BoundReport(bound_id, spec.status, False, tuple(reasons), empty, empty,
                           spec.relation, False, empty, 0)
    lhs, rhs = _sides(bound_id, inst)
    holds, margins, worst_k, verdict = _judge(spec, lhs, rhs, tol)
    floor_ok = True
    if spec.floor is not None and lhs.size:
        slack = tol * (1.0 + float(np.max(np.abs(rhs[np.isfinite(rhs)]), initial=0.0)))
        floor_ok = bool(np.all(lhs >= spec.floor - slack))
    return BoundReport(bound_id, spec.status, True, (), lhs, rhs, spec.relation,
                       bool(holds and floor_ok), margins, worst_k, floor_ok, verdict)


def evaluate(bound_id: str, a, x: Subspace, y: Subspace, tol: float = TOL_MAJ,
             tol_inv: float = TOL_INV, tol_strict: float = TOL_STRICT) -> BoundReport:
    """Evaluate one bound on ``(A, X, Y)``.

    Failed hypotheses give ``precondition_ok=False`` with reasons and
    ``holds=False``; they are never reported as counterexamples.
    """
    get_spec(bound_id)
    return evaluate_instance(bound_id, Instance(a, x, y, tol_inv), tol, tol_strict)


def evaluate_many(bound_ids, a, x: Subspace, y: Subspace, tol: float = TOL_MAJ,
                  tol_inv: float = TOL_INV, tol_strict: float = TOL_STRICT) -> list[BoundReport]:
    inst = Instance(a, x, y, tol_inv)
    return [evaluate_instance(b, inst, tol, tol_strict) for b in bound_ids]

