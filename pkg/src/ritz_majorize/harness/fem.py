"""Synthetic finite-element-style experiment on a diagonal surrogate operator.

A mesh of size ``h`` is modelled only through the angles between the exact
two-dimensional top eigenspace X and a trial space Y: ``sin = [h^alpha, h]``.
For each ``h`` the table compares the summed eigenvalue error with two trace
bounds, both using 0 in place of the smallest Ritz value on X + Y:

* majorization bound ``sum_i lambda_i sin_i^2``
* componentwise bound ``sum_i lambda_i max sin^2``

Their ratio tends to 1/2 as ``h -> 0`` when ``lambda1 == lambda2``.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from ..bounds import evaluate_many
from ..errors import InvalidInput
from ..ritz import ritz_values
from ..subspaces import Subspace, angles

DEFAULT_H = (1e-1, 1e-2, 1e-3)


@dataclass(frozen=True)
class FemRow:
    h: float
    sin_large: float
    sin_small: float
    trace_error: float
    majorization_bound: float
    componentwise_bound: float
    ratio: float
    closed_form_ratio: float
    product_error: float
    product_bound: float
    nq_sin2_holds: bool
    nq_log_tan_holds: bool

    @property
    def within_bounds(self) -> bool:
        slack = 1e-12 * max(1.0, self.majorization_bound)
        return (self.trace_error <= self.majorization_bound + slack
                and self.product_error <= self.product_bound + slack)


def _surrogate(lambda1: float, lambda2: float, sines: np.ndarray):
    # two tail eigenvalues below lambda2 keep X the top invariant subspace
    a = np.diag([lambda1, lambda2, 0.5 * lambda2, 0.25 * lambda2])
    x = Subspace(np.eye(4)[:, :2])
    cos = np.sqrt(1.0 - sines**2)
    yb = np.zeros((4, 2))
    yb[0, 0], yb[2, 0] = cos[0], sines[0]
    yb[1, 1], yb[3, 1] = cos[1], sines[1]
    return a, x, Subspace(yb)


def fem_row(lambda1: float, lambda2: float, alpha: float, h: float) -> FemRow:
    if not (lambda1 >= lambda2 > 0 and math.isfinite(lambda1)):
        raise InvalidInput("need lambda1 >= lambda2 > 0")
    if not 0 < alpha <= 1:
        raise InvalidInput("alpha must lie in (0, 1]")
    if not 0 < h <= 1:
        raise InvalidInput("h must lie in (0, 1]")
    a, x, y = _surrogate(lambda1, lambda2, np.array([h**alpha, h]))
    sin = np.sin(angles(x, y))
    sin2 = sin * sin
    rx = ritz_values(a, x)
    ry = ritz_values(a, y)
    trace_error = float(np.sum(rx - ry))
    maj = float(np.sum(rx * sin2))
    comp = float(np.sum(rx) * sin2.max())
    cos2 = 1.0 - sin2
    with np.errstate(divide="ignore"):
        product_bound = float(np.prod(1.0 / cos2) - 1.0) if np.all(cos2 > 0) else math.inf
    product_error = float(np.prod(rx / ry) - 1.0)
    nq_sin2, nq_log = evaluate_many(["nq-sin2", "nq-log-tan"], a, x, y)
    closed = (lambda1 * h ** (2 * alpha) + lambda2 * h**2) / ((lambda1 + lambda2) * h ** (2 * alpha))
    return FemRow(
        h=h, sin_large=float(sin[0]), sin_small=float(sin[1]),
        trace_error=trace_error, majorization_bound=maj, componentwise_bound=comp,
        ratio=maj / comp, closed_form_ratio=closed,
        product_error=product_error, product_bound=product_bound,
        nq_sin2_holds=nq_sin2.holds, nq_log_tan_holds=nq_log.holds,
    )


def fem_demo(lambda1: float = 1.0, lambda2: float = 1.0, alpha: float = 0.6,
             hs=DEFAULT_H) -> list[FemRow]:
    """One :class:`FemRow` per mesh size in ``hs``."""
    hs = list(hs)
    if not hs:
        raise InvalidInput("need at least one h value")
    return [fem_row(lambda1, lambda2, alpha, float(h)) for h in hs]


def rows_to_text(rows: list[FemRow], fmt: str = "json") -> str:
    dicts = [asdict(r) for r in rows]
    for d in dicts:
        for k, v in d.items():
            if isinstance(v, float) and not math.isfinite(v):
                d[k] = None
    if fmt == "json":
        return json.dumps(dicts, indent=2, allow_nan=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        fields = [f for f in FemRow.__dataclass_fields__]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for d in dicts:
            writer.writerow({k: (str(v).lower() if isinstance(v, bool) else ("" if v is None else repr(v)))
                             for k, v in d.items()})
        return buf.getvalue()
    raise InvalidInput(f"unknown format {fmt!r}; use json or csv")
