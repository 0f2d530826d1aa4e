"""Two hard-coded four-dimensional counterexamples and their expected verdicts."""
from __future__ import annotations

import numpy as np

from ..bounds import evaluate_many
from ..errors import InvalidInput
from ..subspaces import Subspace
from .report import ReportRecord

CASES = ("counterexample-1", "counterexample-2")

# bound id -> verdict each case is known to produce
EXPECTED: dict[str, dict[str, bool]] = {
    "counterexample-1": {"spread-sin2": True, "conj-spread-sin-divided": False},
    "counterexample-2": {"rel-sinA2-maj": False},
}


def case_instance(case: str) -> tuple[np.ndarray, Subspace, Subspace]:
    x = Subspace(np.eye(4)[:, :2])
    if case == "counterexample-1":
        a = np.diag([2.0, 1.0, 0.0, 0.0])
        y = Subspace.span([[1, 0], [1, 2], [2, -2], [0, 1]])
    elif case == "counterexample-2":
        a = np.diag([1.0, 2.0, 3.0, 100.0])
        y = Subspace.span([[-6, -1], [-7, 1], [2, 6], [1, -7]])
    else:
        raise InvalidInput(f"unknown case {case!r}; known: {', '.join(CASES)}")
    return a, x, y


def repro(case: str, y_basis=None) -> list[ReportRecord]:
    """Evaluate the bounds ``case`` is about; ``y_basis`` swaps in another basis of Y."""
    a, x, y = case_instance(case)
    if y_basis is not None:
        alt = Subspace.span(y_basis)
        if alt.dim != y.dim or np.linalg.norm(alt.basis - y.basis @ (y.basis.T @ alt.basis)) > 1e-8:
            raise InvalidInput("replacement basis does not span the same Y")
        y = alt
    reports = evaluate_many(list(EXPECTED[case]), a, x, y)
    return [ReportRecord(r, None, 4, x.dim, y.dim) for r in reports]


def matches_expectation(case: str, records: list[ReportRecord]) -> bool:
    want = EXPECTED[case]
    return all(want[r.report.bound_id] == r.report.holds for r in records)
