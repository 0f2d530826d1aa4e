"""Property suites: every proven bound and every classical inequality on random instances."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..bounds import PROVEN, get_spec
from ..classical import CLASSICAL_KINDS, check_classical, random_classical_inputs
from ..majorization import TOL_MAJ
from .instances import trial_seed
from .violation_search import SearchResult, search


@dataclass
class ClassicalResult:
    kind: str
    trials: int
    failures: list[int] = field(default_factory=list)  # seeds of failing draws


@dataclass
class SuiteResult:
    bounds: list[SearchResult]
    classical: list[ClassicalResult]

    @property
    def proven_violations(self) -> int:
        return sum(r.violation_count for r in self.bounds if r.status == "proven")

    @property
    def classical_failures(self) -> int:
        return sum(len(c.failures) for c in self.classical)

    @property
    def ok(self) -> bool:
        return self.proven_violations == 0 and self.classical_failures == 0


def run_classical(kind: str, trials: int, seed: int = 0, tol: float = TOL_MAJ) -> ClassicalResult:
    res = ClassicalResult(kind, trials)
    for i in range(trials):
        s = trial_seed(seed, i, stream=2)
        mats = random_classical_inputs(kind, np.random.default_rng(s))
        if not check_classical(kind, *mats, tol=tol).holds:
            res.failures.append(s)
    return res


def run_suite(trials: int = 1000, seed: int = 0, tol: float = TOL_MAJ,
              bound_ids=PROVEN, kinds=CLASSICAL_KINDS, n_max: int = 12) -> SuiteResult:
    """Run ``trials`` hypothesis-satisfying instances per bound and draws per classical kind."""
    for b in bound_ids:
        get_spec(b)
    bounds = [search(b, trials, "auto", seed, tol, shrink_limit=1, n_max=n_max) for b in bound_ids]
    classical = [run_classical(k, trials, seed, tol) for k in kinds]
    return SuiteResult(bounds, classical)

