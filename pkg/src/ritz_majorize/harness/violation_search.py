"""Randomized search for bound violations, with shrinking of the witnesses found."""
from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from ..bounds import TOL_STRICT, BoundReport, Instance, evaluate_instance, get_spec
from ..errors import InvalidInput, RitzMajorizeError
from ..majorization import TOL_MAJ
from .instances import InstanceSpec, generate, sample_spec, shrink_candidates, trial_seed
from .report import ReportRecord

RESEEDS_PER_STEP = 8
MAX_STORED = 100


@dataclass(frozen=True)
class Violation:
    spec: InstanceSpec
    report: BoundReport = field(repr=False)

    def record(self) -> ReportRecord:
        s = self.spec
        return ReportRecord(self.report, s.seed, s.n, s.dim_x, s.dim_y)


@dataclass
class SearchResult:
    bound_id: str
    trials: int
    attempts: int
    violations: list[Violation]
    violation_count: int
    min_violation: Violation | None = None
    tol: float = TOL_MAJ

    @property
    def status(self) -> str:
        return get_spec(self.bound_id).status

    def reverify(self) -> bool:
        """Re-generate every stored violation from its spec and confirm it still fails."""
        stored = list(self.violations) + ([self.min_violation] if self.min_violation else [])
        for v in stored:
            report = check_spec(self.bound_id, v.spec, self.tol)
            if report is None or not report.precondition_ok or report.holds:
                return False
        return True


def check_spec(bound_id: str, spec: InstanceSpec, tol: float = TOL_MAJ,
               tol_strict: float = TOL_STRICT) -> BoundReport | None:
    """Evaluate ``bound_id`` on the instance ``spec`` describes; None if it cannot be built."""
    try:
        a, x, y = generate(spec)
        return evaluate_instance(bound_id, Instance(a, x, y), tol, tol_strict)
    except RitzMajorizeError:
        return None


def _is_violation(report: BoundReport | None) -> bool:
    return report is not None and report.precondition_ok and not report.holds


def shrink(bound_id: str, violation: Violation, seed: int, tol: float = TOL_MAJ,
           max_steps: int = 60) -> Violation:
    """Greedily shrink a witness: smaller ``n`` first, then smaller perturbations."""
    rng = np.random.default_rng(seed)
    best = violation
    for _ in range(max_steps):
        improved = False
        for cand in shrink_candidates(best.spec, rng):
            tries = RESEEDS_PER_STEP if cand.n < best.spec.n else 1
            for _ in range(tries):
                report = check_spec(bound_id, cand, tol)
                if _is_violation(report):
                    best = Violation(cand, report)
                    improved = True
                    break
                if cand.n < best.spec.n:
                    # same smaller shape, fresh draw of operator and subspaces
                    cand = replace(cand, seed=int(rng.integers(0, 2**31 - 1)))
            if improved:
                break
        if not improved:
            break
    return best


def search(bound_id: str, trials: int, regime: str = "auto", seed: int = 0,
           tol: float = TOL_MAJ, max_violations: int | None = None,
           max_attempts: int | None = None, shrink_limit: int = 5,
           n_max: int = 12) -> SearchResult:
    """Evaluate ``bound_id`` on ``trials`` random instances that meet its hypotheses.

    Draws failing the hypotheses are skipped and do not count as trials;
    ``max_attempts`` (default ``20 * trials``) caps the total number of draws.
    Stops early once ``max_violations`` violations are found.  At most
    ``MAX_STORED`` violations are kept; ``violation_count`` counts them all.
    """
    get_spec(bound_id)
    if trials < 1:
        raise InvalidInput("trials must be at least 1")
    max_attempts = max_attempts if max_attempts is not None else 20 * trials
    done = attempts = count = 0
    violations: list[Violation] = []
    while done < trials and attempts < max_attempts:
        spec = sample_spec(bound_id, trial_seed(seed, attempts), regime, n_max)
        attempts += 1
        report = check_spec(bound_id, spec, tol)
        if report is None or not report.precondition_ok:
            continue
        done += 1
        if not report.holds:
            count += 1
            if len(violations) < MAX_STORED:
                violations.append(Violation(spec, report))
            if max_violations is not None and count >= max_violations:
                break
    shrunk = [shrink(bound_id, v, trial_seed(seed, i, stream=1), tol)
              for i, v in enumerate(violations[:shrink_limit])]
    smallest = min(shrunk, key=lambda v: (v.spec.n, v.spec.dim_y)) if shrunk else None
    return SearchResult(bound_id, done, attempts, violations, count, smallest, tol)
