"""Instance generation, reproduction of known counterexamples, searches and reports."""
from .counterexamples import CASES, EXPECTED, matches_expectation, repro
from .fem import FemRow, fem_demo, fem_row, rows_to_text
from .instances import InstanceSpec, generate, sample_spec, trial_seed
from .report import ReportRecord, dumps, emit
from .suite import SuiteResult, run_classical, run_suite
from .violation_search import SearchResult, Violation, check_spec, search, shrink

__all__ = [
    "CASES", "EXPECTED", "FemRow", "InstanceSpec", "ReportRecord", "SearchResult", "SuiteResult",
    "Violation", "check_spec", "dumps", "emit", "fem_demo", "fem_row", "generate",
    "matches_expectation", "repro", "rows_to_text", "run_classical", "run_suite",
    "sample_spec", "search", "shrink", "trial_seed",
]
