"""Rayleigh-Ritz majorization error bounds.

Ritz values, principal angles, majorization checks and a registry of error
bounds, with a harness that generates instances and searches for violations.
"""
from .bounds import BOUND_IDS, PROVEN, REGISTRY, BoundReport, evaluate, evaluate_many
from .classical import CLASSICAL_KINDS, check_classical
from .errors import (ConventionViolation, InvalidInput, IoError, NotPD, NotPSD, NumericalFailure,
                     RankDeficient, RitzMajorizeError)
from .linalg import BACKEND
from .majorization import (MajorizationVerdict, log_diff_majorizes, log_strong_majorizes,
                           log_weak_majorizes, strong_majorizes, weak_majorizes)
from .ritz import RitzSummary, ritz_bottom_slice, ritz_summary, ritz_top_slice, ritz_values
from .subspaces import Subspace, angles, angles_weighted, classify, invariant_class, subspace_sum

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BOUND_IDS", "CLASSICAL_KINDS", "PROVEN", "REGISTRY",
    "BoundReport", "ConventionViolation", "InvalidInput", "IoError", "MajorizationVerdict",
    "NotPD", "NotPSD", "NumericalFailure", "RankDeficient", "RitzMajorizeError", "RitzSummary",
    "Subspace", "angles", "angles_weighted", "check_classical", "classify", "evaluate",
    "evaluate_many", "invariant_class", "log_diff_majorizes", "log_strong_majorizes",
    "log_weak_majorizes", "ritz_bottom_slice", "ritz_summary", "ritz_top_slice", "ritz_values",
    "strong_majorizes", "subspace_sum", "weak_majorizes",
]
