"""Exact sl2 actions, Sperner certificates and Schubert specializations on 132-avoiding weak intervals."""

from .errors import (
    BruhatError, InexactDivisionError, IntervalTooLargeError, InvariantViolation,
    Non132AvoidingError, NotACoverError, NotBelowPiError, PaddingViolationError,
    PermutationError,
)
from .perm import (
    Permutation, avoids_132, contains_pattern, identity, inverse, inversions,
    length, lehmer_code, longest_element, parabolic_max, parse_permutation,
)
from .orders import WeakInterval, build_interval, hasse_export, weak_leq
from .sl2 import build_E, build_F, build_H, verify_sl2, weight
from .sperner import certify_sperner, exact_rank
from .schubert import chain_sum, macdonald_sum, principal_specialization, schubert

__all__ = [
    "BruhatError", "InexactDivisionError", "IntervalTooLargeError", "InvariantViolation",
    "Non132AvoidingError", "NotACoverError", "NotBelowPiError", "PaddingViolationError",
    "PermutationError", "Permutation", "avoids_132", "contains_pattern", "identity",
    "inverse", "inversions", "length", "lehmer_code", "longest_element", "parabolic_max",
    "parse_permutation", "WeakInterval", "build_interval", "hasse_export", "weak_leq",
    "build_E", "build_F", "build_H", "verify_sl2", "weight", "certify_sperner",
    "exact_rank", "chain_sum", "macdonald_sum", "principal_specialization", "schubert",
]

__version__ = "0.1.0"
