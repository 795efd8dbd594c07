"""Zero-sum sequence toolkit for finite abelian groups.

Library layout: :mod:`zerosum.group` (group arithmetic on element indices and
bitmask sets), :mod:`zerosum.sequences` (multiset sequences and enumeration),
:mod:`zerosum.sums` (the per-length subsequence-sum engine plus its brute-force
oracle), :mod:`zerosum.bounds` (Davenport constant and inequality checkers),
:mod:`zerosum.lemmas` (implication oracles), :mod:`zerosum.classify` (the
classification families and the exhaustive verifier), :mod:`zerosum.cli`.
"""

from .errors import BudgetExceededError, InvariantViolation
from .group import GroupSpec
from .sequences import Sequence, enumerate_multisets
from .sums import (
    SumsByLength,
    ZeroSumProfile,
    brute_force_sums,
    sigma_window,
    sums_by_length,
    zero_sum_profile,
)
from .bounds import (
    check_cauchy_davenport,
    check_davenport_upper,
    check_prop21,
    davenport,
    dgm_check,
    zero_sum_free_of_length,
)
from .lemmas import check_lemma31, check_lemma32, check_lemma33
from .classify import (
    FamilyInstance,
    VerificationReport,
    enumerate_families,
    match_family,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "InvariantViolation",
    "GroupSpec",
    "Sequence",
    "enumerate_multisets",
    "SumsByLength",
    "ZeroSumProfile",
    "brute_force_sums",
    "sigma_window",
    "sums_by_length",
    "zero_sum_profile",
    "check_cauchy_davenport",
    "check_davenport_upper",
    "check_prop21",
    "davenport",
    "dgm_check",
    "zero_sum_free_of_length",
    "check_lemma31",
    "check_lemma32",
    "check_lemma33",
    "FamilyInstance",
    "VerificationReport",
    "enumerate_families",
    "match_family",
    "verify_theorem",
]
