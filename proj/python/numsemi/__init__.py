"""Numerical semigroups, their semimodules, and codimension-level counts."""

from ._core import (
    AlreadyFull,
    CrossCheckResult,
    EmptyGenerators,
    Error,
    GapNotInSemigroup,
    GcdNotOne,
    LevelCensus,
    NotAMember,
    NotAMinimalGenerator,
    NotDownClosed,
    NumericalSemigroup,
    Semimodule,
    SweepResult,
    VerificationReport,
    cross_check,
    enumerate_semigroups_by_genus,
    j_counts,
    j_set,
    level_zero,
    mod_counts,
    next_level,
    oracle_enumerate,
    order_set_of_monomial_ideal,
    sweep,
    verify_conjecture,
)

__all__ = [
    "AlreadyFull",
    "CrossCheckResult",
    "EmptyGenerators",
    "Error",
    "GapNotInSemigroup",
    "GcdNotOne",
    "LevelCensus",
    "NotAMember",
    "NotAMinimalGenerator",
    "NotDownClosed",
    "NumericalSemigroup",
    "Semimodule",
    "SweepResult",
    "VerificationReport",
    "cross_check",
    "enumerate_semigroups_by_genus",
    "j_counts",
    "j_set",
    "level_zero",
    "mod_counts",
    "next_level",
    "oracle_enumerate",
    "order_set_of_monomial_ideal",
    "sweep",
    "verify_conjecture",
]

__version__ = "0.1.0"
