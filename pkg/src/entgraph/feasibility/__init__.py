"""Feasibility: decision rules for pure-state representatives and the class census."""

from entgraph.feasibility.census import CONVENTIONS, PUBLISHED_AMBIGUOUS, census
from entgraph.feasibility.rules import (
    FeasibilityAssessor,
    assess,
    catalog_cross_check,
    combine_witnesses,
)

__all__ = [
    "CONVENTIONS",
    "PUBLISHED_AMBIGUOUS",
    "FeasibilityAssessor",
    "assess",
    "catalog_cross_check",
    "census",
    "combine_witnesses",
]
