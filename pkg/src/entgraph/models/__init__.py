"""Pydantic data models for entgraph."""

from entgraph.models.archive_entry import ArchiveAction, ArchiveEntry
from entgraph.models.feasibility import (
    CensusReport,
    CensusRow,
    ComponentVerdict,
    FeasibilityRule,
    FeasibilityStatus,
    Verdict,
)
from entgraph.models.graph import (
    EntangledGraph,
    Pair,
    PairClass,
    UncorrelationProfile,
    ValidationReport,
)
from entgraph.models.outcome import CommandOutcome, ExitCode
from entgraph.models.search import RestartTrace, SearchConfig, SearchMethod, SearchResult
from entgraph.models.state import DensityOperator, ExcitationBlockState, PureState
from entgraph.models.synthesis import WebParameters, WebRealization
from entgraph.models.verdict import PairVerdict, Tolerances, VerdictReport

__all__ = [
    "ArchiveAction",
    "ArchiveEntry",
    "CensusReport",
    "CensusRow",
    "CommandOutcome",
    "ComponentVerdict",
    "DensityOperator",
    "EntangledGraph",
    "ExcitationBlockState",
    "ExitCode",
    "FeasibilityRule",
    "FeasibilityStatus",
    "Pair",
    "PairClass",
    "PairVerdict",
    "PureState",
    "RestartTrace",
    "SearchConfig",
    "SearchMethod",
    "SearchResult",
    "Tolerances",
    "UncorrelationProfile",
    "ValidationReport",
    "Verdict",
    "VerdictReport",
    "WebParameters",
    "WebRealization",
]
