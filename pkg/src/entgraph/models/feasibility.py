"""Feasibility verdict and census models."""

from enum import Enum
from typing import Any

from pydantic import BaseModel, Field

from entgraph.models.graph import EntangledGraph
from entgraph.models.search import SearchResult
from entgraph.models.state import PureState
from entgraph.models.synthesis import WebParameters


class FeasibilityStatus(str, Enum):
    """Pure-state realizability of a graph or component."""

    FEASIBLE_CONSTRUCTIVE = "feasible-constructive"
    FEASIBLE_CATALOG = "feasible-catalog"
    FEASIBLE_NUMERICAL_CLAIM = "feasible-numerical-claim"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"

    @property
    def rank(self) -> int:
        """Order used to combine components: Infeasible < Unknown < Feasible*."""
        return _STATUS_RANK[self]

    @property
    def is_feasible(self) -> bool:
        return self.value.startswith("feasible")


_STATUS_RANK = {
    FeasibilityStatus.INFEASIBLE: 0,
    FeasibilityStatus.UNKNOWN: 1,
    FeasibilityStatus.FEASIBLE_NUMERICAL_CLAIM: 2,
    FeasibilityStatus.FEASIBLE_CATALOG: 3,
    FeasibilityStatus.FEASIBLE_CONSTRUCTIVE: 4,
}


class FeasibilityRule(str, Enum):
    """Decision rules applied per connected component."""

    R1_SINGLE_VERTEX = "R1"
    R2_ENTANGLED_PAIR = "R2"
    R3_CORRELATED_PAIR = "R3"
    R4_OPEN_EDGE = "R4"
    R5_ENTANGLED_WEB = "R5"
    R6_THREE_QUBIT_CATALOG = "R6"
    R7_FOUR_VERTEX_CLAIM = "R7"
    R8_UNRESOLVED = "R8"


RULE_REASONS: dict[FeasibilityRule, str] = {
    FeasibilityRule.R1_SINGLE_VERTEX: "a single vertex is represented by any one-qubit pure state",
    FeasibilityRule.R2_ENTANGLED_PAIR: "two vertices joined by an entanglement edge: Bell state",
    FeasibilityRule.R3_CORRELATED_PAIR: (
        "no pure state corresponds to a two-vertex graph with a correlation edge"
    ),
    FeasibilityRule.R4_OPEN_EDGE: (
        "a connected graph with more than two vertices and an open edge has no pure state"
    ),
    FeasibilityRule.R5_ENTANGLED_WEB: "complete web realized by the alpha/beta/gamma web state",
    FeasibilityRule.R6_THREE_QUBIT_CATALOG: "three-vertex class with a catalog pure state",
    FeasibilityRule.R7_FOUR_VERTEX_CLAIM: (
        "four-vertex connected graph without open edges: pure state found numerically"
    ),
    FeasibilityRule.R8_UNRESOLVED: "no rule decides this component",
}


class ComponentVerdict(BaseModel):
    """Verdict for one connected component, with vertices in the parent graph's labels."""

    vertices: tuple[int, ...]
    status: FeasibilityStatus
    rule: FeasibilityRule
    reason: str
    witness: PureState | None = None
    web_parameters: WebParameters | None = None
    search: SearchResult | None = None
    notes: list[str] = Field(default_factory=list)


class Verdict(BaseModel):
    """Overall feasibility of a graph, combined over its components."""

    graph: EntangledGraph
    status: FeasibilityStatus
    reason: str
    witness: PureState | None = None
    component_verdicts: list[ComponentVerdict] = Field(default_factory=list)

    @property
    def rules(self) -> list[str]:
        return [c.rule.value for c in self.component_verdicts]

    @property
    def web_parameters(self) -> list[dict[str, Any]]:
        """Amplitudes of every web-state component, keyed with its vertices."""
        return [
            {"vertices": list(c.vertices), **c.web_parameters.model_dump()}
            for c in self.component_verdicts
            if c.web_parameters is not None
        ]


class CensusRow(BaseModel):
    """One isomorphism class in a census table."""

    label: str
    graph: EntangledGraph
    status: FeasibilityStatus
    rules: list[str]
    connected: bool
    open_edge: bool
    complete_web: bool
    witness_path: str = ""


class CensusReport(BaseModel):
    """Feasibility census over all isomorphism classes for one vertex count."""

    n: int
    raw_count: int
    class_count: int
    rows: list[CensusRow] = Field(default_factory=list)
    status_counts: dict[str, int] = Field(default_factory=dict)
    conventions: dict[str, int] = Field(
        default_factory=dict, description="Ambiguous-class counts under each convention"
    )
    published_ambiguous: int | None = None
    agreeing_conventions: list[str] = Field(default_factory=list)
