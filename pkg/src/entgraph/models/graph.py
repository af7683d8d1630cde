"""EntangledGraph model: qubits as vertices, entanglement and classical-only edges."""

from enum import Enum
from functools import cached_property
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

Pair = tuple[int, int]


class PairClass(str, Enum):
    """Three-way classification of a qubit pair."""

    ENTANGLED = "entangled"
    CLASSICAL_ONLY = "classical-only"
    UNCORRELATED = "uncorrelated"


def normalize_pair(a: int, b: int) -> Pair:
    """Unordered pair as ``(min, max)``."""
    return (a, b) if a <= b else (b, a)


class EntangledGraph(BaseModel):
    """Graph on ``n`` qubit-vertices with two disjoint edge sets.

    ``entangled`` is S^E and ``classical`` is S^CC (separable but not
    factorized). The correlated set S^C is their union. Invariants are not
    enforced at construction; see :func:`entgraph.graphs.validate`.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Vertex count")
    entangled: tuple[Pair, ...] = Field(default=(), description="S^E")
    classical: tuple[Pair, ...] = Field(default=(), description="S^CC")

    @field_validator("entangled", "classical", mode="before")
    @classmethod
    def _normalize_pairs(cls, value: Any) -> tuple[Pair, ...]:
        pairs: set[Pair] = set()
        for item in value:
            a, b = item
            pairs.add(normalize_pair(int(a), int(b)))
        return tuple(sorted(pairs))

    # Identity is the field triple only, so cached views never affect equality.
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EntangledGraph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def key(self) -> tuple[int, tuple[Pair, ...], tuple[Pair, ...]]:
        return (self.n, self.entangled, self.classical)

    @cached_property
    def entangled_set(self) -> frozenset[Pair]:
        return frozenset(self.entangled)

    @cached_property
    def classical_set(self) -> frozenset[Pair]:
        return frozenset(self.classical)

    @property
    def correlated(self) -> tuple[Pair, ...]:
        """S^C = S^E ∪ S^CC."""
        return tuple(sorted(self.entangled_set | self.classical_set))

    @property
    def pair_count(self) -> int:
        return self.n * (self.n - 1) // 2

    def all_pairs(self) -> list[Pair]:
        """Every unordered vertex pair in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)]

    def pair_class(self, i: int, j: int) -> PairClass:
        pair = normalize_pair(i, j)
        if pair in self.entangled_set:
            return PairClass.ENTANGLED
        if pair in self.classical_set:
            return PairClass.CLASSICAL_ONLY
        return PairClass.UNCORRELATED


class UncorrelationProfile(BaseModel):
    """Per-vertex uncorrelated-partner counts m_i and their pair total M."""

    m: tuple[int, ...]
    total: int = Field(..., description="M = (1/2) * sum(m)")


class ValidationReport(BaseModel):
    """Structural invariant violations of a graph; empty iff valid."""

    violations: list[str] = Field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.violations
