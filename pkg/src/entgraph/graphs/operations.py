"""Structural operations on entangled graphs.

All functions are pure; graphs are immutable values.
"""

import logging
from collections.abc import Iterable, Sequence

import networkx as nx

from entgraph.core.exceptions import InvalidGraphError
from entgraph.models.graph import (
    EntangledGraph,
    Pair,
    PairClass,
    UncorrelationProfile,
    ValidationReport,
    normalize_pair,
)

logger = logging.getLogger(__name__)


def validate(g: EntangledGraph) -> ValidationReport:
    """Report every structural invariant violation of *g*."""
    violations: list[str] = []
    for kind, pairs in (("entangled", g.entangled), ("classical", g.classical)):
        for i, j in pairs:
            if i == j:
                violations.append(f"self-loop at vertex {i} in {kind} edges")
            for v in (i, j):
                if not 0 <= v < g.n:
                    violations.append(
                        f"index out of range: vertex {v} in {kind} edge {(i, j)} (n={g.n})"
                    )
    for pair in sorted(g.entangled_set & g.classical_set):
        violations.append(f"pair in both sets: {pair}")
    return ValidationReport(violations=violations)


def require_valid(g: EntangledGraph) -> EntangledGraph:
    """Return *g* unchanged, or raise :class:`InvalidGraphError`."""
    report = validate(g)
    if not report.is_valid:
        raise InvalidGraphError(report.violations)
    return g


def profile(g: EntangledGraph) -> UncorrelationProfile:
    """Count uncorrelated partners per vertex (m_i) and uncorrelated pairs (M)."""
    require_valid(g)
    m = [g.n - 1] * g.n
    for i, j in g.correlated:
        m[i] -= 1
        m[j] -= 1
    total = sum(m) // 2
    return UncorrelationProfile(m=tuple(m), total=total)


def degree(g: EntangledGraph, v: int) -> int:
    """Total degree of *v* over both edge types."""
    return sum(1 for pair in g.correlated if v in pair)


def to_networkx(g: EntangledGraph) -> nx.Graph:
    """Undirected networkx graph; each edge carries ``kind`` = its PairClass value."""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.entangled, kind=PairClass.ENTANGLED.value)
    graph.add_edges_from(g.classical, kind=PairClass.CLASSICAL_ONLY.value)
    return graph


def connected_components(g: EntangledGraph) -> list[tuple[int, ...]]:
    """Maximal vertex sets connected by edges of either type, ordered by smallest vertex."""
    require_valid(g)
    components = [tuple(sorted(c)) for c in nx.connected_components(to_networkx(g))]
    return sorted(components)


def is_connected(g: EntangledGraph) -> bool:
    return len(connected_components(g)) == 1


def open_edges(g: EntangledGraph, *, significant_only: bool = False) -> list[tuple[int, Pair]]:
    """Every degree-1 vertex with its unique edge.

    With ``significant_only`` only leaves inside components of more than two
    vertices are returned; an isolated edge is not an open edge.
    """
    require_valid(g)
    graph = to_networkx(g)
    component_size = {}
    if significant_only:
        for component in nx.connected_components(graph):
            for v in component:
                component_size[v] = len(component)
    result: list[tuple[int, Pair]] = []
    for v in range(g.n):
        if graph.degree(v) != 1:
            continue
        if significant_only and component_size[v] <= 2:
            continue
        (u,) = graph.neighbors(v)
        result.append((v, normalize_pair(u, v)))
    return result


def is_complete_web(g: EntangledGraph) -> bool:
    """True iff every pair carries an edge (M = 0)."""
    require_valid(g)
    return len(g.entangled) + len(g.classical) == g.pair_count


def subgraph(g: EntangledGraph, vertices: Iterable[int]) -> EntangledGraph:
    """Induced subgraph relabelled to ``0..k-1`` in sorted vertex order."""
    ordered = sorted(vertices)
    index = {v: k for k, v in enumerate(ordered)}

    def _inside(pairs: Sequence[Pair]) -> list[Pair]:
        return [(index[i], index[j]) for i, j in pairs if i in index and j in index]

    return EntangledGraph(
        n=len(ordered), entangled=_inside(g.entangled), classical=_inside(g.classical)
    )


def permute(g: EntangledGraph, perm: Sequence[int]) -> EntangledGraph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError(f"{list(perm)} is not a permutation of range({g.n})")
    return EntangledGraph(
        n=g.n,
        entangled=[(perm[i], perm[j]) for i, j in g.entangled],
        classical=[(perm[i], perm[j]) for i, j in g.classical],
    )
