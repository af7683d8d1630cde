"""Pure-state feasibility of entangled graphs.

A graph has a pure representative iff each connected component does, and the
representative is then the product of the component states. Components are
decided by the first rule that applies:

R1  one vertex                                   -> constructive, |0>
R2  two vertices, entanglement edge              -> constructive, Bell state
R3  two vertices, correlation edge               -> infeasible
R4  more than two vertices with an open edge     -> infeasible
R5  complete web realized by a verified web state -> constructive
R6  three vertices with a catalog state          -> catalog
R7  four vertices (connected, no open edge)      -> numerical claim
R8  anything else                                -> unknown
"""

import logging
import math
from collections.abc import Sequence

import numpy as np

from entgraph.core.exceptions import FeasibilityError
from entgraph.graphs import (
    canonical_form,
    connected_components,
    enumerate_graphs,
    is_complete_web,
    open_edges,
    require_valid,
    subgraph,
)
from entgraph.linalg import tensor_product_pure
from entgraph.models.feasibility import (
    RULE_REASONS,
    ComponentVerdict,
    FeasibilityRule,
    FeasibilityStatus,
    Verdict,
)
from entgraph.models.graph import EntangledGraph
from entgraph.models.search import SearchConfig
from entgraph.models.state import PureState
from entgraph.models.verdict import Tolerances
from entgraph.search import PureStateSearch
from entgraph.synthesis import catalog_witness, realize_web

logger = logging.getLogger(__name__)

_BELL = np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2.0)


def _verdict(
    vertices: tuple[int, ...],
    status: FeasibilityStatus,
    rule: FeasibilityRule,
    **extra: object,
) -> ComponentVerdict:
    return ComponentVerdict.model_validate(
        {
            "vertices": vertices,
            "status": status,
            "rule": rule,
            "reason": RULE_REASONS[rule],
            **extra,
        }
    )


def _to_vertices(state: PureState, vertices: tuple[int, ...]) -> PureState:
    """Relabel a state over 0..k-1 onto the component's vertices."""
    return state.relabel(dict(enumerate(vertices)))


class FeasibilityAssessor:
    """Apply the decision rules to every component of a graph.

    Usage:
        assessor = FeasibilityAssessor(search_config=SearchConfig.from_settings())
        verdict = assessor.assess(graph)
    """

    def __init__(
        self,
        tol: Tolerances | None = None,
        search_config: SearchConfig | None = None,
        jobs: int = 1,
        web_grid: int | None = None,
    ):
        self.tol = tol or Tolerances.from_settings()
        self.search_config = search_config
        self.jobs = jobs
        self.web_grid = web_grid

    def assess(self, g: EntangledGraph) -> Verdict:
        require_valid(g)
        components = [
            self.assess_component(subgraph(g, vertices), vertices)
            for vertices in connected_components(g)
        ]
        worst = min(components, key=lambda c: c.status.rank)
        witness = combine_witnesses([c.witness for c in components])
        verdict = Verdict(
            graph=g,
            status=worst.status,
            reason=worst.reason,
            witness=witness,
            component_verdicts=components,
        )
        logger.info(
            "Feasibility of n=%d graph: %s (rules %s)", g.n, verdict.status.value, verdict.rules
        )
        return verdict

    def assess_component(
        self, sub: EntangledGraph, vertices: tuple[int, ...]
    ) -> ComponentVerdict:
        """Decide one connected component given relabelled to 0..k-1."""
        k = sub.n
        if k == 1:
            return _verdict(
                vertices,
                FeasibilityStatus.FEASIBLE_CONSTRUCTIVE,
                FeasibilityRule.R1_SINGLE_VERTEX,
                witness=PureState(qubits=vertices, amplitudes=[1.0, 0.0]),
            )
        if k == 2:
            if sub.entangled:
                return _verdict(
                    vertices,
                    FeasibilityStatus.FEASIBLE_CONSTRUCTIVE,
                    FeasibilityRule.R2_ENTANGLED_PAIR,
                    witness=PureState(qubits=vertices, amplitudes=_BELL),
                )
            return _verdict(
                vertices, FeasibilityStatus.INFEASIBLE, FeasibilityRule.R3_CORRELATED_PAIR
            )

        leaves = open_edges(sub)
        if leaves:
            leaf, (a, b) = leaves[0]
            return _verdict(
                vertices,
                FeasibilityStatus.INFEASIBLE,
                FeasibilityRule.R4_OPEN_EDGE,
                notes=[f"open edge ({vertices[a]}, {vertices[b]}) at vertex {vertices[leaf]}"],
            )

        notes: list[str] = []
        if is_complete_web(sub):
            realization = realize_web(sub, grid=self.web_grid, tol=self.tol)
            if realization.verified and realization.state is not None:
                return _verdict(
                    vertices,
                    FeasibilityStatus.FEASIBLE_CONSTRUCTIVE,
                    FeasibilityRule.R5_ENTANGLED_WEB,
                    witness=_to_vertices(realization.state, vertices),
                    web_parameters=realization.parameters,
                )
            notes.append(
                f"web state not verified after {realization.attempts} parameter choices"
            )

        if k == 3:
            found = catalog_witness(sub)
            if found is not None:
                letter, state = found
                return _verdict(
                    vertices,
                    FeasibilityStatus.FEASIBLE_CATALOG,
                    FeasibilityRule.R6_THREE_QUBIT_CATALOG,
                    witness=_to_vertices(state, vertices),
                    notes=[*notes, f"catalog state {letter}"],
                )

        if k == 4:
            return self._searched(
                sub,
                vertices,
                FeasibilityStatus.FEASIBLE_NUMERICAL_CLAIM,
                FeasibilityRule.R7_FOUR_VERTEX_CLAIM,
                notes,
            )
        return self._searched(
            sub, vertices, FeasibilityStatus.UNKNOWN, FeasibilityRule.R8_UNRESOLVED, notes
        )

    def _searched(
        self,
        sub: EntangledGraph,
        vertices: tuple[int, ...],
        status: FeasibilityStatus,
        rule: FeasibilityRule,
        notes: list[str],
    ) -> ComponentVerdict:
        """R7/R8 verdict, upgraded with a searched witness when a search config is set."""
        if self.search_config is None:
            return _verdict(vertices, status, rule, notes=notes)
        searcher = PureStateSearch(self.search_config, jobs=self.jobs)
        if sub.n > searcher.cap:
            notes.append(f"search skipped: {sub.n} vertices exceed the search cap {searcher.cap}")
            return _verdict(vertices, status, rule, notes=notes)
        result = searcher.run(sub)
        if result.found and result.witness is not None:
            return _verdict(
                vertices,
                FeasibilityStatus.FEASIBLE_NUMERICAL_CLAIM,
                rule,
                witness=_to_vertices(result.witness, vertices),
                search=result,
                notes=[*notes, "witness found by search"],
            )
        notes.append(f"search exhausted; best objective {result.best_objective:.3e}")
        return _verdict(vertices, status, rule, search=result, notes=notes)


def combine_witnesses(witnesses: Sequence[PureState | None]) -> PureState | None:
    """Tensor product of component witnesses listed in ascending vertex order."""
    present = [w for w in witnesses if w is not None]
    if not present or len(present) != len(witnesses):
        return None
    product = present[0]
    for w in present[1:]:
        product = tensor_product_pure(product, w)
    return product.reorder(sorted(product.qubits))


def assess(
    g: EntangledGraph,
    search_config: SearchConfig | None = None,
    tol: Tolerances | None = None,
    jobs: int = 1,
) -> Verdict:
    """Decide whether ``g`` has a pure-state representative.

    Parameters
    ----------
    g : EntangledGraph
        Graph to assess; each connected component is decided on its own.
    search_config : SearchConfig, optional
        When given, components no rule settles are searched numerically.
    tol : Tolerances, optional
        Thresholds used to verify constructed witnesses.
    jobs : int
        Parallel search restarts.

    Returns
    -------
    Verdict
        Combined status, per-component verdicts and, when every component has
        one, the tensor-product witness.
    """
    return FeasibilityAssessor(tol=tol, search_config=search_config, jobs=jobs).assess(g)


def catalog_cross_check() -> dict[str, str]:
    """Map each three-vertex class label to its catalog letter or to the rule excluding it.

    Raises :class:`FeasibilityError` unless the classes without a catalog state
    are exactly the four caught by R3/R4.
    """
    result: dict[str, str] = {}
    uncovered: set[str] = set()
    excluded: set[str] = set()
    for g in enumerate_graphs(3, up_to_iso=True):
        label = canonical_form(g)
        found = catalog_witness(g)
        rules = assess(g).rules
        if found is not None:
            result[label] = found[0]
        else:
            uncovered.add(label)
        caught = [r for r in rules if r in ("R3", "R4")]
        if caught:
            excluded.add(label)
            result.setdefault(label, caught[0])
    if uncovered != excluded or len(uncovered) != 4:
        raise FeasibilityError(
            f"catalog mismatch: without catalog state {sorted(uncovered)}, "
            f"caught by R3/R4 {sorted(excluded)}"
        )
    return result
