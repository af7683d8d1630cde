"""Pair classifier: entangled / classical-only / uncorrelated, and graph extraction.

Entanglement is gated by the negativity of the partial transpose (exact for
two qubits); factorization by the Frobenius distance from the product of the
marginals. Concurrence is reported as the strength metric.
"""

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from entgraph.core.exceptions import InvalidStateError, QubitLabelError
from entgraph.linalg import (
    concurrence_batch,
    dense_pair_reductions,
    factorization_distance_batch,
    negativity_batch,
    pair_reductions,
    require_density,
    require_pure,
)
from entgraph.models.graph import EntangledGraph, Pair, PairClass
from entgraph.models.state import DensityOperator, ExcitationBlockState, PureState
from entgraph.models.verdict import PairVerdict, Tolerances, VerdictReport
from entgraph.synthesis.mixed import reduce_pair, validate_excitation

logger = logging.getLogger(__name__)

AnyState = PureState | DensityOperator | ExcitationBlockState


def _near(value: float, threshold: float, factor: float) -> bool:
    return threshold / factor < value <= threshold * factor


def classify_batch(
    pairs: Sequence[Pair], matrices: np.ndarray, tol: Tolerances
) -> list[PairVerdict]:
    """Verdicts for a stack of two-qubit reductions, one per pair."""
    if len(pairs) == 0:
        return []
    negativities = negativity_batch(matrices)
    concurrences = concurrence_batch(matrices)
    distances = factorization_distance_batch(matrices)
    verdicts = []
    for (i, j), neg, conc, dist in zip(pairs, negativities, concurrences, distances, strict=True):
        if neg > tol.ent:
            pair_class = PairClass.ENTANGLED
            marginal = _near(neg, tol.ent, tol.marginal_factor)
        else:
            pair_class = PairClass.UNCORRELATED if dist <= tol.fac else PairClass.CLASSICAL_ONLY
            marginal = _near(neg, tol.ent, tol.marginal_factor) or _near(
                dist, tol.fac, tol.marginal_factor
            )
        if marginal:
            logger.warning(
                "Marginal verdict for pair (%d, %d): %s with negativity=%.3e, distance=%.3e",
                i,
                j,
                pair_class.value,
                neg,
                dist,
            )
        verdicts.append(
            PairVerdict(
                i=i,
                j=j,
                pair_class=pair_class,
                concurrence=float(conc),
                negativity=float(neg),
                fac_distance=float(dist),
                marginal=marginal,
            )
        )
    return verdicts


def classify_pair(rho_ij: DensityOperator, tol: Tolerances | None = None) -> PairVerdict:
    """Classify one two-qubit density operator."""
    tol = tol or Tolerances.from_settings()
    if rho_ij.k != 2:
        raise QubitLabelError(f"classify_pair needs a 2-qubit operator, got {rho_ij.k} qubits")
    require_density(rho_ij, tol)
    i, j = rho_ij.qubits
    return classify_batch([(i, j)], rho_ij.matrix[None], tol)[0]


def _vertex_order(qubits: tuple[int, ...]) -> list[int]:
    if sorted(qubits) != list(range(len(qubits))):
        raise QubitLabelError(f"qubit labels must be 0..n-1, got {qubits}")
    return sorted(qubits)


def _reducer(state: AnyState, tol: Tolerances) -> tuple[int, Callable[[list[Pair]], np.ndarray]]:
    """Validate ``state`` and return its qubit count and a pair-stack reducer."""
    if isinstance(state, ExcitationBlockState):
        problems = validate_excitation(state, tol.tr)
        if problems:
            raise InvalidStateError(problems)
        return state.n, lambda pairs: np.array(
            [reduce_pair(state, i, j).matrix for i, j in pairs], dtype=complex
        ).reshape(len(pairs), 4, 4)

    if isinstance(state, PureState):
        require_pure(state, tol)
        ordered = state.reorder(_vertex_order(state.qubits))
        amplitudes = ordered.amplitudes / ordered.norm
        return ordered.k, lambda pairs: pair_reductions(amplitudes, ordered.k, pairs)

    require_density(state, tol)
    order = _vertex_order(state.qubits)
    if list(state.qubits) != order:
        raise QubitLabelError("dense operators must list qubits in ascending order")
    return state.k, lambda pairs: dense_pair_reductions(state.matrix, state.k, pairs)


def extract_graph(state: AnyState, tol: Tolerances | None = None, jobs: int = 1) -> VerdictReport:
    """Classify every pair of ``state`` and assemble the entangled graph.

    With ``jobs > 1`` the pairs are split into that many chunks reduced and
    classified on worker threads; verdicts are merged in pair order.

    Parameters
    ----------
    state : PureState, DensityOperator or ExcitationBlockState
        State on qubits labelled ``0..n-1``.
    tol : Tolerances, optional
        Classification thresholds; defaults to the configured ones.
    jobs : int
        Worker threads.

    Returns
    -------
    VerdictReport
        The graph, one verdict per pair and the pairs flagged as marginal.
    """
    tol = tol or Tolerances.from_settings()
    n, reduce = _reducer(state, tol)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def _run(chunk: list[Pair]) -> list[PairVerdict]:
        return classify_batch(chunk, reduce(chunk), tol) if chunk else []

    if jobs > 1 and len(pairs) > 1:
        chunks = [pairs[k::jobs] for k in range(jobs)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            verdicts = [v for part in pool.map(_run, chunks) for v in part]
        verdicts.sort(key=lambda v: (v.i, v.j))
    else:
        verdicts = _run(pairs)

    graph = EntangledGraph(
        n=n,
        entangled=[(v.i, v.j) for v in verdicts if v.pair_class is PairClass.ENTANGLED],
        classical=[(v.i, v.j) for v in verdicts if v.pair_class is PairClass.CLASSICAL_ONLY],
    )
    logger.debug(
        "Extracted graph: n=%d, |S^E|=%d, |S^CC|=%d", n, len(graph.entangled), len(graph.classical)
    )
    return VerdictReport(graph=graph, verdicts=verdicts, tolerances=tol)
