"""Tensor products, partial traces and partial transposes over labelled qubits.

Basis convention: the first listed qubit is the most significant bit, so an
operator on k qubits reshapes to a (2,)*2k tensor with row axes first.
"""

import logging
from collections.abc import Iterable, Sequence

import numpy as np

from entgraph.core.exceptions import DimensionError, QubitLabelError
from entgraph.models.state import DensityOperator, PureState

logger = logging.getLogger(__name__)


def _check_disjoint(a: Sequence[int], b: Sequence[int]) -> None:
    overlap = set(a) & set(b)
    if overlap:
        raise QubitLabelError(f"overlapping qubit labels {sorted(overlap)}")


def tensor_product(a: DensityOperator, b: DensityOperator) -> DensityOperator:
    """Kronecker product; qubit order is a's labels then b's."""
    _check_disjoint(a.qubits, b.qubits)
    return DensityOperator(qubits=a.qubits + b.qubits, matrix=np.kron(a.matrix, b.matrix))


def tensor_product_pure(a: PureState, b: PureState) -> PureState:
    _check_disjoint(a.qubits, b.qubits)
    return PureState(qubits=a.qubits + b.qubits, amplitudes=np.kron(a.amplitudes, b.amplitudes))


def _keep_axes(qubits: tuple[int, ...], keep: Iterable[int]) -> tuple[list[int], list[int]]:
    wanted = set(keep)
    if not wanted:
        raise QubitLabelError("partial trace must keep at least one qubit")
    unknown = wanted - set(qubits)
    if unknown:
        raise QubitLabelError(f"unknown qubit labels {sorted(unknown)} (state has {qubits})")
    kept = [axis for axis, q in enumerate(qubits) if q in wanted]
    traced = [axis for axis, q in enumerate(qubits) if q not in wanted]
    return kept, traced


def partial_trace(state: DensityOperator | PureState, keep: Iterable[int]) -> DensityOperator:
    """Reduced operator on ``keep``, listed in the state's qubit order."""
    kept, traced = _keep_axes(state.qubits, keep)
    labels = tuple(state.qubits[axis] for axis in kept)
    dk, dt = 2 ** len(kept), 2 ** len(traced)

    if isinstance(state, PureState):
        tensor = state.amplitudes.reshape((2,) * state.k)
        block = np.transpose(tensor, kept + traced).reshape(dk, dt)
        return DensityOperator(qubits=labels, matrix=block @ block.conj().T)

    k = state.k
    tensor = state.matrix.reshape((2,) * (2 * k))
    rows = kept + traced
    cols = [axis + k for axis in rows]
    block = np.transpose(tensor, rows + cols).reshape(dk, dt, dk, dt)
    return DensityOperator(qubits=labels, matrix=np.einsum("ajbj->ab", block))


def partial_transpose(rho: DensityOperator, which: int) -> np.ndarray:
    """Transpose on one qubit of a two-qubit operator."""
    if rho.k != 2:
        raise DimensionError(f"partial_transpose needs 2 qubits, got {rho.k}")
    if which not in rho.qubits:
        raise QubitLabelError(f"qubit {which} not in {rho.qubits}")
    return partial_transpose_matrix(rho.matrix, rho.qubits.index(which))


def partial_transpose_matrix(matrix: np.ndarray, axis: int = 1) -> np.ndarray:
    """Partial transpose of a 4x4 matrix, or of a stack of them, on qubit ``axis``."""
    lead = matrix.shape[:-2]
    tensor = matrix.reshape(lead + (2, 2, 2, 2))
    offset = len(lead)
    order = list(range(offset + 4))
    order[offset + axis], order[offset + axis + 2] = order[offset + axis + 2], order[offset + axis]
    return np.transpose(tensor, order).reshape(lead + (4, 4))


def permute_pure(state: PureState, perm: Sequence[int]) -> PureState:
    """Move qubit ``q`` to label ``perm[q]`` and list labels in ascending order."""
    relabelled = state.relabel({q: perm[q] for q in state.qubits})
    return relabelled.reorder(sorted(relabelled.qubits))


def pair_reductions(amplitudes: np.ndarray, n: int, pairs: Sequence[tuple[int, int]]) -> np.ndarray:
    """Stack of two-qubit reductions (len(pairs), 4, 4) of an n-qubit pure vector.

    Vertex ``v`` is tensor axis ``v``; each block is ordered (i, j) as given.
    """
    tensor = np.asarray(amplitudes, dtype=complex).reshape((2,) * n)
    out = np.empty((len(pairs), 4, 4), dtype=complex)
    for k, (i, j) in enumerate(pairs):
        block = np.moveaxis(tensor, (i, j), (0, 1)).reshape(4, -1)
        out[k] = block @ block.conj().T
    return out


def dense_pair_reductions(
    matrix: np.ndarray, n: int, pairs: Sequence[tuple[int, int]]
) -> np.ndarray:
    """Stack of two-qubit reductions of an n-qubit density matrix."""
    tensor = np.asarray(matrix, dtype=complex).reshape((2,) * (2 * n))
    out = np.empty((len(pairs), 4, 4), dtype=complex)
    for k, (i, j) in enumerate(pairs):
        rest = [a for a in range(n) if a not in (i, j)]
        axes = [i, j, *rest, i + n, j + n, *(a + n for a in rest)]
        block = np.transpose(tensor, axes).reshape(4, 2 ** len(rest), 4, 2 ** len(rest))
        out[k] = np.einsum("ajbj->ab", block)
    return out
