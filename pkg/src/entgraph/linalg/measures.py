"""Two-qubit entanglement and correlation measures.

Every measure has a batched kernel over stacks of 4x4 matrices (shape
``(..., 4, 4)``); the single-operator functions delegate to them.
"""

import logging

import numpy as np

from entgraph.core.exceptions import DimensionError, InvalidStateError
from entgraph.linalg.operators import partial_transpose_matrix
from entgraph.linalg.validation import require_density
from entgraph.models.state import DensityOperator

logger = logging.getLogger(__name__)

# sigma_y (x) sigma_y
SPIN_FLIP = np.array(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
    dtype=complex,
)

# Eigenvalues of rho below this are round-off and taken as zero.
ZERO_EIGENVALUE = 1e-14


def _as_matrix(value: DensityOperator | np.ndarray) -> np.ndarray:
    return value.matrix if isinstance(value, DensityOperator) else np.asarray(value)


def _two_qubit(rho: DensityOperator) -> np.ndarray:
    if rho.k != 2:
        raise DimensionError(f"expected a 2-qubit operator, got {rho.k} qubits")
    return rho.matrix


def _hermitize(matrices: np.ndarray) -> np.ndarray:
    return 0.5 * (matrices + np.conj(np.swapaxes(matrices, -1, -2)))


def hermitian_eigenvalues(m: DensityOperator | np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Real eigenvalues in descending order."""
    matrix = _as_matrix(m)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {matrix.shape}")
    deviation = float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0
    if deviation > tol:
        raise InvalidStateError([f"matrix is not Hermitian (max deviation {deviation:.3e})"])
    return np.linalg.eigvalsh(_hermitize(matrix))[::-1]


def _weighted_eigenvectors(matrices: np.ndarray) -> np.ndarray:
    """Columns sqrt(l_k) v_k, so that W W^dagger = rho; round-off eigenvalues dropped."""
    values, vectors = np.linalg.eigh(_hermitize(matrices))
    values = np.where(values < ZERO_EIGENVALUE, 0.0, values)
    return vectors * np.sqrt(values)[..., None, :]


def concurrence_batch(rhos: np.ndarray) -> np.ndarray:
    """Wootters concurrence of each 4x4 operator.

    The lambdas (square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho))
    are taken as the singular values of W^T (sigma_y x sigma_y) W, which
    avoids square roots of near-zero eigenvalues on low-rank states.
    """
    rhos = np.asarray(rhos, dtype=complex)
    w = _weighted_eigenvectors(rhos)
    tau = np.swapaxes(w, -1, -2) @ SPIN_FLIP @ w
    lambdas = np.linalg.svd(tau, compute_uv=False)
    return np.clip(lambdas[..., 0] - lambdas[..., 1:].sum(axis=-1), 0.0, None)


def negativity_batch(rhos: np.ndarray) -> np.ndarray:
    """Sum of |negative eigenvalues| of each partial transpose."""
    transposed = _hermitize(partial_transpose_matrix(np.asarray(rhos, dtype=complex), 1))
    values = np.linalg.eigvalsh(transposed)
    return np.clip(-values, 0.0, None).sum(axis=-1)


def pair_marginals_batch(rhos: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Single-qubit reductions (first, second) of each 4x4 operator."""
    rhos = np.asarray(rhos)
    tensor = rhos.reshape(rhos.shape[:-2] + (2, 2, 2, 2))
    first = np.einsum("...ajbj->...ab", tensor)
    second = np.einsum("...jajb->...ab", tensor)
    return first, second


def factorization_distance_batch(rhos: np.ndarray) -> np.ndarray:
    """Frobenius distance of each 4x4 operator from the product of its marginals."""
    rhos = np.asarray(rhos, dtype=complex)
    first, second = pair_marginals_batch(rhos)
    product = np.einsum("...ac,...bd->...abcd", first, second).reshape(rhos.shape)
    return np.linalg.norm(rhos - product, axis=(-2, -1))


def concurrence(rho: DensityOperator) -> float:
    """Wootters concurrence of a valid two-qubit density operator.

    Parameters
    ----------
    rho : DensityOperator
        Operator on exactly two qubits.

    Returns
    -------
    float
        max(0, l1 - l2 - l3 - l4), in [0, 1].

    Raises
    ------
    DimensionError
        If ``rho`` is not on two qubits.
    InvalidStateError
        If ``rho`` is not Hermitian, unit-trace and positive semidefinite.
    """
    matrix = _two_qubit(require_density(rho))
    return float(concurrence_batch(matrix[None])[0])


def negativity(rho: DensityOperator) -> float:
    """Sum of |negative eigenvalues| of the partial transpose of a valid two-qubit operator."""
    return float(negativity_batch(_two_qubit(require_density(rho))[None])[0])


def factorization_distance(rho: DensityOperator) -> float:
    """||rho - rho_i (x) rho_j||_F for a two-qubit operator."""
    return float(factorization_distance_batch(_two_qubit(rho)[None])[0])


def frobenius_distance(a: DensityOperator | np.ndarray, b: DensityOperator | np.ndarray) -> float:
    left, right = _as_matrix(a), _as_matrix(b)
    if left.shape != right.shape:
        raise DimensionError(f"shape mismatch: {left.shape} vs {right.shape}")
    return float(np.linalg.norm(left - right))


def pure_concurrence(amplitudes: np.ndarray) -> float:
    """2|ad - bc| for a two-qubit pure state (a, b, c, d)."""
    a, b, c, d = np.asarray(amplitudes, dtype=complex).reshape(4)
    return float(2.0 * abs(a * d - b * c))
