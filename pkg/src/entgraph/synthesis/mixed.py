"""Universal mixed state for an entangled graph, kept in sparse excitation-block form.

With Z = 2(N-1)^2 the state is

* vacuum ``|0..0>`` with weight (N^2 - 3N + M/2 + 2) / Z,
* single excitations ``|1_i>`` with weight ((N-1) - m_i/2) / Z,
* coherence 1/Z between ``|1_i>`` and ``|1_j>`` for every entangled pair,
* double excitation ``|1_i 1_j>`` with weight (1/2) / Z for every uncorrelated pair.
"""

import logging

import numpy as np

from entgraph.core.config import get_settings
from entgraph.core.exceptions import CapExceededError, QubitLabelError, SynthesisError
from entgraph.graphs import profile, require_valid
from entgraph.models.graph import EntangledGraph
from entgraph.models.state import DensityOperator, ExcitationBlockState

logger = logging.getLogger(__name__)


def normalization(n: int) -> float:
    """Z = 2(N-1)^2."""
    return 2.0 * (n - 1) ** 2


def build_mixed(g: EntangledGraph) -> ExcitationBlockState:
    """Mixed state whose pair structure is exactly ``g``.

    Parameters
    ----------
    g : EntangledGraph
        Valid graph on at least two vertices.

    Returns
    -------
    ExcitationBlockState
        Sparse form: one-excitation block, double-excitation weights and the
        vacuum weight.

    Raises
    ------
    InvalidGraphError
        If ``g`` fails validation.
    SynthesisError
        If ``g`` has a single vertex.
    """
    require_valid(g)
    if g.n < 2:
        raise SynthesisError(
            "the mixed-state construction needs at least two qubits; "
            "a single vertex is handled by the feasibility rules"
        )
    n = g.n
    z = normalization(n)
    prof = profile(g)

    single = np.zeros((n, n))
    for i in range(n):
        single[i, i] = ((n - 1) - prof.m[i] / 2) / z
    for i, j in g.entangled:
        single[i, j] = single[j, i] = 1.0 / z

    correlated = set(g.correlated)
    doubles = {pair: 0.5 / z for pair in g.all_pairs() if pair not in correlated}
    vacuum = (n * n - 3 * n + prof.total / 2 + 2) / z

    state = ExcitationBlockState(n=n, vacuum=vacuum, single_block=single, doubles=doubles)
    logger.debug(
        "Built mixed state: n=%d, |S^E|=%d, |S^CC|=%d, M=%d",
        n,
        len(g.entangled),
        len(g.classical),
        prof.total,
    )
    return state


def validate_excitation(s: ExcitationBlockState, tol: float = 1e-10) -> list[str]:
    """Trace, sign and positivity problems of an excitation-block state."""
    problems: list[str] = []
    if abs(s.trace - 1.0) > tol:
        problems.append(f"trace {s.trace:.12g} differs from 1")
    if s.vacuum < -tol:
        problems.append(f"negative vacuum weight {s.vacuum:.3e}")
    if np.max(np.abs(s.single_block - s.single_block.T), initial=0.0) > tol:
        problems.append("single-excitation block is not symmetric")
    elif s.n and float(np.linalg.eigvalsh(s.single_block)[0]) < -tol:
        problems.append("single-excitation block is not positive semidefinite")
    negative = [pair for pair, w in s.doubles.items() if w < -tol]
    if negative:
        problems.append(f"negative double-excitation weights at {sorted(negative)}")
    return problems


def expand_dense(s: ExcitationBlockState) -> DensityOperator:
    """Full 2^n x 2^n operator; qubit 0 is the most significant bit."""
    cap = get_settings().dense_cap
    if s.n > cap:
        raise CapExceededError("expand_dense", s.n, cap)
    n = s.n
    bits = [1 << (n - 1 - i) for i in range(n)]
    matrix = np.zeros((2**n, 2**n), dtype=complex)
    matrix[0, 0] = s.vacuum
    index = np.array(bits)
    matrix[np.ix_(index, index)] = s.single_block
    for (i, j), weight in s.doubles.items():
        k = bits[i] | bits[j]
        matrix[k, k] += weight
    return DensityOperator(qubits=tuple(range(n)), matrix=matrix)


def _check_qubit(s: ExcitationBlockState, i: int) -> None:
    if not 0 <= i < s.n:
        raise QubitLabelError(f"qubit {i} out of range for n={s.n}")


def reduce_pair(s: ExcitationBlockState, i: int, j: int) -> DensityOperator:
    """Two-qubit reduction on (i, j) straight from the sparse form.

    Basis index is 2*q_i + q_j. With r_k the double-excitation weight touching
    qubit k, W the total double weight and w the weight on {i, j}:
    p(11) = w, p(10) = S_ii + r_i - w, p(01) = S_jj + r_j - w and the
    coherence between 10 and 01 is S_ij.
    """
    _check_qubit(s, i)
    _check_qubit(s, j)
    if i == j:
        raise QubitLabelError(f"pair ({i}, {j}) must have distinct qubits")
    single = s.single_block
    rows = s.double_row_sums
    w = s.doubles.get((min(i, j), max(i, j)), 0.0)
    p10 = single[i, i] + rows[i] - w
    p01 = single[j, j] + rows[j] - w
    p00 = (
        s.vacuum
        + float(np.trace(single)) - single[i, i] - single[j, j]
        + s.double_total - rows[i] - rows[j] + w
    )
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = p00
    rho[1, 1] = p01
    rho[2, 2] = p10
    rho[3, 3] = w
    rho[2, 1] = single[i, j]
    rho[1, 2] = single[j, i]
    return DensityOperator(qubits=(i, j), matrix=rho)


def marginal(s: ExcitationBlockState, i: int) -> DensityOperator:
    """Single-qubit reduction diag(1 - p, p) with p the excitation probability of qubit i."""
    _check_qubit(s, i)
    p = s.single_block[i, i] + s.double_row_sums[i]
    return DensityOperator(qubits=(i,), matrix=np.diag([s.trace - p, p]))
