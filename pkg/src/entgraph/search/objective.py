"""Penalty objective for the pure-state search.

L(psi) = sum over S^E of max(0, c_floor - C)
       + sum over S^CC of [N + max(0, d_floor - D)]
       + sum over uncorrelated pairs of D

with C the concurrence, N the negativity and D the factorization distance of
each pair reduction. L = 0 means every graph constraint holds with margin.
"""

import numpy as np

from entgraph.core.exceptions import DimensionError, InvalidStateError
from entgraph.linalg import (
    concurrence_batch,
    factorization_distance_batch,
    negativity_batch,
    pair_reductions,
)
from entgraph.models.graph import EntangledGraph, PairClass
from entgraph.models.search import SearchConfig
from entgraph.models.state import PureState

RENORMALIZE_TOL = 1e-6


class PenaltyObjective:
    """Objective for one target graph, callable on raw real parameter vectors.

    A parameter vector ``x`` of length 2^(n+1) - 1 holds the real parts of the
    amplitudes, then the imaginary parts of all amplitudes but the first, which
    is kept real to fix the global phase. Projection to the unit sphere removes
    the norm, leaving 2^(n+1) - 2 degrees of freedom.
    """

    def __init__(self, g: EntangledGraph, cfg: SearchConfig):
        self.graph = g
        self.n = g.n
        self.dim = 2**g.n
        self.pairs = g.all_pairs()
        classes = [g.pair_class(i, j) for i, j in self.pairs]
        self._entangled = np.array([c is PairClass.ENTANGLED for c in classes], dtype=bool)
        self._classical = np.array([c is PairClass.CLASSICAL_ONLY for c in classes], dtype=bool)
        self._uncorrelated = ~(self._entangled | self._classical)
        self.concurrence_floor = cfg.target_concurrence_floor
        self.correlation_floor = cfg.correlation_floor

    @property
    def parameter_count(self) -> int:
        return 2 * self.dim - 1

    def to_amplitudes(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        psi = x[: self.dim].astype(complex)
        psi[1:] += 1j * x[self.dim :]
        norm = np.linalg.norm(psi)
        if norm == 0.0:
            psi = np.zeros(self.dim, dtype=complex)
            psi[0] = 1.0
            return psi
        return psi / norm

    def from_amplitudes(self, amplitudes: np.ndarray) -> np.ndarray:
        psi = np.asarray(amplitudes, dtype=complex)
        if psi[0] != 0:
            psi = psi * np.exp(-1j * np.angle(psi[0]))
        return np.concatenate([psi.real, psi.imag[1:]])

    def amplitude_value(self, amplitudes: np.ndarray) -> float:
        if not self.pairs:
            return 0.0
        rhos = pair_reductions(amplitudes, self.n, self.pairs)
        total = 0.0
        if self._entangled.any():
            conc = concurrence_batch(rhos[self._entangled])
            total += float(np.clip(self.concurrence_floor - conc, 0.0, None).sum())
        if self._classical.any():
            block = rhos[self._classical]
            dist = factorization_distance_batch(block)
            total += float(negativity_batch(block).sum())
            total += float(np.clip(self.correlation_floor - dist, 0.0, None).sum())
        if self._uncorrelated.any():
            total += float(factorization_distance_batch(rhos[self._uncorrelated]).sum())
        return total

    def __call__(self, x: np.ndarray) -> float:
        return self.amplitude_value(self.to_amplitudes(x))


def objective(psi: PureState, g: EntangledGraph, cfg: SearchConfig | None = None) -> float:
    """L(psi) for target graph ``g``; states within 1e-6 of unit norm are renormalized."""
    cfg = cfg or SearchConfig()
    if psi.k != g.n:
        raise DimensionError(f"state has {psi.k} qubits, graph has {g.n} vertices")
    if abs(psi.norm - 1.0) > RENORMALIZE_TOL:
        raise InvalidStateError([f"state norm {psi.norm:.9g} is not within 1e-6 of 1"])
    ordered = psi.reorder(sorted(psi.qubits))
    if ordered.qubits != tuple(range(g.n)):
        raise DimensionError(f"qubit labels {psi.qubits} do not match vertices 0..{g.n - 1}")
    return PenaltyObjective(g, cfg).amplitude_value(ordered.amplitudes / ordered.norm)
