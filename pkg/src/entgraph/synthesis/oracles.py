"""Closed-form pair and single-qubit reductions of the universal mixed state.

They depend only on N and serve as reference values for ``reduce_pair`` and
``marginal``.
"""

from collections.abc import Sequence
from fractions import Fraction

import numpy as np


def _z(n: int) -> int:
    if n < 2:
        raise ValueError("closed forms are defined for N >= 2")
    return 2 * (n - 1) ** 2


def entangled_pair_oracle(n: int) -> np.ndarray:
    """Reduction of an entangled pair: coherence 1/Z between |01> and |10>, no |11>."""
    z = _z(n)
    rho = np.diag([2.0 * (n - 1) * (n - 2), n - 1.0, n - 1.0, 0.0]).astype(complex)
    rho[1, 2] = rho[2, 1] = 1.0
    return rho / z


def classical_pair_oracle(n: int) -> np.ndarray:
    """Reduction of a classically correlated pair (diagonal, not factorized)."""
    z = _z(n)
    return np.diag([2.0 * (n - 1) * (n - 2), n - 1.0, n - 1.0, 0.0]).astype(complex) / z


def marginal_oracle(n: int) -> np.ndarray:
    z = _z(n)
    return np.diag([(2.0 * n * n - 5.0 * n + 3.0) / z, (n - 1.0) / z]).astype(complex)


def uncorrelated_pair_oracle(n: int) -> np.ndarray:
    """rho_i (x) rho_j built from two copies of the marginal."""
    single = marginal_oracle(n)
    return np.kron(single, single)


def entangled_pair_concurrence(n: int) -> float:
    """1 / (N-1)^2."""
    return 1.0 / (n - 1) ** 2


def trace_identity_holds(n: int, m: Sequence[int]) -> bool:
    """Check (N^2-3N+M/2+2) + sum((N-1) - m_i/2) + M/2 = 2(N-1)^2 in exact arithmetic."""
    if len(m) != n:
        raise ValueError(f"m has {len(m)} entries, expected {n}")
    half = Fraction(1, 2)
    total_m = half * sum(m)
    lhs = (n * n - 3 * n + total_m * half + 2) + sum((n - 1) - mi * half for mi in m)
    lhs += total_m * half
    return lhs == 2 * (n - 1) ** 2
