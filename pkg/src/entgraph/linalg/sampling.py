"""Random states and unitaries for property tests and search restarts."""

import numpy as np


def ginibre(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_density(rng: np.random.Generator, rank: int = 4, dim: int = 4) -> np.ndarray:
    """Random density matrix G G^dagger / tr(G G^dagger) with G a dim x rank Ginibre matrix."""
    g = ginibre(rng, dim, rank)
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng: np.random.Generator, dim: int = 2) -> np.ndarray:
    """Haar-random unitary from the QR decomposition of a Ginibre matrix."""
    q, r = np.linalg.qr(ginibre(rng, dim, dim))
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases[None, :]


def random_pure(rng: np.random.Generator, n: int) -> np.ndarray:
    vector = ginibre(rng, 2**n, 1).reshape(-1)
    return vector / np.linalg.norm(vector)
