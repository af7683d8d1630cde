"""Shared test fixtures for entgraph."""

import math
from pathlib import Path

import numpy as np
import pytest

from entgraph.core.config import get_settings
from entgraph.models.graph import EntangledGraph
from entgraph.models.state import PureState
from entgraph.models.verdict import Tolerances

FIXTURES_DIR = Path(__file__).parent / "fixtures"

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


def basis_state(n: int, amplitudes: dict[str, complex]) -> PureState:
    """Normalized state from bitstring -> amplitude."""
    vector = np.zeros(2**n, dtype=complex)
    for bits, value in amplitudes.items():
        vector[int(bits, 2)] = value
    return PureState.on_range(vector / np.linalg.norm(vector))


@pytest.fixture(autouse=True)
def _fresh_settings():
    """Settings are cached; drop the cache around tests that patch the environment."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def tol() -> Tolerances:
    return Tolerances()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def triangle_entangled() -> EntangledGraph:
    return EntangledGraph(n=3, entangled=[(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def triangle_classical() -> EntangledGraph:
    return EntangledGraph(n=3, classical=[(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def path_open_edge() -> EntangledGraph:
    """0 - 1 - 2 with an entangled and a classical edge; both ends are leaves."""
    return EntangledGraph(n=3, entangled=[(0, 1)], classical=[(1, 2)])


@pytest.fixture
def mixed_four() -> EntangledGraph:
    return EntangledGraph(n=4, entangled=[(0, 1), (2, 3)], classical=[(1, 2)])


@pytest.fixture
def bell() -> PureState:
    return basis_state(2, {"00": 1.0, "11": 1.0})


@pytest.fixture
def ghz3() -> PureState:
    return basis_state(3, {"000": 1.0, "111": 1.0})


@pytest.fixture
def w3() -> PureState:
    return basis_state(3, {"001": 1.0, "010": 1.0, "100": 1.0})


@pytest.fixture
def product3() -> PureState:
    return basis_state(3, {"000": 1.0})
