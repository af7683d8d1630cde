"""Pure states for the feasible three-qubit graph classes.

Letters a, b, g, h, i, j carry explicit states; c, d, e and f have no pure
representative. Which graph each state realizes is derived by classifying it.
"""

import logging
import math
from functools import lru_cache

import numpy as np

from entgraph.core.exceptions import CatalogError
from entgraph.graphs import find_isomorphism
from entgraph.linalg import permute_pure
from entgraph.models.graph import EntangledGraph
from entgraph.models.state import PureState

logger = logging.getLogger(__name__)

# basis label -> amplitude, before normalization
_CATALOG: dict[str, dict[str, float]] = {
    "a": {"000": 1.0},
    "b": {"000": 1.0, "011": 1.0},
    "g": {"001": 1.0, "010": 1.0, "100": 1.0},
    "h": {"000": 1.0, "100": 1.0, "110": 1.0, "111": 1.0},
    "i": {"000": 1.0, "011": 1.0, "111": 1.0},
    "j": {"000": 1.0, "111": 1.0},
}

INFEASIBLE_LETTERS = ("c", "d", "e", "f")
CATALOG_LETTERS = tuple(_CATALOG)


def three_qubit_catalog(label: str) -> PureState:
    """Catalog state for letter ``label``."""
    if label in INFEASIBLE_LETTERS:
        raise CatalogError(label, "no pure representative")
    if label not in _CATALOG:
        raise CatalogError(label, "unknown catalog letter")
    amplitudes = np.zeros(8, dtype=complex)
    for basis, value in _CATALOG[label].items():
        amplitudes[int(basis, 2)] = value
    amplitudes /= math.sqrt(float(np.sum(np.abs(amplitudes) ** 2)))
    return PureState.on_range(amplitudes)


@lru_cache(maxsize=1)
def catalog_graphs() -> dict[str, EntangledGraph]:
    """Letter -> graph realized by its catalog state."""
    from entgraph.analysis.classifier import extract_graph

    graphs = {label: extract_graph(three_qubit_catalog(label)).graph for label in _CATALOG}
    for label, g in graphs.items():
        logger.debug("Catalog %s: S^E=%s S^CC=%s", label, list(g.entangled), list(g.classical))
    return graphs


def catalog_witness(g: EntangledGraph) -> tuple[str, PureState] | None:
    """Catalog letter and relabelled state realizing the 3-vertex graph ``g``, if any."""
    if g.n != 3:
        return None
    for label, reference in catalog_graphs().items():
        perm = find_isomorphism(reference, g)
        if perm is not None:
            return label, permute_pure(three_qubit_catalog(label), perm)
    return None
