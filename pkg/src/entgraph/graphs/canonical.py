"""Canonical labels and exhaustive enumeration of entangled graphs.

A graph on n vertices is encoded as a colour vector over its n(n-1)/2 pairs in
lexicographic pair order: 0 = no edge, 1 = classical-only, 2 = entangled.
Reading the vector as a base-3 number (first pair most significant), the
canonical form is the minimum over all vertex permutations.
"""

import itertools
import logging
from collections.abc import Callable, Iterator
from functools import lru_cache

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import categorical_edge_match

from entgraph.core.config import get_settings
from entgraph.core.exceptions import CapExceededError
from entgraph.graphs.operations import require_valid, to_networkx
from entgraph.models.graph import EntangledGraph, Pair

logger = logging.getLogger(__name__)

NONE, CLASSICAL, ENTANGLED = 0, 1, 2

# Upper bound on colour entries materialized per canonicalization batch.
_BATCH_ENTRIES = 1 << 22


@lru_cache(maxsize=16)
def pair_index(n: int) -> dict[Pair, int]:
    return {pair: k for k, pair in enumerate(itertools.combinations(range(n), 2))}


@lru_cache(maxsize=16)
def _powers(n: int) -> np.ndarray:
    count = n * (n - 1) // 2
    return 3 ** np.arange(count - 1, -1, -1, dtype=np.int64)


@lru_cache(maxsize=16)
def _permutation_table(n: int) -> np.ndarray:
    """Row p gives, for each pair slot of the permuted graph, the source slot.

    Under permutation ``perm`` (vertex v -> perm[v]), the pair (a, b) of the
    image comes from the pair (inv[a], inv[b]) of the original.
    """
    index = pair_index(n)
    pairs = list(index)
    rows = []
    for perm in itertools.permutations(range(n)):
        inverse = np.argsort(perm)
        rows.append([index[tuple(sorted((int(inverse[a]), int(inverse[b]))))] for a, b in pairs])
    return np.array(rows, dtype=np.intp).reshape(len(rows), len(pairs))


def colour_vector(g: EntangledGraph) -> np.ndarray:
    index = pair_index(g.n)
    colours = np.zeros(len(index), dtype=np.int64)
    for pair in g.classical:
        colours[index[pair]] = CLASSICAL
    for pair in g.entangled:
        colours[index[pair]] = ENTANGLED
    return colours


def graph_from_colours(n: int, colours: np.ndarray) -> EntangledGraph:
    pairs = list(pair_index(n))
    return EntangledGraph(
        n=n,
        entangled=[p for p, c in zip(pairs, colours, strict=True) if c == ENTANGLED],
        classical=[p for p, c in zip(pairs, colours, strict=True) if c == CLASSICAL],
    )


def _check_cap(n: int) -> None:
    cap = get_settings().canonical_cap
    if n > cap:
        raise CapExceededError("canonical_form", n, cap)


def _canonical_values(n: int, colours: np.ndarray) -> np.ndarray:
    """Minimal base-3 value for each row of a (batch, pairs) colour array."""
    table = _permutation_table(n)
    images = colours[:, table]
    return (images @ _powers(n)).min(axis=1)


def _render(n: int, value: int) -> str:
    count = n * (n - 1) // 2
    digits = np.base_repr(value, base=3).rjust(count, "0") if count else ""
    return f"{n}:{digits}"


def canonical_form(g: EntangledGraph) -> str:
    """Permutation-invariant label ``"<n>:<colour digits>"``."""
    require_valid(g)
    _check_cap(g.n)
    value = int(_canonical_values(g.n, colour_vector(g)[None, :])[0])
    return _render(g.n, value)


def decode_label(label: str) -> EntangledGraph:
    """Representative graph of a canonical label."""
    head, _, digits = label.partition(":")
    n = int(head)
    colours = np.array([int(d) for d in digits], dtype=np.int64)
    if colours.shape[0] != n * (n - 1) // 2:
        raise ValueError(f"label {label!r} has the wrong number of pair digits")
    return graph_from_colours(n, colours)


def _raw_colours(n: int, start: int, stop: int) -> np.ndarray:
    codes = np.arange(start, stop, dtype=np.int64)
    return (codes[:, None] // _powers(n)[None, :]) % 3


def enumerate_graphs(n: int, up_to_iso: bool = False) -> Iterator[EntangledGraph]:
    """Yield every colouring of the pairs of n vertices.

    With ``up_to_iso`` one graph per class is yielded, namely the one whose
    own code is minimal in its class, in ascending code order.
    """
    cap = get_settings().enumeration_cap
    if n > cap:
        raise CapExceededError("enumerate_graphs", n, cap)
    if n < 1:
        raise ValueError("n must be at least 1")
    total = 3 ** (n * (n - 1) // 2)
    powers = _powers(n)
    yielded = 0
    chunk = max(1, _BATCH_ENTRIES // max(1, _permutation_table(n).size))
    for start in range(0, total, chunk):
        colours = _raw_colours(n, start, min(start + chunk, total))
        if up_to_iso:
            keep = _canonical_values(n, colours) == colours @ powers
            colours = colours[keep]
        for row in colours:
            yielded += 1
            yield graph_from_colours(n, row)
    logger.debug("Enumerated %d graphs on %d vertices (up_to_iso=%s)", yielded, n, up_to_iso)


def count_classes(n: int, predicate: Callable[[EntangledGraph], bool] | None = None) -> int:
    """Number of isomorphism classes, optionally restricted by a predicate."""
    return sum(
        1 for g in enumerate_graphs(n, up_to_iso=True) if predicate is None or predicate(g)
    )


def find_isomorphism(g: EntangledGraph, h: EntangledGraph) -> tuple[int, ...] | None:
    """A permutation ``perm`` with ``permute(g, perm) == h``, or None.

    Parameters
    ----------
    g, h : EntangledGraph
        Graphs to match; edge kinds must agree.

    Returns
    -------
    tuple of int or None
        ``perm[v]`` is the vertex of ``h`` that ``v`` maps to.
    """
    if g.n != h.n or len(g.entangled) != len(h.entangled) or len(g.classical) != len(h.classical):
        return None
    matcher = nx.isomorphism.GraphMatcher(
        to_networkx(g), to_networkx(h), edge_match=categorical_edge_match("kind", None)
    )
    mapping = next(matcher.isomorphisms_iter(), None)
    if mapping is None:
        return None
    return tuple(mapping[v] for v in range(g.n))
