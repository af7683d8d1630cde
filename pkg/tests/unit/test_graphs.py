"""Unit tests for graph operations, canonical labels and enumeration."""

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entgraph.core.exceptions import CapExceededError, InvalidGraphError
from entgraph.graphs import (
    canonical_form,
    colour_vector,
    connected_components,
    count_classes,
    decode_label,
    degree,
    enumerate_graphs,
    find_isomorphism,
    graph_from_colours,
    is_complete_web,
    is_connected,
    open_edges,
    permute,
    profile,
    require_valid,
    subgraph,
    to_networkx,
    validate,
)
from entgraph.models.graph import EntangledGraph


@st.composite
def graphs(draw, min_n=2, max_n=5):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    size = n * (n - 1) // 2
    colours = draw(st.lists(st.integers(0, 2), min_size=size, max_size=size))
    return graph_from_colours(n, colours)


@st.composite
def graph_and_permutation(draw):
    g = draw(graphs())
    perm = draw(st.permutations(list(range(g.n))))
    return g, perm


class TestValidation:
    def test_valid_graph_has_no_violations(self, path_open_edge):
        assert validate(path_open_edge).is_valid

    def test_self_loop(self):
        report = validate(EntangledGraph(n=3, entangled=[(1, 1)]))
        assert any("self-loop" in v for v in report.violations)

    def test_index_out_of_range(self):
        report = validate(EntangledGraph(n=3, classical=[(0, 3)]))
        assert any("out of range" in v for v in report.violations)

    def test_pair_in_both_sets(self):
        report = validate(EntangledGraph(n=3, entangled=[(0, 1)], classical=[(1, 0)]))
        assert report.violations == ["pair in both sets: (0, 1)"]

    def test_require_valid_raises_with_violations(self):
        with pytest.raises(InvalidGraphError) as exc_info:
            require_valid(EntangledGraph(n=2, entangled=[(0, 2)]))
        assert exc_info.value.violations


class TestProfile:
    def test_uncorrelated_counts(self, path_open_edge):
        prof = profile(path_open_edge)
        assert prof.m == (1, 0, 1)
        assert prof.total == 1

    def test_complete_web_has_zero_total(self, triangle_entangled):
        assert profile(triangle_entangled).total == 0

    def test_degrees(self, path_open_edge):
        assert degree(path_open_edge, 1) == 2

    @given(graphs(min_n=2, max_n=7))
    def test_total_is_half_the_sum(self, g):
        prof = profile(g)
        assert 2 * prof.total == sum(prof.m)
        assert prof.total == g.pair_count - len(g.correlated)


class TestStructure:
    def test_to_networkx_edge_kinds(self, path_open_edge):
        graph = to_networkx(path_open_edge)
        assert graph.number_of_nodes() == 3
        assert nx.get_edge_attributes(graph, "kind") == {
            (0, 1): "entangled",
            (1, 2): "classical-only",
        }

    def test_components_sorted(self):
        g = EntangledGraph(n=5, entangled=[(3, 4)], classical=[(0, 2)])
        assert connected_components(g) == [(0, 2), (1,), (3, 4)]
        assert not is_connected(g)

    def test_open_edges(self, path_open_edge):
        assert open_edges(path_open_edge) == [(0, (0, 1)), (2, (1, 2))]

    def test_isolated_edge_is_not_significant(self):
        g = EntangledGraph(n=5, entangled=[(0, 1)], classical=[(2, 3), (3, 4)])
        assert [leaf for leaf, _ in open_edges(g)] == [0, 1, 2, 4]
        assert [leaf for leaf, _ in open_edges(g, significant_only=True)] == [2, 4]

    def test_complete_web(self, triangle_entangled, path_open_edge):
        assert is_complete_web(triangle_entangled)
        assert not is_complete_web(path_open_edge)

    def test_subgraph_relabels(self):
        g = EntangledGraph(n=5, entangled=[(1, 3)], classical=[(3, 4), (0, 1)])
        sub = subgraph(g, [4, 3, 1])
        assert sub == EntangledGraph(n=3, entangled=[(0, 1)], classical=[(1, 2)])

    def test_permute(self, path_open_edge):
        moved = permute(path_open_edge, [2, 0, 1])
        assert moved == EntangledGraph(n=3, entangled=[(0, 2)], classical=[(0, 1)])

    def test_permute_rejects_non_permutation(self, path_open_edge):
        with pytest.raises(ValueError):
            permute(path_open_edge, [0, 0, 1])


class TestCanonicalForm:
    def test_colour_vector(self, path_open_edge):
        assert colour_vector(path_open_edge).tolist() == [2, 0, 1]

    def test_known_labels(self, triangle_entangled, triangle_classical):
        assert canonical_form(triangle_entangled) == "3:222"
        assert canonical_form(triangle_classical) == "3:111"
        assert canonical_form(EntangledGraph(n=3, entangled=[(0, 1)])) == "3:002"
        assert canonical_form(EntangledGraph(n=1)) == "1:"

    def test_decode_label_round_trip(self, mixed_four):
        label = canonical_form(mixed_four)
        assert canonical_form(decode_label(label)) == label

    def test_decode_label_wrong_length(self):
        with pytest.raises(ValueError):
            decode_label("3:12")

    @settings(max_examples=60, deadline=None)
    @given(graph_and_permutation())
    def test_permutation_invariance(self, case):
        g, perm = case
        assert canonical_form(permute(g, perm)) == canonical_form(g)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=4), graphs(max_n=4))
    def test_equal_labels_iff_isomorphic(self, g, h):
        same = canonical_form(g) == canonical_form(h)
        assert same == (find_isomorphism(g, h) is not None)

    def test_cap(self, monkeypatch):
        monkeypatch.setenv("ENTGRAPH_CANONICAL_CAP", "4")
        with pytest.raises(CapExceededError):
            canonical_form(EntangledGraph(n=5))


class TestEnumeration:
    @pytest.mark.parametrize("n, raw, classes", [(1, 1, 1), (2, 3, 3), (3, 27, 10), (4, 729, 66)])
    def test_counts(self, n, raw, classes):
        assert sum(1 for _ in enumerate_graphs(n)) == raw
        assert count_classes(n) == classes

    def test_representatives_are_distinct_classes(self):
        labels = [canonical_form(g) for g in enumerate_graphs(4, up_to_iso=True)]
        assert len(labels) == len(set(labels)) == 66

    def test_every_raw_graph_has_a_representative(self):
        representatives = {canonical_form(g) for g in enumerate_graphs(3, up_to_iso=True)}
        assert {canonical_form(g) for g in enumerate_graphs(3)} == representatives

    def test_count_with_predicate(self):
        # connected three-vertex classes: three paths and four triangles
        assert count_classes(3, is_connected) == 7

    def test_cap(self):
        with pytest.raises(CapExceededError):
            next(enumerate_graphs(7))


class TestIsomorphism:
    def test_finds_mapping(self, path_open_edge):
        perm = (2, 1, 0)
        image = permute(path_open_edge, perm)
        found = find_isomorphism(path_open_edge, image)
        assert found is not None
        assert permute(path_open_edge, found) == image

    def test_edge_kinds_matter(self):
        a = EntangledGraph(n=3, entangled=[(0, 1)], classical=[(1, 2)])
        b = EntangledGraph(n=3, entangled=[(0, 1), (1, 2)])
        assert find_isomorphism(a, b) is None

    def test_beyond_canonical_cap(self):
        # matched on edge kinds, no permutation table needed
        g = EntangledGraph(
            n=10,
            entangled=[(i, i + 1) for i in range(0, 9, 2)],
            classical=[(i, i + 1) for i in range(1, 9, 2)],
        )
        perm = tuple(range(9, -1, -1))
        image = permute(g, perm)
        found = find_isomorphism(g, image)
        assert found is not None
        assert permute(g, found) == image
        swapped = EntangledGraph(n=10, entangled=g.classical, classical=g.entangled)
        assert find_isomorphism(g, swapped) is None

    def test_all_permutations_of_triangle(self, triangle_entangled):
        for perm in itertools.permutations(range(3)):
            assert find_isomorphism(triangle_entangled, permute(triangle_entangled, perm))
