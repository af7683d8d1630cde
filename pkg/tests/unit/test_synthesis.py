"""Unit tests for state synthesis: mixed state, closed forms, web states, catalog."""

import itertools

import numpy as np
import pytest

from entgraph.analysis import extract_graph
from entgraph.core.exceptions import (
    CapExceededError,
    CatalogError,
    QubitLabelError,
    SynthesisError,
    WebParameterError,
)
from entgraph.graphs import enumerate_graphs, find_isomorphism, graph_from_colours, profile
from entgraph.linalg import concurrence
from entgraph.models.graph import EntangledGraph, PairClass
from entgraph.models.state import ExcitationBlockState
from entgraph.synthesis import (
    CATALOG_LETTERS,
    INFEASIBLE_LETTERS,
    build_mixed,
    build_web,
    catalog_graphs,
    catalog_witness,
    classical_pair_oracle,
    default_parameters,
    entangled_pair_concurrence,
    entangled_pair_oracle,
    expand_dense,
    marginal,
    marginal_oracle,
    normalization,
    realize_web,
    reduce_pair,
    simplex_grid,
    three_qubit_catalog,
    trace_identity_holds,
    uncorrelated_pair_oracle,
    validate_excitation,
)


def _random_graph(rng: np.random.Generator, n: int) -> EntangledGraph:
    return graph_from_colours(n, rng.integers(0, 3, size=n * (n - 1) // 2))


def _web(n: int, entangled: list[tuple[int, int]]) -> EntangledGraph:
    pairs = itertools.combinations(range(n), 2)
    return EntangledGraph(
        n=n, entangled=entangled, classical=[p for p in pairs if p not in entangled]
    )


class TestBuildMixed:
    def test_normalization(self):
        assert normalization(3) == 8.0
        assert normalization(5) == 32.0

    def test_single_vertex_rejected(self):
        with pytest.raises(SynthesisError):
            build_mixed(EntangledGraph(n=1))

    def test_empty_pair_is_maximally_mixed(self):
        state = build_mixed(EntangledGraph(n=2))
        np.testing.assert_allclose(expand_dense(state).matrix, np.eye(4) / 4, atol=1e-15)

    def test_bell_case_at_two_qubits(self):
        state = build_mixed(EntangledGraph(n=2, entangled=[(0, 1)]))
        assert concurrence(reduce_pair(state, 0, 1)) == pytest.approx(1.0, abs=1e-12)

    def test_coefficients(self, path_open_edge):
        state = build_mixed(path_open_edge)
        z = 8.0
        assert state.vacuum == pytest.approx(2.5 / z)
        np.testing.assert_allclose(np.diag(state.single_block), [1.5 / z, 2.0 / z, 1.5 / z])
        assert state.single_block[0, 1] == pytest.approx(1.0 / z)
        assert state.single_block[1, 2] == 0.0
        assert state.doubles == {(0, 2): pytest.approx(0.5 / z)}

    def test_sparse_size(self, rng):
        g = _random_graph(rng, 9)
        assert len(build_mixed(g).doubles) == profile(g).total

    @pytest.mark.parametrize("n", range(2, 9))
    def test_trace_and_validity(self, rng, n):
        state = build_mixed(_random_graph(rng, n))
        assert state.trace == pytest.approx(1.0, abs=1e-14)
        assert validate_excitation(state) == []

    def test_validate_excitation_reports_trace(self):
        s = ExcitationBlockState(n=2, vacuum=0.5, single_block=np.eye(2) * 0.5)
        assert any("trace" in p for p in validate_excitation(s))

    def test_reduce_pair_bad_qubits(self, triangle_entangled):
        state = build_mixed(triangle_entangled)
        with pytest.raises(QubitLabelError):
            reduce_pair(state, 0, 3)
        with pytest.raises(QubitLabelError):
            reduce_pair(state, 1, 1)

    def test_dense_cap(self, monkeypatch):
        monkeypatch.setenv("ENTGRAPH_DENSE_CAP", "3")
        with pytest.raises(CapExceededError):
            expand_dense(build_mixed(EntangledGraph(n=4)))

    def test_sparse_matches_dense(self, rng):
        from entgraph.linalg import partial_trace

        for n in (3, 5, 7):
            state = build_mixed(_random_graph(rng, n))
            dense = expand_dense(state)
            for i, j in itertools.combinations(range(n), 2):
                np.testing.assert_allclose(
                    reduce_pair(state, i, j).matrix,
                    partial_trace(dense, [i, j]).matrix,
                    atol=1e-14,
                )


class TestClosedForms:
    @pytest.mark.parametrize("n", range(3, 11))
    def test_pairs_and_marginals(self, rng, n):
        g = _random_graph(rng, n)
        state = build_mixed(g)
        oracle = {
            PairClass.ENTANGLED: entangled_pair_oracle(n),
            PairClass.CLASSICAL_ONLY: classical_pair_oracle(n),
            PairClass.UNCORRELATED: uncorrelated_pair_oracle(n),
        }
        for i, j in g.all_pairs():
            np.testing.assert_allclose(
                reduce_pair(state, i, j).matrix, oracle[g.pair_class(i, j)], rtol=0, atol=1e-14
            )
        for i in range(n):
            np.testing.assert_allclose(marginal(state, i).matrix, marginal_oracle(n), atol=1e-14)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_concurrence_law(self, n):
        g = EntangledGraph(n=n, entangled=[(0, 1)])
        value = concurrence(reduce_pair(build_mixed(g), 0, 1))
        assert value == pytest.approx(entangled_pair_concurrence(n), abs=1e-10)

    def test_concurrence_values(self):
        assert entangled_pair_concurrence(2) == 1.0
        assert entangled_pair_concurrence(3) == 0.25

    def test_classical_differs_from_uncorrelated(self):
        gap = np.linalg.norm(classical_pair_oracle(3) - uncorrelated_pair_oracle(3))
        assert gap == pytest.approx(0.125)

    def test_entangled_and_classical_differ_by_coherence(self):
        diff = entangled_pair_oracle(5) - classical_pair_oracle(5)
        assert np.count_nonzero(diff) == 2
        assert diff[1, 2] == pytest.approx(1.0 / 32.0)

    def test_trace_identity_over_profiles(self):
        for n in range(2, 6):
            for g in enumerate_graphs(n, up_to_iso=True):
                assert trace_identity_holds(n, profile(g).m)

    def test_trace_identity_length_checked(self):
        with pytest.raises(ValueError):
            trace_identity_holds(3, [0, 0])


class TestWebStates:
    def test_default_parameters(self):
        assert default_parameters(_web(4, [])).gamma == 0.0
        params = default_parameters(_web(4, [(0, 1)]))
        assert params.alpha == params.beta == params.gamma == pytest.approx(3**-0.5)

    def test_amplitudes(self):
        g = _web(3, [(0, 1)])
        state = build_web(g, 0.6, 0.6, np.sqrt(1 - 0.72))
        assert state.amplitudes[0] == pytest.approx(0.6)
        assert state.amplitudes[7] == pytest.approx(0.6)
        assert state.amplitudes[0b110] == pytest.approx(np.sqrt(0.28))
        assert state.norm == pytest.approx(1.0)

    @pytest.mark.parametrize(
        "g, params",
        [
            (EntangledGraph(n=3, entangled=[(0, 1)]), (0.6, 0.6, 0.53)),
            (_web(2, [(0, 1)]), (0.6, 0.6, 0.53)),
            (_web(3, []), (0.6, 0.6, 0.53)),
            (_web(3, [(0, 1)]), (0.6, 0.6, 0.0)),
            (_web(3, [(0, 1)]), (0.0, 0.6, 0.8)),
            (_web(3, [(0, 1)]), (0.5, 0.5, 0.5)),
        ],
    )
    def test_parameter_errors(self, g, params):
        with pytest.raises(WebParameterError):
            build_web(g, *params)

    def test_simplex_grid_interior(self):
        points = list(simplex_grid(_web(3, [(0, 1)]), 6))
        assert len(points) == 6
        for p in points:
            assert p.alpha > 0 and p.beta > 0 and p.gamma > 0
            assert p.alpha**2 + p.beta**2 + p.gamma**2 == pytest.approx(1.0)
        assert len(list(simplex_grid(_web(3, []), 6))) == 4

    def test_defaults_realize_single_entangled_triangle(self):
        realization = realize_web(_web(3, [(0, 1)]))
        assert realization.verified
        assert realization.attempts == 1
        assert not realization.swept
        assert extract_graph(realization.state).graph == _web(3, [(0, 1)])

    @pytest.mark.parametrize(
        "entangled",
        [[], [(0, 1), (2, 3)], [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]],
    )
    def test_four_qubit_webs_realized(self, entangled):
        realization = realize_web(_web(4, entangled))
        assert realization.verified
        assert realization.parameters is not None

    def test_single_entangled_edge_on_four_qubits_not_realized(self):
        realization = realize_web(_web(4, [(0, 1)]), grid=11)
        assert not realization.verified
        assert realization.swept
        assert realization.state is None
        assert realization.attempts == 1 + 36

    def test_two_entangled_edges_on_triangle_not_realized(self):
        realization = realize_web(_web(3, [(0, 1), (1, 2)]), grid=7)
        assert not realization.verified


class TestCatalog:
    def test_letters(self):
        assert CATALOG_LETTERS == ("a", "b", "g", "h", "i", "j")

    def test_states_normalized(self):
        for letter in CATALOG_LETTERS:
            assert three_qubit_catalog(letter).norm == pytest.approx(1.0)

    @pytest.mark.parametrize("letter", INFEASIBLE_LETTERS)
    def test_no_pure_representative(self, letter):
        with pytest.raises(CatalogError) as exc_info:
            three_qubit_catalog(letter)
        assert exc_info.value.reason == "no pure representative"

    def test_unknown_letter(self):
        with pytest.raises(CatalogError):
            three_qubit_catalog("z")

    def test_distinct_classes(self):
        graphs = list(catalog_graphs().values())
        for a, b in itertools.combinations(graphs, 2):
            assert find_isomorphism(a, b) is None

    def test_known_graphs(self, triangle_entangled, triangle_classical):
        graphs = catalog_graphs()
        assert graphs["a"] == EntangledGraph(n=3)
        assert graphs["b"] == EntangledGraph(n=3, entangled=[(1, 2)])
        assert graphs["g"] == triangle_entangled
        assert graphs["j"] == triangle_classical
        assert graphs["h"] == EntangledGraph(n=3, entangled=[(0, 1), (1, 2)], classical=[(0, 2)])
        i = graphs["i"]
        assert (len(i.entangled), len(i.classical)) == (1, 2)

    def test_witness_is_relabelled(self):
        target = EntangledGraph(n=3, entangled=[(0, 2)])
        letter, state = catalog_witness(target)
        assert letter == "b"
        assert extract_graph(state).graph == target

    def test_no_witness_for_open_edge(self, path_open_edge):
        assert catalog_witness(path_open_edge) is None
        assert catalog_witness(EntangledGraph(n=4)) is None
