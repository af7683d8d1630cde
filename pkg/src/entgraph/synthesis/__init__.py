"""State synthesis: universal mixed state, web states, three-qubit catalog, oracles."""

from entgraph.synthesis.catalog import (
    CATALOG_LETTERS,
    INFEASIBLE_LETTERS,
    catalog_graphs,
    catalog_witness,
    three_qubit_catalog,
)
from entgraph.synthesis.mixed import (
    build_mixed,
    expand_dense,
    marginal,
    normalization,
    reduce_pair,
    validate_excitation,
)
from entgraph.synthesis.oracles import (
    classical_pair_oracle,
    entangled_pair_concurrence,
    entangled_pair_oracle,
    marginal_oracle,
    trace_identity_holds,
    uncorrelated_pair_oracle,
)
from entgraph.synthesis.web import build_web, default_parameters, realize_web, simplex_grid

__all__ = [
    "CATALOG_LETTERS",
    "INFEASIBLE_LETTERS",
    "build_mixed",
    "build_web",
    "catalog_graphs",
    "catalog_witness",
    "classical_pair_oracle",
    "default_parameters",
    "entangled_pair_concurrence",
    "entangled_pair_oracle",
    "expand_dense",
    "marginal",
    "marginal_oracle",
    "normalization",
    "realize_web",
    "reduce_pair",
    "simplex_grid",
    "three_qubit_catalog",
    "trace_identity_holds",
    "uncorrelated_pair_oracle",
    "validate_excitation",
]
