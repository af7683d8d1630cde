"""Complex linear-algebra kernels for qubit density operators."""

from entgraph.linalg.measures import (
    concurrence,
    concurrence_batch,
    factorization_distance,
    factorization_distance_batch,
    frobenius_distance,
    hermitian_eigenvalues,
    negativity,
    negativity_batch,
    pair_marginals_batch,
    pure_concurrence,
)
from entgraph.linalg.operators import (
    dense_pair_reductions,
    pair_reductions,
    partial_trace,
    partial_transpose,
    partial_transpose_matrix,
    permute_pure,
    tensor_product,
    tensor_product_pure,
)
from entgraph.linalg.sampling import random_density, random_pure, random_unitary
from entgraph.linalg.validation import (
    require_density,
    require_pure,
    validate_density,
    validate_pure,
)

__all__ = [
    "concurrence",
    "concurrence_batch",
    "dense_pair_reductions",
    "factorization_distance",
    "factorization_distance_batch",
    "frobenius_distance",
    "hermitian_eigenvalues",
    "negativity",
    "negativity_batch",
    "pair_marginals_batch",
    "pair_reductions",
    "partial_trace",
    "partial_transpose",
    "partial_transpose_matrix",
    "permute_pure",
    "pure_concurrence",
    "random_density",
    "random_pure",
    "random_unitary",
    "require_density",
    "require_pure",
    "tensor_product",
    "tensor_product_pure",
    "validate_density",
    "validate_pure",
]
