"""Numerical validity checks for density operators and pure states."""

import numpy as np

from entgraph.core.exceptions import InvalidStateError
from entgraph.models.state import DensityOperator, PureState
from entgraph.models.verdict import Tolerances


def validate_density(rho: DensityOperator, tol: Tolerances | None = None) -> list[str]:
    """Problems with Hermiticity, trace and positivity; empty if valid."""
    tol = tol or Tolerances()
    problems: list[str] = []
    matrix = rho.matrix
    deviation = float(np.max(np.abs(matrix - matrix.conj().T)))
    if deviation > tol.herm:
        problems.append(f"not Hermitian: max |rho - rho^dagger| = {deviation:.3e}")
    trace = complex(np.trace(matrix))
    if abs(trace - 1.0) > tol.tr:
        problems.append(f"trace {trace.real:.12g} differs from 1")
    smallest = float(np.linalg.eigvalsh(0.5 * (matrix + matrix.conj().T))[0])
    if smallest < -tol.psd:
        problems.append(f"not positive semidefinite: minimum eigenvalue {smallest:.3e}")
    return problems


def require_density(rho: DensityOperator, tol: Tolerances | None = None) -> DensityOperator:
    problems = validate_density(rho, tol)
    if problems:
        raise InvalidStateError(problems)
    return rho


def validate_pure(state: PureState, tol: Tolerances | None = None) -> list[str]:
    tol = tol or Tolerances()
    deviation = abs(state.norm**2 - 1.0)
    if deviation > tol.norm:
        return [f"squared norm {state.norm**2:.12g} differs from 1"]
    return []


def require_pure(state: PureState, tol: Tolerances | None = None) -> PureState:
    problems = validate_pure(state, tol)
    if problems:
        raise InvalidStateError(problems)
    return state
