"""Quantum state models: dense density operators, pure states, excitation-block states.

Basis convention: qubit order as listed in ``qubits``, ``|0>`` before ``|1>``,
so the first listed qubit is the most significant bit of the basis index.
"""

from functools import cached_property
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from entgraph.models.graph import Pair, normalize_pair


def _frozen_array(value: Any, dtype: type) -> np.ndarray:
    array = np.array(value, dtype=dtype)
    array.setflags(write=False)
    return array


class DensityOperator(BaseModel):
    """A 2^k x 2^k complex matrix over an ordered list of qubit labels.

    Shape is checked at construction; physical validity (Hermitian, unit
    trace, PSD) is checked by :func:`entgraph.linalg.validate_density`.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    qubits: tuple[int, ...]
    matrix: np.ndarray

    @field_validator("matrix", mode="before")
    @classmethod
    def _as_complex(cls, value: Any) -> np.ndarray:
        return _frozen_array(value, complex)

    @model_validator(mode="after")
    def _check_shape(self) -> "DensityOperator":
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"duplicate qubit labels {self.qubits}")
        dim = 2 ** len(self.qubits)
        if self.matrix.shape != (dim, dim):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match {len(self.qubits)} qubits"
            )
        return self

    @property
    def k(self) -> int:
        return len(self.qubits)


class PureState(BaseModel):
    """Normalized amplitude vector of length 2^k over ordered qubit labels."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    qubits: tuple[int, ...]
    amplitudes: np.ndarray

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _as_complex(cls, value: Any) -> np.ndarray:
        return _frozen_array(value, complex).reshape(-1)

    @model_validator(mode="after")
    def _check_shape(self) -> "PureState":
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"duplicate qubit labels {self.qubits}")
        if self.amplitudes.shape != (2 ** len(self.qubits),):
            raise ValueError(
                f"{self.amplitudes.shape[0]} amplitudes do not match {len(self.qubits)} qubits"
            )
        return self

    @classmethod
    def on_range(cls, amplitudes: Any) -> "PureState":
        """Build a state over labels ``0..n-1`` from a length-2^n vector."""
        vector = np.asarray(amplitudes, dtype=complex).reshape(-1)
        n = int(round(np.log2(vector.shape[0])))
        return cls(qubits=tuple(range(n)), amplitudes=vector)

    @property
    def k(self) -> int:
        return len(self.qubits)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def projector(self) -> DensityOperator:
        psi = self.amplitudes
        return DensityOperator(qubits=self.qubits, matrix=np.outer(psi, psi.conj()))

    def relabel(self, mapping: dict[int, int]) -> "PureState":
        """Rename qubits; amplitudes and tensor order are unchanged."""
        return PureState(
            qubits=tuple(mapping.get(q, q) for q in self.qubits), amplitudes=self.amplitudes
        )

    def reorder(self, order: tuple[int, ...] | list[int]) -> "PureState":
        """Same state with its tensor factors listed in ``order`` (a permutation of the labels)."""
        if sorted(order) != sorted(self.qubits):
            raise ValueError(f"order {tuple(order)} is not a permutation of {self.qubits}")
        if tuple(order) == self.qubits:
            return self
        position = {q: axis for axis, q in enumerate(self.qubits)}
        tensor = self.amplitudes.reshape((2,) * self.k)
        tensor = np.transpose(tensor, [position[q] for q in order])
        return PureState(qubits=tuple(order), amplitudes=tensor.reshape(-1))


class ExcitationBlockState(BaseModel):
    """Sparse mixed state supported on basis states with at most two excitations.

    ``vacuum`` weighs ``|0...0><0...0|``; ``single_block[i][j]`` is the
    coefficient of ``|1_i><1_j|``; ``doubles[(i, j)]`` weighs
    ``|1_i 1_j><1_i 1_j|``. Qubit labels are ``0..n-1``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(..., ge=1)
    vacuum: float
    single_block: np.ndarray
    doubles: dict[Pair, float] = Field(default_factory=dict)

    @field_validator("single_block", mode="before")
    @classmethod
    def _as_real(cls, value: Any) -> np.ndarray:
        return _frozen_array(value, float)

    @field_validator("doubles", mode="before")
    @classmethod
    def _normalize_doubles(cls, value: Any) -> dict[Pair, float]:
        items = value.items() if isinstance(value, dict) else ((p[:2], p[2]) for p in value)
        return {normalize_pair(int(i), int(j)): float(w) for (i, j), w in items}

    @model_validator(mode="after")
    def _check_shape(self) -> "ExcitationBlockState":
        if self.single_block.shape != (self.n, self.n):
            raise ValueError(f"single_block must be {self.n}x{self.n}")
        for i, j in self.doubles:
            if i == j or not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"double-excitation pair {(i, j)} out of range")
        return self

    @cached_property
    def double_row_sums(self) -> np.ndarray:
        """Per-qubit total double-excitation weight."""
        sums = np.zeros(self.n)
        for (i, j), weight in self.doubles.items():
            sums[i] += weight
            sums[j] += weight
        return sums

    @cached_property
    def double_total(self) -> float:
        return float(sum(self.doubles.values()))

    @property
    def trace(self) -> float:
        return float(self.vacuum + np.trace(self.single_block) + self.double_total)
