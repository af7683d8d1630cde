"""Custom exceptions for entgraph."""


class EntGraphError(Exception):
    """Base exception for all entgraph errors."""


class GraphError(EntGraphError):
    """Error in an entangled graph."""


class InvalidGraphError(GraphError):
    """Graph violates one or more structural invariants."""

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("Invalid graph: " + "; ".join(violations))


class CapExceededError(EntGraphError):
    """A size limit configured for an exhaustive operation was exceeded."""

    def __init__(self, what: str, value: int, cap: int):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what}: n={value} exceeds the configured cap {cap}")


class StateError(EntGraphError):
    """Error in a quantum state or operator."""


class InvalidStateError(StateError):
    """State fails a numerical validity check (trace, Hermiticity, positivity, norm)."""

    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("Invalid state: " + "; ".join(problems))


class DimensionError(StateError):
    """Operand shapes or qubit counts do not match."""


class QubitLabelError(StateError):
    """Unknown, duplicated or overlapping qubit labels."""


class SynthesisError(EntGraphError):
    """Error while constructing a state for a graph."""


class WebParameterError(SynthesisError):
    """Entangled-web parameters are invalid for the requested graph."""


class CatalogError(SynthesisError):
    """Requested three-qubit catalog entry does not exist."""

    def __init__(self, label: str, reason: str):
        self.label = label
        self.reason = reason
        super().__init__(f"Catalog entry {label!r}: {reason}")


class FeasibilityError(EntGraphError):
    """Error during feasibility assessment."""


class SearchError(EntGraphError):
    """Error during pure-state search."""


class SearchConfigError(SearchError):
    """Search configuration is invalid."""


class ExportError(EntGraphError):
    """Error while reading or writing a file format."""
