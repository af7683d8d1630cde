"""entgraph - Entangled graphs with classical correlations."""

__version__ = "0.1.0"

from entgraph.analysis import extract_graph
from entgraph.feasibility import FeasibilityAssessor, assess
from entgraph.models.graph import EntangledGraph
from entgraph.search import PureStateSearch
from entgraph.synthesis import build_mixed

__all__ = [
    "EntangledGraph",
    "FeasibilityAssessor",
    "PureStateSearch",
    "__version__",
    "assess",
    "build_mixed",
    "extract_graph",
]
