"""Pair analysis: classify qubit pairs and extract the entangled graph of a state."""

from entgraph.analysis.classifier import classify_batch, classify_pair, extract_graph

__all__ = ["classify_batch", "classify_pair", "extract_graph"]
