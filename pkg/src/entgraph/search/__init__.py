"""Numerical search for pure states realizing a target graph."""

from entgraph.search.objective import PenaltyObjective, objective
from entgraph.search.optimizer import PureStateSearch, run_restart, search

__all__ = ["PenaltyObjective", "PureStateSearch", "objective", "run_restart", "search"]
