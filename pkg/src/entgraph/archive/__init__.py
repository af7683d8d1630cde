"""Archive package: hash-chained witness ledger."""

from entgraph.archive.ledger import WitnessLedger

__all__ = ["WitnessLedger"]
