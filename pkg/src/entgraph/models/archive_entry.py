"""ArchiveEntry model for the hash-chained witness ledger."""

from datetime import datetime, timezone
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field


class ArchiveAction(str, Enum):
    """Kinds of archived results."""

    BUILD_MIXED = "build_mixed"
    CLASSIFY = "classify"
    WEB = "web"
    FEASIBILITY = "feasibility"
    SEARCH = "search"
    CENSUS = "census"


class ArchiveEntry(BaseModel):
    """An immutable, hash-chained ledger entry."""

    id: str = Field(..., description="Unique entry ID")
    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
    action: ArchiveAction
    subject: str = Field(..., description="Canonical graph label or input file")
    artifacts: list[str] = Field(default_factory=list, description="Files written")
    parameters: dict[str, Any] = Field(default_factory=dict, description="Inputs that reproduce it")
    details: dict[str, Any] = Field(default_factory=dict)
    previous_hash: str = Field(default="", description="Hash of previous entry (chain)")
    entry_hash: str = Field(default="", description="SHA-256 of this entry")
