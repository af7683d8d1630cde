"""WitnessLedger: append-only, hash-chained record of archived witnesses and runs."""

import hashlib
import logging
import os
import uuid
from typing import Any

from pydantic import ValidationError

from entgraph.exporters.json_exporter import AnyState, save_state
from entgraph.models.archive_entry import ArchiveAction, ArchiveEntry

logger = logging.getLogger(__name__)

GENESIS_HASH = "0" * 64

LEDGER_FILE = "ledger.jsonl"


def entry_digest(entry: ArchiveEntry) -> str:
    """SHA-256 of the entry's JSON form without its own hash.

    The JSON carries ``previous_hash``, so each digest commits to the whole
    chain before it as well as to the entry's artifacts and parameters.
    """
    payload = entry.model_dump_json(exclude={"entry_hash"})
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class WitnessLedger:
    """Archive directory holding state files and a JSONL ledger describing them.

    Parameters
    ----------
    archive_dir : str
        Directory for witness files and ``ledger.jsonl``; created if missing.
        An existing ledger is continued from its last entry.
    """

    def __init__(self, archive_dir: str) -> None:
        self.archive_dir = archive_dir
        self.ledger_file = os.path.join(archive_dir, LEDGER_FILE)
        os.makedirs(archive_dir, exist_ok=True)
        entries = self.load_from_file()
        self._head = entries[-1].entry_hash if entries else GENESIS_HASH

    def log(
        self,
        action: ArchiveAction,
        subject: str,
        artifacts: list[str] | None = None,
        parameters: dict[str, Any] | None = None,
        details: dict[str, Any] | None = None,
    ) -> ArchiveEntry:
        """Append an entry chained to the current head.

        Parameters
        ----------
        action : ArchiveAction
            Kind of result recorded.
        subject : str
            Canonical graph label or input file the result is about.
        artifacts : list of str, optional
            Files written for this result.
        parameters : dict, optional
            Inputs that reproduce the result (seeds, web amplitudes, budgets).
        details : dict, optional
            Outcome summary.

        Returns
        -------
        ArchiveEntry
            The persisted entry, ``entry_hash`` filled in.
        """
        entry = ArchiveEntry(
            id=str(uuid.uuid4()),
            action=action,
            subject=subject,
            artifacts=artifacts or [],
            parameters=parameters or {},
            details=details or {},
            previous_hash=self._head,
        )
        entry = entry.model_copy(update={"entry_hash": entry_digest(entry)})
        with open(self.ledger_file, "a", encoding="utf-8") as fh:
            fh.write(entry.model_dump_json() + "\n")
        self._head = entry.entry_hash
        logger.debug("Ledger entry %s: action=%s subject=%s", entry.id, action.value, subject)
        return entry

    def archive_state(
        self,
        state: AnyState,
        name: str,
        action: ArchiveAction,
        subject: str,
        parameters: dict[str, Any] | None = None,
        details: dict[str, Any] | None = None,
    ) -> str:
        """Write ``state`` as ``<archive_dir>/<name>.json``, log it and return the path."""
        path = save_state(state, os.path.join(self.archive_dir, f"{name}.json"))
        self.log(action, subject, artifacts=[path], parameters=parameters, details=details)
        logger.info("Archived %s witness for %s: %s", action.value, subject, path)
        return path

    def load_from_file(self) -> list[ArchiveEntry]:
        """All entries in order; malformed lines are skipped with a warning."""
        if not os.path.exists(self.ledger_file):
            return []
        entries: list[ArchiveEntry] = []
        with open(self.ledger_file, encoding="utf-8") as fh:
            for number, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    entries.append(ArchiveEntry.model_validate_json(line))
                except ValidationError as exc:
                    logger.warning("Skipping malformed ledger line %d: %s", number, exc)
        return entries

    @staticmethod
    def verify_chain(entries: list[ArchiveEntry]) -> tuple[bool, list[str]]:
        """Recompute every digest and check each link; returns ``(is_valid, errors)``."""
        errors: list[str] = []
        expected_previous = GENESIS_HASH
        for entry in entries:
            if entry.previous_hash != expected_previous:
                errors.append(f"Entry {entry.id} chain broken")
            if entry.entry_hash != entry_digest(entry):
                errors.append(f"Entry {entry.id} hash mismatch")
            expected_previous = entry.entry_hash
        return not errors, errors

    def verify(self) -> tuple[bool, list[str]]:
        entries = self.load_from_file()
        is_valid, errors = self.verify_chain(entries)
        if is_valid:
            logger.info("Ledger verified: %d entries", len(entries))
        else:
            logger.warning("Ledger verification failed with %d errors", len(errors))
        return is_valid, errors
