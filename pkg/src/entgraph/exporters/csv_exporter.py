"""CSV export of census tables."""

import csv
import logging
import os

from entgraph.models.feasibility import CensusReport

logger = logging.getLogger(__name__)

CENSUS_COLUMNS = ("label", "status", "rules", "connected", "open_edge", "complete_web", "witness")


def export_census_csv(report: CensusReport, path: str) -> str:
    """One row per isomorphism class; ``rules`` joins the per-component rule ids with '+'."""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CENSUS_COLUMNS)
        for row in report.rows:
            writer.writerow(
                [
                    row.label,
                    row.status.value,
                    "+".join(row.rules),
                    int(row.connected),
                    int(row.open_edge),
                    int(row.complete_web),
                    row.witness_path,
                ]
            )
    logger.info(
        "Census for n=%d exported to CSV: %s (%d classes)", report.n, path, len(report.rows)
    )
    return path
