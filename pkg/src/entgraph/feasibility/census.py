"""Feasibility census over all isomorphism classes on n vertices.

The published ambiguous count for four vertices (20) does not state how it was
counted, so the census reports the count under several conventions:

* ``rules_R7_R8``: classes with a component decided by R7 or R8 here;
* ``connected_no_open_edge``: connected classes without an open edge;
* ``connected_no_open_edge_non_web``: the same, complete webs excluded.
"""

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from entgraph.archive import WitnessLedger
from entgraph.core.config import get_settings
from entgraph.core.exceptions import CapExceededError
from entgraph.feasibility.rules import FeasibilityAssessor
from entgraph.graphs import (
    canonical_form,
    enumerate_graphs,
    is_complete_web,
    is_connected,
    open_edges,
)
from entgraph.models.archive_entry import ArchiveAction
from entgraph.models.feasibility import CensusReport, CensusRow, FeasibilityStatus, Verdict
from entgraph.models.graph import EntangledGraph

logger = logging.getLogger(__name__)

PUBLISHED_AMBIGUOUS = {4: 20}

CONVENTIONS = ("rules_R7_R8", "connected_no_open_edge", "connected_no_open_edge_non_web")


def _row(g: EntangledGraph, verdict: Verdict) -> CensusRow:
    return CensusRow(
        label=canonical_form(g),
        graph=g,
        status=verdict.status,
        rules=verdict.rules,
        connected=g.n == 1 or is_connected(g),
        open_edge=bool(open_edges(g, significant_only=True)),
        complete_web=is_complete_web(g),
    )


def _convention_counts(rows: list[CensusRow]) -> dict[str, int]:
    reaching = [r for r in rows if {"R7", "R8"} & set(r.rules)]
    closed = [r for r in rows if r.connected and not r.open_edge]
    return {
        "rules_R7_R8": len(reaching),
        "connected_no_open_edge": len(closed),
        "connected_no_open_edge_non_web": sum(1 for r in closed if not r.complete_web),
    }


def census(
    n: int,
    assessor: FeasibilityAssessor | None = None,
    ledger: WitnessLedger | None = None,
    jobs: int = 1,
) -> CensusReport:
    """Assess one representative of every class and tabulate the outcome.

    Parameters
    ----------
    n : int
        Vertex count, at most ``census_cap``.
    assessor : FeasibilityAssessor, optional
        Configured assessor; the default one does not search.
    ledger : WitnessLedger, optional
        Archive for every witness found.
    jobs : int
        Classes assessed in parallel.

    Returns
    -------
    CensusReport
        One row per class plus status counts and the ambiguous-class counts
        under each convention.
    """
    cap = get_settings().census_cap
    if n > cap or n < 1:
        raise CapExceededError("census", n, cap)
    assessor = assessor or FeasibilityAssessor()
    graphs = list(enumerate_graphs(n, up_to_iso=True))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(assessor.assess, graphs))
    else:
        verdicts = [assessor.assess(g) for g in graphs]

    rows = []
    for g, verdict in zip(graphs, verdicts, strict=True):
        row = _row(g, verdict)
        if ledger is not None and verdict.witness is not None:
            name = "census_" + row.label.replace(":", "_")
            row.witness_path = ledger.archive_state(
                verdict.witness,
                name,
                ArchiveAction.CENSUS,
                row.label,
                parameters={"n": n, "webs": verdict.web_parameters},
                details={"status": verdict.status.value, "rules": verdict.rules},
            )
        rows.append(row)

    status_counts = Counter(r.status.value for r in rows)
    conventions = _convention_counts(rows)
    published = PUBLISHED_AMBIGUOUS.get(n)
    agreeing = [name for name, count in conventions.items() if count == published]

    report = CensusReport(
        n=n,
        raw_count=3 ** (n * (n - 1) // 2),
        class_count=len(rows),
        rows=rows,
        status_counts={s.value: status_counts.get(s.value, 0) for s in FeasibilityStatus},
        conventions=conventions,
        published_ambiguous=published,
        agreeing_conventions=agreeing,
    )
    logger.info(
        "Census n=%d: %d classes, %s, conventions %s",
        n,
        report.class_count,
        dict(status_counts),
        conventions,
    )
    if published is not None and not agreeing:
        logger.warning(
            "No counting convention reproduces the published %d ambiguous classes: %s",
            published,
            conventions,
        )
    return report
