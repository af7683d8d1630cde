"""JSON codecs for graphs, states, verdict reports and feasibility verdicts.

Field order is fixed so that files written from equal values are
byte-identical:

* graph: ``{"n", "entangled", "classical"}``
* pure state: ``{"n", "amplitudes": [[re, im], ...]}``
* dense operator: ``{"n", "rows": [[[re, im], ...], ...]}``
* excitation-block state: ``{"n", "vacuum", "single_block", "doubles": [[i, j, w], ...]}``
* verdict report: ``[{"i", "j", "class", "concurrence", "negativity", "fac_distance",
  "marginal"}, ...]``
"""

import json
import logging
import os
from typing import Any

import numpy as np
from pydantic import ValidationError

from entgraph.core.exceptions import ExportError
from entgraph.models.feasibility import Verdict
from entgraph.models.graph import EntangledGraph
from entgraph.models.state import DensityOperator, ExcitationBlockState, PureState
from entgraph.models.verdict import VerdictReport

logger = logging.getLogger(__name__)

AnyState = PureState | DensityOperator | ExcitationBlockState

_DECODE_ERRORS = (KeyError, TypeError, ValueError, IndexError, ValidationError)


def _complex_pairs(values: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in values]


def _from_pairs(values: Any) -> np.ndarray:
    array = np.asarray(values, dtype=float)
    if array.shape[-1] != 2:
        raise ValueError("complex entries must be [re, im] pairs")
    return array[..., 0] + 1j * array[..., 1]


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------


def graph_to_dict(g: EntangledGraph) -> dict[str, Any]:
    return {
        "n": g.n,
        "entangled": [list(pair) for pair in g.entangled],
        "classical": [list(pair) for pair in g.classical],
    }


def graph_from_dict(data: dict[str, Any]) -> EntangledGraph:
    try:
        return EntangledGraph(
            n=data["n"],
            entangled=data.get("entangled", []),
            classical=data.get("classical", []),
        )
    except _DECODE_ERRORS as exc:
        raise ExportError(f"Malformed graph JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# States
# ---------------------------------------------------------------------------


def state_to_dict(state: AnyState) -> dict[str, Any]:
    if isinstance(state, PureState):
        ordered = state.reorder(sorted(state.qubits))
        return {"n": ordered.k, "amplitudes": _complex_pairs(ordered.amplitudes)}
    if isinstance(state, DensityOperator):
        return {"n": state.k, "rows": [_complex_pairs(row) for row in state.matrix]}
    return {
        "n": state.n,
        "vacuum": float(state.vacuum),
        "single_block": [[float(x) for x in row] for row in state.single_block],
        "doubles": [[i, j, float(w)] for (i, j), w in sorted(state.doubles.items())],
    }


def state_from_dict(data: dict[str, Any]) -> AnyState:
    """Decode any state format, recognized by its payload key."""
    try:
        n = int(data["n"])
        if "amplitudes" in data:
            return PureState(qubits=tuple(range(n)), amplitudes=_from_pairs(data["amplitudes"]))
        if "rows" in data:
            return DensityOperator(qubits=tuple(range(n)), matrix=_from_pairs(data["rows"]))
        if "single_block" in data:
            return ExcitationBlockState(
                n=n,
                vacuum=data["vacuum"],
                single_block=data["single_block"],
                doubles=data.get("doubles", []),
            )
    except _DECODE_ERRORS as exc:
        raise ExportError(f"Malformed state JSON: {exc}") from exc
    raise ExportError("State JSON needs one of 'amplitudes', 'rows' or 'single_block'")


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


def verdicts_to_list(report: VerdictReport) -> list[dict[str, Any]]:
    return [
        {
            "i": v.i,
            "j": v.j,
            "class": v.pair_class.value,
            "concurrence": v.concurrence,
            "negativity": v.negativity,
            "fac_distance": v.fac_distance,
            "marginal": v.marginal,
        }
        for v in report.verdicts
    ]


def feasibility_to_dict(verdict: Verdict, witness_path: str = "") -> dict[str, Any]:
    return {
        "graph": graph_to_dict(verdict.graph),
        "status": verdict.status.value,
        "reason": verdict.reason,
        "rules": verdict.rules,
        "witness": witness_path,
        "components": [
            {
                "vertices": list(c.vertices),
                "status": c.status.value,
                "rule": c.rule.value,
                "reason": c.reason,
                "web_parameters": c.web_parameters.model_dump() if c.web_parameters else None,
                "search": (
                    {
                        "found": c.search.found,
                        "best_objective": c.search.best_objective,
                        "evals": c.search.evals,
                        "seed": c.search.seed,
                    }
                    if c.search
                    else None
                ),
                "notes": c.notes,
            }
            for c in verdict.component_verdicts
        ],
    }


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------


def write_json(data: Any, path: str) -> str:
    """Write ``data`` as indented JSON; parent directories are created."""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, ensure_ascii=False)
        fh.write("\n")
    logger.debug("Wrote %s", path)
    return path


def read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ExportError(f"Cannot read {path}: {exc}") from exc


def load_graph(path: str) -> EntangledGraph:
    data = read_json(path)
    if not isinstance(data, dict):
        raise ExportError(f"{path}: graph JSON must be an object")
    return graph_from_dict(data)


def save_graph(g: EntangledGraph, path: str) -> str:
    return write_json(graph_to_dict(g), path)


def load_state(path: str) -> AnyState:
    data = read_json(path)
    if not isinstance(data, dict):
        raise ExportError(f"{path}: state JSON must be an object")
    return state_from_dict(data)


def save_state(state: AnyState, path: str) -> str:
    return write_json(state_to_dict(state), path)


def save_verdict_report(report: VerdictReport, path: str) -> str:
    return write_json(verdicts_to_list(report), path)
