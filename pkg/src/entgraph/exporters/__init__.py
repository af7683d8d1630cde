"""Exporters package: JSON codecs, DOT rendering and census CSV tables."""

from entgraph.exporters.csv_exporter import export_census_csv
from entgraph.exporters.dot_exporter import export_graph_dot, render_dot
from entgraph.exporters.json_exporter import (
    feasibility_to_dict,
    graph_from_dict,
    graph_to_dict,
    load_graph,
    load_state,
    read_json,
    save_graph,
    save_state,
    save_verdict_report,
    state_from_dict,
    state_to_dict,
    verdicts_to_list,
    write_json,
)

__all__ = [
    "export_census_csv",
    "export_graph_dot",
    "feasibility_to_dict",
    "graph_from_dict",
    "graph_to_dict",
    "load_graph",
    "load_state",
    "read_json",
    "render_dot",
    "save_graph",
    "save_state",
    "save_verdict_report",
    "state_from_dict",
    "state_to_dict",
    "verdicts_to_list",
    "write_json",
]
