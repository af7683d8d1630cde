"""Graphviz DOT export: solid edges for entanglement, dashed for classical-only correlation."""

import logging
import os

from jinja2 import BaseLoader, Environment

from entgraph.models.graph import EntangledGraph

logger = logging.getLogger(__name__)

_DOT_TEMPLATE = """\
graph {{ name }} {
  node [shape=circle];
{%- for v in range(graph.n) %}
  {{ v }};
{%- endfor %}
{%- for i, j in graph.entangled %}
  {{ i }} -- {{ j }} [style=solid];
{%- endfor %}
{%- for i, j in graph.classical %}
  {{ i }} -- {{ j }} [style=dashed];
{%- endfor %}
}
"""


def render_dot(g: EntangledGraph, name: str = "entangled_graph") -> str:
    env = Environment(loader=BaseLoader(), autoescape=False, keep_trailing_newline=True)
    return env.from_string(_DOT_TEMPLATE).render(graph=g, name=name)


def export_graph_dot(g: EntangledGraph, path: str, name: str = "entangled_graph") -> str:
    """Write ``g`` as a DOT file and return the path."""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_dot(g, name))
    logger.info("Graph exported to DOT: %s", path)
    return path
