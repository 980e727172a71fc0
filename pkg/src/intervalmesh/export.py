"""DOT and CSV renderings of colorings.

Vertex names follow the ``x_<ring>_<layer>`` convention so drawings and
spreadsheets read the same way; rows and edge lines come out in the
canonical edge order, making both formats byte-stable.
"""

from __future__ import annotations

import csv
import io

from .colorings import EdgeColoring
from .grids import Edge, GridVertex

__all__ = ["vertex_name", "to_dot", "to_csv"]


def vertex_name(v: GridVertex) -> str:
    return f"x_{v.ring}_{v.layer}"


def to_dot(c: EdgeColoring) -> str:
    g = c.graph
    title = g.family.value
    if g.m is not None or g.n is not None:
        title += f" m={g.m} n={g.n}"
    lines = [
        "graph coloring {",
        f'  label="{title} t={c.palette_size}";',
        "  node [shape=circle];",
    ]
    for e in g.edges:
        lines.append(
            f'  {vertex_name(e.u)} -- {vertex_name(e.v)} [label="{c.colors[e]}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(c: EdgeColoring, rule_trace: dict[Edge, str] | None = None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["u", "v", "rule", "color"])
    for e in c.graph.edges:
        rule = rule_trace.get(e, "") if rule_trace else ""
        writer.writerow([vertex_name(e.u), vertex_name(e.v), rule, c.colors[e]])
    return buf.getvalue()
