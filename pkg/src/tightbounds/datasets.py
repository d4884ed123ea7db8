"""Built-in datasets, so every documented run is reproducible with no inputs.

``figure1`` is the nine-graph demonstration dataset (path, triangle, square,
diamond, K4, K4,4, star, double star, and two triangles joined by an edge).
``figure1-bipartite`` is its bipartite-only slice, the standard starting
point for the refine-by-counterexample walkthrough.  ``integers:LO..HI``
builds the number-theory table over that range.
"""

from __future__ import annotations

import re

from .graphs import Graph
from .integers import DEFAULT_INTEGER_RANGE, build_integer_dataset
from .table import KnowledgeTable, TableError, build_graph_table, build_integer_table


def figure1_graphs() -> list[Graph]:
    """The nine demonstration graphs G_1..G_9."""
    complete4 = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    bipartite44 = [(i, 4 + j) for i in range(4) for j in range(4)]
    return [
        Graph.from_edges("G_1", 3, [(0, 1), (1, 2)]),                      # path P3
        Graph.from_edges("G_2", 3, [(0, 1), (1, 2), (0, 2)]),              # cycle C3
        Graph.from_edges("G_3", 4, [(0, 1), (1, 2), (2, 3), (0, 3)]),      # cycle C4
        Graph.from_edges("G_4", 4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),  # diamond
        Graph.from_edges("G_5", 4, complete4),                             # K4
        Graph.from_edges("G_6", 8, bipartite44),                           # K4,4
        Graph.from_edges("G_7", 4, [(0, 1), (0, 2), (0, 3)]),              # star K1,3
        Graph.from_edges("G_8", 6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]),  # S(2,2)
        Graph.from_edges(
            "G_9", 6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
        ),  # two triangles joined by an edge
    ]


def figure1_table() -> KnowledgeTable:
    return build_graph_table(figure1_graphs())


def figure1_bipartite_table() -> KnowledgeTable:
    """The bipartite-only slice of the figure1 dataset (G_1, G_3, G_6..G_8)."""
    graphs = [g for g in figure1_graphs() if g.id in {"G_1", "G_3", "G_6", "G_7", "G_8"}]
    return build_graph_table(graphs)


_INTEGER_RANGE = re.compile(r"^integers:(\d+)\.\.(\d+)$")


def resolve_builtin(name: str) -> KnowledgeTable | None:
    """Map a builtin dataset name to its table, or None if unrecognized."""
    if name == "figure1":
        return figure1_table()
    if name == "figure1-bipartite":
        return figure1_bipartite_table()
    if name == "integers":
        lo, hi = DEFAULT_INTEGER_RANGE
        return build_integer_table(build_integer_dataset(lo, hi))
    match = _INTEGER_RANGE.match(name)
    if match:
        lo, hi = int(match.group(1)), int(match.group(2))
        try:
            return build_integer_table(build_integer_dataset(lo, hi))
        except ValueError as exc:
            raise TableError(str(exc)) from exc
    return None
