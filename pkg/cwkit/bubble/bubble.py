"""
bubble.py
====================================
Bubble models: proper interval graphs drawn as a grid of vertex sets.

A model is a sequence of columns, each column a sequence of bubbles (rows 1, 2, ... from top to
bottom). Vertices in the same column are pairwise adjacent. A vertex at row r of a column and a
vertex at row r' of the next column are adjacent iff r' <= r. There are no other edges.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Tuple

from ..exceptions import InvalidParameterError
from ..graph import Graph

__all__ = [
    "BubbleModel",
    "bubble_to_graph",
    "path_power_bubbles",
    "family_bubbles",
    "render_bubbles",
]


@dataclass(frozen=True)
class BubbleModel:
    """Columns of bubbles over the vertex ids 1..n.

    :param columns: per column, the bubbles from top to bottom
    :type columns: Tuple[Tuple[FrozenSet[int], ...], ...]
    :param names: optional vertex names, indexed by ``id - 1``
    :type names: Tuple[Optional[str], ...], optional
    :raises ValueError: if bubbles overlap, a column is empty or the ids are not 1..n
    """

    columns: Tuple[Tuple[FrozenSet[int], ...], ...]
    names: Optional[Tuple[Optional[str], ...]] = field(default=None)

    def __post_init__(self):
        object.__setattr__(
            self,
            "columns",
            tuple(
                tuple(frozenset(bubble) for bubble in column) for column in self.columns
            ),
        )
        seen = set()
        for c, column in enumerate(self.columns, start=1):
            if not any(column):
                raise ValueError(f"column {c} holds no vertex")
            for bubble in column:
                overlap = seen & bubble
                if overlap:
                    raise ValueError(f"bubbles overlap in vertices {sorted(overlap)}")
                seen |= bubble
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError(f"bubbles must partition the ids 1..{len(seen)}")
        if self.names is not None and len(self.names) != len(seen):
            raise ValueError(f"expected {len(seen)} names, got {len(self.names)}")

    @property
    def n(self):
        return sum(len(bubble) for column in self.columns for bubble in column)

    def position(self, v):
        """(column, row) of vertex `v`, both 1-based."""
        for c, column in enumerate(self.columns, start=1):
            for r, bubble in enumerate(column, start=1):
                if v in bubble:
                    return c, r
        raise KeyError(v)


def bubble_to_graph(model):
    """The proper interval graph a bubble model represents.

    :param model: the model
    :type model: BubbleModel
    :rtype: Graph
    """
    edges = []
    for c, column in enumerate(model.columns):
        members = sorted(v for bubble in column for v in bubble)
        edges += [(u, v) for i, u in enumerate(members) for v in members[i + 1 :]]
        if c + 1 == len(model.columns):
            continue
        following = model.columns[c + 1]
        for r, bubble in enumerate(column):
            reachable = [v for later in following[: r + 1] for v in later]
            edges += [(u, v) for u in bubble for v in reachable]
    return Graph.from_edges(model.n, edges, model.names)


def path_power_bubbles(k, n, names=None):
    """The canonical model of the k-path power on n vertices.

    x_i goes to column ceil(i / k), row ((i - 1) mod k) + 1, so each column is a run of k
    consecutive layout positions.

    :param k: k >= 1
    :type k: int
    :param n: number of vertices
    :type n: int
    :param names: vertex names, defaults to x_1..x_n
    :type names: Sequence[Optional[str]], optional
    :raises InvalidParameterError: if k < 1
    :rtype: BubbleModel
    """
    if k < 1:
        raise InvalidParameterError(f"bubble models need k >= 1, got {k}")
    columns = [
        [frozenset([i]) for i in range(start, min(start + k, n + 1))]
        for start in range(1, n + 1, k)
    ]
    if names is None:
        names = [f"x_{i}" for i in range(1, n + 1)]
    return BubbleModel(tuple(tuple(column) for column in columns), tuple(names))


def family_bubbles(graph, k):
    """Canonical model of a family graph that is a k-path power in id order.

    :param graph: J_k, Z_k, F_k, the gem or any path power with its layout as id order
    :type graph: Graph
    :param k: the power
    :type k: int
    :raises ValueError: if `graph` is not the k-path power in id order
    :rtype: BubbleModel
    """
    model = path_power_bubbles(k, graph.n, graph.names)
    if bubble_to_graph(model) != graph:
        raise ValueError(f"{graph} is not a {k}-path power in id order")
    return model


def render_bubbles(model, mark=None):
    """Draw the model as an ASCII grid, one cell per bubble.

    :param model: the model
    :type model: BubbleModel
    :param mark: id or name of a vertex to highlight with brackets
    :type mark: int or str, optional
    :return: the drawing, one line per row plus border lines; empty for an empty model
    :rtype: str
    """
    if not model.columns:
        return ""

    def label(v):
        name = None if model.names is None else model.names[v - 1]
        text = str(v) if name is None else name
        return f"[{text}]" if mark in (v, text) else f" {text} "

    cells = [
        [",".join(label(v) for v in sorted(bubble)) for bubble in column]
        for column in model.columns
    ]
    height = max(len(column) for column in cells)
    width = max(len(cell) for column in cells for cell in column)

    border = "+" + "+".join("-" * width for _ in cells) + "+"
    lines = [border]
    for r in range(height):
        row = [column[r] if r < len(column) else "" for column in cells]
        lines.append("|" + "|".join(cell.ljust(width) for cell in row) + "|")
    lines.append(border)
    return "\n".join(lines) + "\n"
