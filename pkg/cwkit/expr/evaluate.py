"""
evaluate.py
====================================
The value of a clique-width expression: a graph with one label per vertex.
"""

from dataclasses import dataclass
from typing import Dict

from ..exceptions import InvalidExpressionError
from ..graph import Graph
from ..utils import iter_bits
from .ast import AddEdges, Make, Union, post_traversal

__all__ = ["LabeledGraph", "evaluate"]


@dataclass(frozen=True)
class LabeledGraph:
    """A graph together with the label of each of its vertices.

    :param graph: the graph; vertex ids follow the left-to-right order of the Make leaves
    :type graph: Graph
    :param labels: vertex id -> label
    :type labels: Dict[int, int]
    """

    graph: Graph
    labels: Dict[int, int]

    def label_of(self, name):
        return self.labels[self.graph.id_of(name)]

    def classes(self):
        """label -> sorted ids of the vertices carrying it."""
        found = {}
        for v, label in sorted(self.labels.items()):
            found.setdefault(label, []).append(v)
        return found


class _Partial:
    # vertices by position; adjacency rows are bitsets over positions
    __slots__ = ("names", "adjacency", "labels")

    def __init__(self, names, adjacency, labels):
        self.names = names
        self.adjacency = adjacency
        self.labels = labels

    def members(self, label):
        mask = 0
        for position, own in enumerate(self.labels):
            if own == label:
                mask |= 1 << position
        return mask


def evaluate(expr):
    """Evaluate `expr` bottom-up.

    :param expr: the expression
    :type expr: CwExpr
    :raises InvalidExpressionError: if two Make leaves use the same vertex name
    :rtype: LabeledGraph
    """
    values = []
    for node in post_traversal(expr):
        if isinstance(node, Make):
            values.append(_Partial([node.name], [0], [node.label]))
        elif isinstance(node, Union):
            right = values.pop()
            left = values.pop()
            shift = len(left.names)
            left.names += right.names
            left.adjacency += [row << shift for row in right.adjacency]
            left.labels += right.labels
            values.append(left)
        elif isinstance(node, AddEdges):
            value = values[-1]
            first, second = value.members(node.i), value.members(node.j)
            for position in iter_bits(first):
                value.adjacency[position] |= second
            for position in iter_bits(second):
                value.adjacency[position] |= first
        else:
            value = values[-1]
            value.labels = [node.j if own == node.i else own for own in value.labels]

    value = values.pop()
    if len(set(value.names)) != len(value.names):
        seen = set()
        duplicate = next(name for name in value.names if name in seen or seen.add(name))
        raise InvalidExpressionError(f"vertex name {duplicate!r} is created twice")

    graph = Graph(tuple(value.adjacency), tuple(value.names))
    return LabeledGraph(graph, dict(enumerate(value.labels, start=1)))
