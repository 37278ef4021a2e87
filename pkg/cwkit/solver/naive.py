"""
naive.py
====================================
Brute-force reference procedures for tiny graphs. They enumerate expressions directly, without
any of the normal forms the exact solvers rely on, and serve as oracles for them.

A labelled graph is a pair (labels, edges): ``labels[v]`` is the label of vertex v + 1, 0 while
the vertex does not exist yet, with labels renamed in order of first appearance; ``edges`` is a
bitset over the vertex pairs. Only subgraphs of the target graph are kept, since edges are never
removed.
"""

import itertools
import logging
from collections import deque

from ..constants import GENERAL_CWD_LIMIT, NAIVE_LCWD_LIMIT
from ..exceptions import InvalidParameterError

__all__ = ["naive_lcwd", "naive_lcwd_decide", "general_cwd_decide"]

logger = logging.getLogger(__name__)


def _pair_index(n):
    return {
        (u, v): i for i, (u, v) in enumerate(itertools.combinations(range(n), 2))
    }


def _target_edges(graph, index):
    target = 0
    for u, v in graph.edges():
        target |= 1 << index[u - 1, v - 1]
    return target


def _canonical(labels):
    rename = {}
    for label in labels:
        if label and label not in rename:
            rename[label] = len(rename) + 1
    return tuple(rename.get(label, 0) for label in labels)


def _join(labels, edges, i, j, index):
    for u, v in index:
        if {labels[u], labels[v]} == {i, j}:
            edges |= 1 << index[u, v]
    return edges


def _stuck(labels, edges, target, index):
    # two vertices sharing a label can never receive a missing edge between them
    for (u, v), bit in index.items():
        shared = labels[u] and labels[u] == labels[v]
        if shared and target >> bit & 1 and not edges >> bit & 1:
            return True
    return False


def _check_size(graph, limit, what):
    if graph.n == 0:
        raise InvalidParameterError("the empty graph has no expression")
    if graph.n > limit:
        raise InvalidParameterError(
            f"{what} handles at most {limit} vertices, got {graph.n}"
        )


def naive_lcwd_decide(graph, w):
    """Whether some linear expression with at most `w` labels builds `graph`.

    Breadth-first search over labelled subgraphs: add a vertex with any label, join two labels,
    or move one label onto another.

    :param graph: the graph, at most NAIVE_LCWD_LIMIT vertices
    :type graph: Graph
    :param w: width bound
    :type w: int
    :rtype: bool
    """
    _check_size(graph, NAIVE_LCWD_LIMIT, "naive_lcwd")
    n = graph.n
    index = _pair_index(n)
    target = _target_edges(graph, index)
    start = ((0,) * n, 0)
    seen = {start}
    queue = deque([start])
    while queue:
        labels, edges = queue.popleft()
        if all(labels) and edges == target:
            return True
        used = max(labels)
        successors = []
        for v in range(n):
            if labels[v]:
                continue
            for label in range(1, min(used + 1, w) + 1):
                grown = labels[:v] + (label,) + labels[v + 1 :]
                successors.append((_canonical(grown), edges))
        for i, j in itertools.permutations(range(1, used + 1), 2):
            if i < j:
                joined = _join(labels, edges, i, j, index)
                if joined != edges and joined & ~target == 0:
                    successors.append((labels, joined))
            moved = _canonical(tuple(j if label == i else label for label in labels))
            successors.append((moved, edges))
        for state in successors:
            if state not in seen and not _stuck(*state, target, index):
                seen.add(state)
                queue.append(state)
    return False


def naive_lcwd(graph):
    """Linear clique-width by exhaustive enumeration, trying w = 1, 2, ... in turn.

    :param graph: the graph, 1 to NAIVE_LCWD_LIMIT vertices
    :type graph: Graph
    :raises InvalidParameterError: for larger or empty graphs
    :rtype: int
    """
    _check_size(graph, NAIVE_LCWD_LIMIT, "naive_lcwd")
    w = 1
    while not naive_lcwd_decide(graph, w):
        w += 1
    logger.debug(f"naive lcwd({graph}) = {w}")
    return w


def general_cwd_decide(graph, w):
    """Whether some expression with at most `w` labels builds `graph`, by closure.

    Starting from the single vertices, the set of buildable labelled subgraphs is closed under
    joins, relabellings and disjoint unions, the latter under every injective renaming of the
    second operand's labels into 1..w.

    :param graph: the graph, at most GENERAL_CWD_LIMIT vertices
    :type graph: Graph
    :param w: width bound
    :type w: int
    :rtype: bool
    """
    _check_size(graph, GENERAL_CWD_LIMIT, "general_cwd_decide")
    n = graph.n
    index = _pair_index(n)
    target = _target_edges(graph, index)
    found = set()
    by_vertices = {}
    queue = deque()

    def add(state):
        if state in found or _stuck(*state, target, index):
            return False
        found.add(state)
        present = sum(1 << v for v, label in enumerate(state[0]) if label)
        by_vertices.setdefault(present, []).append(state)
        queue.append(state)
        return all(state[0]) and state[1] == target

    for v in range(n):
        labels = tuple(1 if u == v else 0 for u in range(n))
        if add((labels, 0)):
            return True

    while queue:
        labels, edges = queue.popleft()
        used = max(labels)
        for i, j in itertools.permutations(range(1, used + 1), 2):
            if i < j:
                joined = _join(labels, edges, i, j, index)
                if joined & ~target == 0 and add((labels, joined)):
                    return True
            moved = _canonical(tuple(j if label == i else label for label in labels))
            if add((moved, edges)):
                return True

        present = sum(1 << v for v, label in enumerate(labels) if label)
        for others, group in list(by_vertices.items()):
            if others & present:
                continue
            for other_labels, other_edges in list(group):
                other_used = max(other_labels)
                for sigma in itertools.permutations(range(1, w + 1), other_used):
                    merged = tuple(
                        label or (sigma[other - 1] if other else 0)
                        for label, other in zip(labels, other_labels)
                    )
                    if add((_canonical(merged), edges | other_edges)):
                        return True
    return False
