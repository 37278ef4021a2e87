"""
linear.py
====================================
Exact decision procedure for linear clique-width.

A state is the set P of placed vertices with the partition of P into label classes. Only
edges-complete states are searched: every edge inside P is already present, which loses nothing
because an edge between two placed vertices can always be added as soon as both exist. Two
vertices sharing a label must then have the same neighbourhood among the unplaced vertices, so
every class lies inside one future class of P, and all dead vertices (no unplaced neighbour)
share one class.

Inserting a vertex x costs the number of classes, plus one if x takes a fresh label instead of
being created directly into an existing class. After x is joined to every class inside its
neighbourhood, classes of the same future class may be merged by relabelling. Merging never
hurts: the coarser state reaches a complete expression whenever the finer one does, with the
same number of labels. The default search therefore only keeps the coarsest partition, i.e.
the future classes themselves; ``coarsest_only=False`` explores every partition instead.
"""

import itertools
import logging

from ..exceptions import InvalidParameterError
from ..expr import AddEdges, Make, Relabel, Union, check_certificate
from ..utils import Budget, iter_bits, lowest_bit
from .result import Decision, SearchStats

__all__ = ["lcwd_decide", "linear_moves", "build_linear_expression"]

logger = logging.getLogger(__name__)


def _require_vertices(graph, w):
    if graph.n == 0:
        raise InvalidParameterError("the empty graph has no expression")
    if w < 1:
        raise InvalidParameterError(f"width bound must be at least 1, got {w}")


def _can_join(graph, placed, x, block):
    row = graph.adjacency[x]
    if row & block:
        return False
    rest = graph.full_mask & ~placed & ~(1 << x)
    if graph.adjacency[lowest_bit(block)] & rest != row & rest:
        return False
    seen = row & placed
    return all(seen & ~graph.adjacency[u] == 0 for u in iter_bits(block))


def linear_moves(graph, placed, blocks, w, coarsest_only=True):
    """Admissible insertions from a state, most promising first.

    :param graph: the graph
    :type graph: Graph
    :param placed: bitset of placed vertices
    :type placed: int
    :param blocks: label classes of the placed vertices, as bitsets
    :type blocks: Tuple[int, ...]
    :param w: width bound
    :type w: int
    :param coarsest_only: skip fresh labels when the vertex can join a class
    :type coarsest_only: bool
    :return: pairs (bit position of the vertex, bitset of the joined class or 0 for a fresh label)
    :rtype: List[Tuple[int, int]]
    """
    outside = graph.full_mask & ~placed
    moves = []
    for x in iter_bits(outside):
        rest = outside & ~(1 << x)
        after = len({graph.adjacency[u] & rest for u in iter_bits(placed | 1 << x)})
        joins = []
        if len(blocks) <= w:
            joins = [block for block in blocks if _can_join(graph, placed, x, block)]
        for block in joins:
            moves.append((after, 0, x, block))
        if (not joins or not coarsest_only) and len(blocks) + 1 <= w:
            moves.append((after, 1, x, 0))
    moves.sort()
    return [(x, block) for _, _, x, block in moves]


def _set_partitions(blocks):
    if not blocks:
        yield []
        return
    first, rest = blocks[0], blocks[1:]
    for partition in _set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [partition[i] | first] + partition[i + 1 :]
        yield partition + [first]


def _settle(graph, placed, blocks, coarsest_only):
    # dead classes always merge; the others may merge inside their future class
    outside = graph.full_mask & ~placed
    groups = {}
    for block in blocks:
        future = graph.adjacency[lowest_bit(block)] & outside
        groups.setdefault(future, []).append(block)
    dead = groups.pop(0, [])
    base = [sum(dead)] if dead else []
    if coarsest_only:
        return [tuple(sorted(base + [sum(group) for group in groups.values()]))]

    options = [list(_set_partitions(group)) for group in groups.values()]
    settled = {
        tuple(sorted(base + [block for part in choice for block in part]))
        for choice in itertools.product(*options)
    }
    return sorted(settled, key=lambda state: (len(state), state))


def build_linear_expression(graph, steps):
    """Turn a sequence of search steps into a linear expression.

    :param graph: the graph
    :type graph: Graph
    :param steps: triples (bit position of the vertex, joined class or 0, classes afterwards)
    :type steps: Sequence[Tuple[int, int, Tuple[int, ...]]]
    :rtype: CwExpr
    """
    expr = None
    label_of = {}  # class bitset -> label
    for x, target, settled in steps:
        if target:
            label = label_of[target]
        else:
            alive = set(label_of.values())
            label = next(i for i in itertools.count(1) if i not in alive)
        leaf = Make(label, graph.label(x + 1))
        expr = leaf if expr is None else Union(expr, leaf)

        row = graph.adjacency[x]
        inside = [lab for block, lab in label_of.items() if block & ~row == 0]
        for other in sorted(inside):
            expr = AddEdges(label, other, expr)

        current = {block: lab for block, lab in label_of.items() if block != target}
        current[target | 1 << x] = label
        label_of = {}
        for block in settled:
            present = sorted(lab for part, lab in current.items() if part & block)
            for extra in present[1:]:
                expr = Relabel(extra, present[0], expr)
            label_of[block] = present[0]
    return expr


def lcwd_decide(graph, w, budget=None, coarsest_only=True):
    """Decide whether the linear clique-width of `graph` is at most `w`.

    :param graph: the graph, at least one vertex
    :type graph: Graph
    :param w: width bound, w >= 1
    :type w: int
    :param budget: seconds, a Budget, or None for no limit
    :type budget: Union[float, Budget], optional
    :param coarsest_only: keep only the coarsest label partition per placed set
    :type coarsest_only: bool
    :raises InvalidParameterError: on an empty graph or w < 1
    :return: "yes" with a checked linear certificate, "no" after an exhausted search, or
        "unknown" when the budget ran out
    :rtype: Decision
    """
    _require_vertices(graph, w)
    budget = Budget.of(budget)
    start = budget.expanded
    full = graph.full_mask
    failed = set()
    steps = []

    def descend(placed, blocks):
        if placed == full:
            return True
        if (placed, blocks) in failed:
            return False
        for x, target in linear_moves(graph, placed, blocks, w, coarsest_only):
            if not budget.tick():
                raise _OutOfBudget
            after = placed | 1 << x
            grown = [block for block in blocks if block != target] + [target | 1 << x]
            for settled in _settle(graph, after, grown, coarsest_only):
                steps.append((x, target, settled))
                if descend(after, settled):
                    return True
                steps.pop()
        failed.add((placed, blocks))
        return False

    try:
        found = descend(0, ())
    except _OutOfBudget:
        logger.debug(f"lcwd <= {w} on {graph}: budget exhausted")
        return Decision("unknown", w, stats=_stats(budget, start, False))

    stats = _stats(budget, start, True)
    if not found:
        logger.info(f"lcwd({graph}) > {w}")
        return Decision("no", w, stats=stats)

    expr = build_linear_expression(graph, steps)
    check = check_certificate(expr, graph, w, linear=True)
    if not check:
        logger.error(f"linear certificate for {graph} rejected: {check.reason}")
        stats.exhausted = False
        return Decision("unknown", w, stats=stats)
    logger.info(f"lcwd({graph}) <= {w}")
    return Decision("yes", w, expr, stats, ordering=[x + 1 for x, _, _ in steps])


def _stats(budget, start, exhausted):
    return SearchStats(budget.expanded - start, budget.elapsed(), exhausted)


class _OutOfBudget(Exception):
    pass
