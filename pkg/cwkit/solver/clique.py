"""
clique.py
====================================
Exact decision procedure for clique-width by dynamic programming over vertex subsets.

For a subset S the states are the label partitions Q of S that some expression for G[S] can
end with while every edge of G[S] is already present. As in the linear search, each class of Q
lies inside one class of equal neighbourhood outside S and dead vertices share one class.

S = S1 + S2 is built from states Q1, Q2 by a disjoint union in which some classes of the two
sides are identified (they get the same label), followed by every admissible join between the
resulting classes and a merge of classes with equal outside neighbourhoods. Identified classes
must be non-adjacent with equal neighbourhoods outside S; at most w labels may be alive after
the union, and the joins must produce every edge between S1 and S2.
"""

import itertools
import logging

from ..exceptions import InvalidParameterError
from ..expr import AddEdges, Make, Relabel, Union, check_certificate, map_labels
from ..utils import Budget, iter_bits, lowest_bit
from .linear import _set_partitions, lcwd_decide
from .result import Decision, SearchStats

__all__ = ["cwd_decide", "LINEAR_SHARE", "LINEAR_NODE_LIMIT"]

logger = logging.getLogger(__name__)

# share of the budget spent on the linear search before the subset dynamic programming
LINEAR_SHARE = 0.1
# node cap of that linear search, also when the caller gives no budget
LINEAR_NODE_LIMIT = 20_000


def _future_groups(graph, subset, blocks):
    outside = graph.full_mask & ~subset
    groups = {}
    for block in blocks:
        future = graph.adjacency[lowest_bit(block)] & outside
        groups.setdefault(future, []).append(block)
    return groups


def _class_count(graph, subset):
    outside = graph.full_mask & ~subset
    return len({graph.adjacency[u] & outside for u in iter_bits(subset)})


def _coarsenings(graph, subset, blocks, w):
    groups = _future_groups(graph, subset, blocks)
    dead = groups.pop(0, [])
    base = [sum(dead)] if dead else []
    options = [list(_set_partitions(group)) for group in groups.values()]
    found = set()
    for choice in itertools.product(*options):
        state = tuple(sorted(base + [block for part in choice for block in part]))
        if len(state) <= w:
            found.add(state)
    return sorted(found, key=lambda state: (len(state), state))


def _identifications(graph, subset, left, right, w):
    # partial matchings between classes of `left` and `right` leaving at most w classes
    outside = graph.full_mask & ~subset
    allowed = [
        [
            j
            for j, b in enumerate(right)
            if all(graph.adjacency[u] & b == 0 for u in iter_bits(a))
            and graph.adjacency[lowest_bit(a)] & outside
            == graph.adjacency[lowest_bit(b)] & outside
        ]
        for a in left
    ]
    needed = len(left) + len(right) - w

    def extend(i, used, pairs):
        if len(pairs) + len(left) - i < needed:
            return
        if i == len(left):
            yield list(pairs)
            return
        yield from extend(i + 1, used, pairs)
        for j in allowed[i]:
            if not used >> j & 1:
                pairs.append((i, j))
                yield from extend(i + 1, used | 1 << j, pairs)
                pairs.pop()

    yield from extend(0, 0, [])


def _combined(left, right, pairs):
    partner = dict(pairs)
    matched = {j for _, j in pairs}
    classes = [
        a | right[partner[i]] if i in partner else a for i, a in enumerate(left)
    ] + [b for j, b in enumerate(right) if j not in matched]
    return classes


def _joins(graph, classes, first, second):
    # class pairs fully adjacent with at least one edge across the union
    pairs = []
    for i, j in itertools.combinations(range(len(classes)), 2):
        x, y = classes[i], classes[j]
        if any(y & ~graph.adjacency[u] for u in iter_bits(x)):
            continue
        if (x & first and y & second) or (x & second and y & first):
            pairs.append((i, j))
    return pairs


def _covers(graph, classes, joins, first, second):
    reach = [0] * len(classes)
    for i, j in joins:
        reach[i] |= classes[j]
        reach[j] |= classes[i]
    for i, block in enumerate(classes):
        for u in iter_bits(block & first):
            if graph.adjacency[u] & second & ~reach[i]:
                return False
    return True


def cwd_decide(graph, w, budget=None):
    """Decide whether the clique-width of `graph` is at most `w`.

    A linear certificate is tried first with a small share of the budget, and never more than
    LINEAR_NODE_LIMIT nodes; the subset dynamic programming then decides the question exactly.

    :param graph: the graph, at least one vertex
    :type graph: Graph
    :param w: width bound, w >= 1
    :type w: int
    :param budget: seconds, a Budget, or None for no limit
    :type budget: Union[float, Budget], optional
    :raises InvalidParameterError: on an empty graph or w < 1
    :rtype: Decision
    """
    if graph.n == 0:
        raise InvalidParameterError("the empty graph has no expression")
    if w < 1:
        raise InvalidParameterError(f"width bound must be at least 1, got {w}")
    budget = Budget.of(budget)
    start = budget.expanded

    quick_budget = budget.split(LINEAR_SHARE)
    if quick_budget.nodes is None or quick_budget.nodes > LINEAR_NODE_LIMIT:
        quick_budget.nodes = LINEAR_NODE_LIMIT
    quick = lcwd_decide(graph, w, quick_budget)
    if quick.answer == "yes":
        return quick

    full = graph.full_mask
    states = {}  # subset -> {partition: back-pointer}
    for v in range(graph.n):
        states[1 << v] = {(1 << v,): None}

    try:
        for size in range(2, graph.n + 1):
            for members in itertools.combinations(range(graph.n), size):
                if not budget.tick():
                    raise _OutOfBudget
                subset = sum(1 << v for v in members)
                if _class_count(graph, subset) > w:
                    continue
                found = _build_subset(graph, subset, states, w, budget)
                if found:
                    states[subset] = found
    except _OutOfBudget:
        logger.debug(f"cwd <= {w} on {graph}: budget exhausted")
        return Decision("unknown", w, stats=_stats(budget, start, False))

    stats = _stats(budget, start, True).add(quick.stats)
    stats.exhausted = True
    if full not in states:
        logger.info(f"cwd({graph}) > {w}")
        return Decision("no", w, stats=stats)

    partition = next(iter(states[full]))
    expr, _ = _express(graph, states, full, partition, w)
    check = check_certificate(expr, graph, w, linear=False)
    if not check:
        logger.error(f"clique-width certificate for {graph} rejected: {check.reason}")
        stats.exhausted = False
        return Decision("unknown", w, stats=stats)
    logger.info(f"cwd({graph}) <= {w}")
    return Decision("yes", w, expr, stats)


def _build_subset(graph, subset, states, w, budget):
    found = {}
    low = subset & -subset
    rest = subset & ~low
    # first part holds the lowest vertex; the second part is every non-empty proper remainder
    second = rest
    while second:
        first = subset & ~second
        if first in states and second in states:
            for left in states[first]:
                for right in states[second]:
                    if not budget.tick():
                        raise _OutOfBudget
                    for pairs in _identifications(graph, subset, left, right, w):
                        classes = _combined(left, right, pairs)
                        joins = _joins(graph, classes, first, second)
                        if not _covers(graph, classes, joins, first, second):
                            continue
                        for state in _coarsenings(graph, subset, classes, w):
                            if state not in found:
                                found[state] = (
                                    first, left, second, right, tuple(pairs)
                                )
        second = (second - 1) & rest
    return found


def _express(graph, states, subset, partition, w):
    """Expression for `subset` ending in `partition`, with the label of every class."""
    pointer = states[subset][partition]
    if pointer is None:
        v = lowest_bit(subset)
        return Make(1, graph.label(v + 1)), {subset: 1}

    first, left, second, right, pairs = pointer
    left_expr, left_labels = _express(graph, states, first, left, w)
    right_expr, right_labels = _express(graph, states, second, right, w)

    partner = {j: i for i, j in pairs}
    taken = set(left_labels.values())
    free = iter(label for label in range(1, w + 1) if label not in taken)
    sigma = {}
    for j, block in enumerate(right):
        if j in partner:
            sigma[right_labels[block]] = left_labels[left[partner[j]]]
        else:
            sigma[right_labels[block]] = next(free)
    spare = iter(label for label in range(1, w + 1) if label not in sigma.values())
    for label in range(1, w + 1):
        if label not in sigma:
            sigma[label] = next(spare)
    expr = Union(left_expr, map_labels(right_expr, sigma))

    classes = _combined(left, right, pairs)
    label_of = {}
    for i, block in enumerate(left):
        label_of[classes[i]] = left_labels[block]
    for j, block in enumerate(right):
        if j not in partner:
            label_of[block] = sigma[right_labels[block]]

    for i, j in _joins(graph, classes, first, second):
        expr = AddEdges(label_of[classes[i]], label_of[classes[j]], expr)

    labels = {}
    for block in partition:
        present = sorted(lab for part, lab in label_of.items() if part & block)
        for extra in present[1:]:
            expr = Relabel(extra, present[0], expr)
        labels[block] = present[0]
    return expr, labels


def _stats(budget, start, exhausted):
    return SearchStats(budget.expanded - start, budget.elapsed(), exhausted)


class _OutOfBudget(Exception):
    pass
