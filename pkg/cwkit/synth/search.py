"""
search.py
====================================
Search over vertex orderings for an eager linear expression within a width bound.

The state after a prefix of an ordering is the set of placed vertices: the eager strategy's
label classes are the future classes of that set, so prefixes reaching the same set are
interchangeable and failed sets are memoized.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from ..constants import BEAM_WIDTH, DFS_BUDGET_SHARE, EXHAUSTIVE_ORDERING_LIMIT
from ..exceptions import InvalidParameterError
from ..expr import CertificateCheck, check_certificate
from ..utils import Budget, iter_bits
from .eager import class_count, eager_expression, future_classes, joinable_class

__all__ = ["CertificateSearch", "search_certificate", "feasible_steps"]

logger = logging.getLogger(__name__)


@dataclass
class CertificateSearch:
    """Outcome of :func:`search_certificate`.

    When `expression` is None, ``exhausted=True`` means no ordering gives an eager expression
    of the requested width. That is a statement about the eager strategy only, never a lower
    bound on the linear clique-width.
    """

    expression: Optional[object]
    ordering: Optional[List[int]]
    exhausted: bool
    check: Optional[CertificateCheck] = None
    nodes: int = 0
    seconds: float = 0.0
    method: str = "dfs"
    notes: List[str] = field(default_factory=list)

    @property
    def found(self):
        return self.expression is not None


def feasible_steps(graph, placed, w):
    """Vertices (as bit positions) that can be inserted next without exceeding `w` labels.

    :return: bit positions, most promising first: fewest classes afterwards, then lowest id
    :rtype: List[int]
    """
    classes = future_classes(graph, placed)
    alive = len(classes)
    steps = []
    for x in iter_bits(graph.full_mask & ~placed):
        cost = alive if joinable_class(graph, placed, x, classes) else alive + 1
        if cost <= w:
            steps.append((class_count(graph, placed | 1 << x), x))
    steps.sort()
    return [x for _, x in steps]


def _dfs(graph, w, budget):
    full = graph.full_mask
    failed = set()
    path = []

    def descend(placed):
        if placed == full:
            return True
        if placed in failed:
            return False
        for x in feasible_steps(graph, placed, w):
            if not budget.tick():
                raise _OutOfBudget
            path.append(x)
            if descend(placed | 1 << x):
                return True
            path.pop()
        failed.add(placed)
        return False

    try:
        if descend(0):
            return [x + 1 for x in path], True
        return None, True
    except _OutOfBudget:
        return None, False


def _beam(graph, w, budget, width):
    frontier = [0]
    parent = {0: None}
    truncated = False
    for _ in range(graph.n):
        children = {}
        for placed in frontier:
            for x in feasible_steps(graph, placed, w):
                if not budget.tick():
                    return None, False
                child = placed | 1 << x
                if child not in children and child not in parent:
                    children[child] = (placed, x)
        if not children:
            return None, not truncated
        ranked = sorted(
            children,
            key=lambda placed: (class_count(graph, placed), sorted(iter_bits(placed))),
        )
        if len(ranked) > width:
            truncated = True
            ranked = ranked[:width]
        for child in ranked:
            parent[child] = children[child]
        frontier = ranked

    ordering = []
    state = graph.full_mask
    while parent[state] is not None:
        state, x = parent[state]
        ordering.append(x + 1)
    return ordering[::-1], True


def search_certificate(graph, w, budget=None):
    """Find a checked linear expression of width at most `w` built by the eager strategy.

    Orderings are searched depth first with memoization of failed placed-sets; for more than
    EXHAUSTIVE_ORDERING_LIMIT vertices the depth-first search gets DFS_BUDGET_SHARE of the
    budget and a beam search over placed-sets uses the rest.

    :param graph: the graph
    :type graph: Graph
    :param w: width bound, w >= 1
    :type w: int
    :param budget: seconds, a Budget, or None for no limit
    :type budget: Union[float, Budget], optional
    :raises InvalidParameterError: if w < 1
    :rtype: CertificateSearch
    """
    if w < 1:
        raise InvalidParameterError(f"width bound must be at least 1, got {w}")
    budget = Budget.of(budget)
    if graph.n == 0:
        return CertificateSearch(
            None, [], True, notes=["empty graph has no expression"]
        )

    method = "dfs"
    nodes = 0
    if graph.n <= EXHAUSTIVE_ORDERING_LIMIT:
        ordering, exhausted = _dfs(graph, w, budget)
    else:
        first = budget.split(DFS_BUDGET_SHARE)
        ordering, exhausted = _dfs(graph, w, first)
        nodes = first.expanded
        if ordering is None and not exhausted:
            method = "beam"
            logger.debug(
                f"ordering search on {graph} falls back to a beam of {BEAM_WIDTH}"
            )
            ordering, exhausted = _beam(graph, w, budget, BEAM_WIDTH)

    outcome = CertificateSearch(
        None,
        None,
        exhausted,
        nodes=nodes + budget.expanded,
        seconds=budget.elapsed(),
        method=method,
    )
    if ordering is None:
        return outcome

    expression = eager_expression(graph, ordering)
    check = check_certificate(expression, graph, w, linear=True)
    outcome.check = check
    if not check:
        logger.error(f"eager certificate for {graph} rejected: {check.reason}")
        outcome.exhausted = False
        outcome.notes.append(f"rejected certificate: {check.reason}")
        return outcome
    outcome.expression = expression
    outcome.ordering = ordering
    return outcome


class _OutOfBudget(Exception):
    pass
