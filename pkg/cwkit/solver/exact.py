"""
exact.py
====================================
Exact linear clique-width and clique-width by bisection over the decision procedures.
"""

import logging

from ..expr import check_certificate
from ..synth import eager_expression
from ..utils import Budget
from .clique import cwd_decide
from .linear import _require_vertices, lcwd_decide
from .result import SearchStats, WidthResult

__all__ = ["trivial_lower_bound", "lcwd_exact", "cwd_exact"]

logger = logging.getLogger(__name__)


def trivial_lower_bound(graph):
    """1 for any non-empty graph, 2 as soon as there is an edge."""
    return 2 if graph.num_edges else 1


def _bisect(graph, decide, budget, linear):
    _require_vertices(graph, 1)
    budget = Budget.of(budget)
    lower = trivial_lower_bound(graph)
    certificate = eager_expression(graph, list(graph.vertices()))
    check = check_certificate(certificate, graph, graph.n + 1, linear=True)
    if not check:
        raise RuntimeError(
            f"natural-order certificate for {graph} rejected: {check.reason}"
        )
    upper = check.width

    stats = SearchStats(exhausted=True)
    decisions = []
    while lower < upper:
        middle = (lower + upper) // 2
        decision = decide(graph, middle, budget)
        decisions.append(decision)
        stats = stats.add(decision.stats)
        if decision.answer == "yes":
            upper, certificate = middle, decision.certificate
        elif decision.answer == "no":
            lower = middle + 1
        else:
            logger.info(f"bisection on {graph} stopped at [{lower}, {upper}]")
            break

    kind = "exact" if lower == upper else "upper-bound"
    what = "lcwd" if linear else "cwd"
    logger.info(f"{what}({graph}) in [{lower}, {upper}]")
    return WidthResult(kind, upper, lower, upper, certificate, stats, decisions)


def lcwd_exact(graph, budget=None):
    """Linear clique-width of `graph`, or the tightest verified bracket within the budget.

    The lower end starts from :func:`trivial_lower_bound`, the upper end from the eager
    expression of the natural vertex order; both ends only move on verified answers.

    :param graph: the graph, at least one vertex
    :type graph: Graph
    :param budget: seconds, a Budget, or None for no limit
    :type budget: Union[float, Budget], optional
    :rtype: WidthResult
    """
    return _bisect(graph, lcwd_decide, budget, linear=True)


def cwd_exact(graph, budget=None):
    """Clique-width of `graph`, or the tightest verified bracket within the budget.

    :param graph: the graph, at least one vertex
    :type graph: Graph
    :param budget: seconds, a Budget, or None for no limit
    :type budget: Union[float, Budget], optional
    :rtype: WidthResult
    """
    return _bisect(graph, cwd_decide, budget, linear=False)
