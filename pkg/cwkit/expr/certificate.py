"""
certificate.py
====================================
Checking that an expression witnesses a width bound for a graph.
"""

import logging
from dataclasses import dataclass

from ..exceptions import BudgetExceeded
from ..graph import is_isomorphic
from .ast import is_linear, width
from .evaluate import evaluate

__all__ = ["CertificateCheck", "check_certificate", "same_graph_by_names"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CertificateCheck:
    """Outcome of :func:`check_certificate`; truthy iff the certificate is accepted.

    :param ok: whether every condition holds
    :type ok: bool
    :param reason: the first failed condition, or a summary of the accepted certificate
    :type reason: str
    :param width: number of labels of the expression
    :type width: int
    :param linear: whether the expression is linear
    :type linear: bool
    """

    ok: bool
    reason: str
    width: int = 0
    linear: bool = False

    def __bool__(self):
        return self.ok


def same_graph_by_names(built, graph):
    """Whether `built` equals `graph` once vertices are matched by their printable labels.

    :return: None if the label sets differ, otherwise whether the edge sets agree
    :rtype: Optional[bool]
    """
    targets = {graph.label(v): v for v in graph.vertices()}
    if set(built.label(v) for v in built.vertices()) != set(targets):
        return None
    image = {v: targets[built.label(v)] for v in built.vertices()}
    translated = {tuple(sorted((image[u], image[v]))) for u, v in built.edges()}
    return translated == set(graph.edges())


def check_certificate(expr, graph, w, linear=True):
    """Check that `expr` is a (linear, if asked) w-expression for `graph`.

    The evaluated graph is compared by vertex names when its names are exactly the labels of
    `graph` (names, or ids for unnamed vertices), and then must agree edge for edge;
    otherwise it is compared by isomorphism. Never raises.

    :param expr: the candidate certificate
    :type expr: CwExpr
    :param graph: the graph it should build
    :type graph: Graph
    :param w: the width bound
    :type w: int
    :param linear: also require a linear expression, defaults to True
    :type linear: bool, optional
    :rtype: CertificateCheck
    """
    try:
        used = width(expr)
        straight = is_linear(expr)
        if used > w:
            reason = f"uses {used} labels, more than {w}"
            return CertificateCheck(False, reason, used, straight)
        if linear and not straight:
            return CertificateCheck(False, "expression is not linear", used, straight)

        built = evaluate(expr).graph
        if built.n != graph.n:
            return CertificateCheck(
                False, f"builds {built.n} vertices, expected {graph.n}", used, straight
            )
        if built.num_edges != graph.num_edges:
            return CertificateCheck(
                False,
                f"builds {built.num_edges} edges, expected {graph.num_edges}",
                used,
                straight,
            )

        by_names = same_graph_by_names(built, graph)
        if by_names:
            reason = f"{used}-expression, equal by names"
            return CertificateCheck(True, reason, used, straight)
        if by_names is not None:
            reason = "edges differ from the graph on the same vertex names"
            return CertificateCheck(False, reason, used, straight)
        if is_isomorphic(built, graph):
            reason = f"{used}-expression, isomorphic"
            return CertificateCheck(True, reason, used, straight)
        return CertificateCheck(False, "built graph is not isomorphic", used, straight)
    except BudgetExceeded as e:
        return CertificateCheck(False, f"isomorphism test gave up: {e}")
    except ValueError as e:
        logger.debug(f"certificate rejected: {e}")
        return CertificateCheck(False, f"invalid expression: {e}")
