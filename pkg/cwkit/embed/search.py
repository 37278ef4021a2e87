"""
search.py
====================================
Backtracking search for an induced embedding of a small guest into a host.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..graph import Embedding
from ..utils import Budget, iter_bits, popcount

__all__ = ["EmbeddingSearch", "find_embedding"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EmbeddingSearch:
    """Outcome of :func:`find_embedding`.

    `embedding` is None when nothing was found; only with ``exhausted=True`` is that a proof
    that no induced embedding exists.
    """

    embedding: Optional[Embedding]
    exhausted: bool
    nodes: int
    seconds: float

    @property
    def status(self):
        if self.embedding is not None:
            return "found"
        return "none" if self.exhausted else "unknown"


def _search_order(guest):
    # each next vertex has the most already-ordered neighbours, then the highest degree
    order = []
    placed = 0
    remaining = set(guest.vertices())
    while remaining:
        v = min(
            remaining,
            key=lambda u: (
                -popcount(guest.adjacency[u - 1] & placed),
                -popcount(guest.adjacency[u - 1]),
                u,
            ),
        )
        order.append(v)
        placed |= 1 << (v - 1)
        remaining.remove(v)
    return order


def find_embedding(guest, host, budget=None):
    """Search an injective map from `guest` into `host` preserving edges and non-edges.

    Vertices are assigned in connectivity order; a candidate image must have at least the
    guest degree, and its adjacency to the images placed so far must equal the guest's
    adjacency to their preimages.

    :param guest: graph to embed
    :type guest: Graph
    :param host: graph to embed into
    :type host: Graph
    :param budget: seconds, a Budget, or None for an unbounded search
    :type budget: Union[float, Budget], optional
    :rtype: EmbeddingSearch
    """
    budget = Budget.of(budget)
    order = _search_order(guest)
    host_degree = [popcount(row) for row in host.adjacency]
    guest_degree = [popcount(row) for row in guest.adjacency]
    image = {}
    expanded = 0

    def extend(depth, domain, used):
        nonlocal expanded
        if depth == len(order):
            return True
        u = order[depth]
        expected = 0
        anchors = guest.adjacency[u - 1] & domain
        for a in iter_bits(anchors):
            expected |= 1 << (image[a + 1] - 1)

        if anchors:
            # every image neighbour of an anchor; start from one anchor's host neighbourhood
            first = next(iter_bits(anchors)) + 1
            candidates = host.adjacency[image[first] - 1] & ~used
        else:
            candidates = host.full_mask & ~used

        for x in iter_bits(candidates):
            if host_degree[x] < guest_degree[u - 1]:
                continue
            if host.adjacency[x] & used != expected:
                continue
            expanded += 1
            if not budget.tick():
                raise _OutOfBudget
            image[u] = x + 1
            if extend(depth + 1, domain | 1 << (u - 1), used | 1 << x):
                return True
            del image[u]
        return False

    try:
        found = extend(0, 0, 0)
    except _OutOfBudget:
        logger.debug(f"embedding search stopped after {expanded} nodes")
        return EmbeddingSearch(None, False, expanded, budget.elapsed())

    embedding = Embedding(guest, host, dict(image)) if found else None
    return EmbeddingSearch(embedding, True, expanded, budget.elapsed())


class _OutOfBudget(Exception):
    pass
