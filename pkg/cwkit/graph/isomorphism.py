"""
isomorphism.py
====================================
Exact isomorphism test for the small graphs cwkit works with: joint colour refinement of both
graphs, then backtracking over colour-compatible candidates.
"""

import logging
from collections import Counter

from ..constants import ISOMORPHISM_NODE_LIMIT
from ..exceptions import BudgetExceeded
from ..utils import iter_bits

__all__ = ["refine_colors", "find_isomorphism", "is_isomorphic"]

logger = logging.getLogger(__name__)


def refine_colors(*graphs):
    """Colour refinement run on several graphs at once with one shared colour palette.

    Starts from degrees and replaces every colour by (colour, sorted neighbour colours) until the
    number of classes stops growing. Colours are comparable across the given graphs.

    :param graphs: graphs to refine together
    :type graphs: Graph
    :return: one list of colours per graph, indexed by ``id - 1``
    :rtype: List[List[int]]
    """
    colorings = [[bin(row).count("1") for row in graph.adjacency] for graph in graphs]
    classes = len({c for coloring in colorings for c in coloring})

    while True:
        signatures = [
            [
                (coloring[i], tuple(sorted(coloring[j] for j in iter_bits(row))))
                for i, row in enumerate(graph.adjacency)
            ]
            for graph, coloring in zip(graphs, colorings)
        ]
        seen = sorted({s for sigs in signatures for s in sigs})
        palette = {sig: c for c, sig in enumerate(seen)}
        colorings = [[palette[s] for s in sigs] for sigs in signatures]
        if len(palette) == classes:
            return colorings
        classes = len(palette)


def find_isomorphism(first, second, node_limit=ISOMORPHISM_NODE_LIMIT):
    """Find an isomorphism from `first` onto `second`.

    :param first: the source graph
    :type first: Graph
    :param second: the target graph
    :type second: Graph
    :param node_limit: maximal number of backtracking nodes
    :type node_limit: int
    :raises BudgetExceeded: if the search needs more than `node_limit` nodes
    :return: mapping of ids of `first` to ids of `second`, or None when not isomorphic
    :rtype: Optional[Dict[int, int]]
    """
    if first.n != second.n or first.num_edges != second.num_edges:
        return None
    if first.n == 0:
        return {}

    colors_a, colors_b = refine_colors(first, second)
    if Counter(colors_a) != Counter(colors_b):
        return None

    by_color = {}
    for j, c in enumerate(colors_b):
        by_color.setdefault(c, []).append(j)

    # small colour classes first, then stay close to what is already mapped
    order = []
    placed = 0
    remaining = set(range(first.n))
    while remaining:
        pick = min(
            remaining,
            key=lambda i: (
                -bin(first.adjacency[i] & placed).count("1"),
                len(by_color[colors_a[i]]),
                i,
            ),
        )
        order.append(pick)
        placed |= 1 << pick
        remaining.remove(pick)

    image = [0] * first.n
    nodes = 0

    def extend(depth, domain, used):
        nonlocal nodes
        if depth == first.n:
            return True
        i = order[depth]
        expected = 0
        for a in iter_bits(first.adjacency[i] & domain):
            expected |= 1 << image[a]
        for j in by_color[colors_a[i]]:
            if used >> j & 1 or second.adjacency[j] & used != expected:
                continue
            nodes += 1
            if nodes > node_limit:
                raise BudgetExceeded(
                    f"isomorphism search exceeded {node_limit} nodes on {first.n} vertices"
                )
            image[i] = j
            if extend(depth + 1, domain | 1 << i, used | 1 << j):
                return True
        return False

    if not extend(0, 0, 0):
        logger.debug(f"no isomorphism after {nodes} nodes")
        return None
    return {i + 1: image[i] + 1 for i in range(first.n)}


def is_isomorphic(first, second, node_limit=ISOMORPHISM_NODE_LIMIT):
    """Whether two graphs are isomorphic (names are ignored).

    :raises BudgetExceeded: if the search needs more than `node_limit` nodes
    :rtype: bool
    """
    return find_isomorphism(first, second, node_limit) is not None
