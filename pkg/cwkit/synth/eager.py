"""
eager.py
====================================
Linear expressions from vertex orderings.

Vertices are inserted one at a time. The newcomer either joins an existing label class it
would be merged with anyway, or takes the smallest free label; it is then joined by eta to
every class inside its neighbourhood, and finally classes with the same neighbourhood among
the vertices still to come are merged by rho. Placed vertices with equal future neighbourhoods
therefore always share a label.
"""

from ..exceptions import InvalidParameterError
from ..expr import AddEdges, Make, Relabel, Union
from ..utils import iter_bits

__all__ = [
    "future_classes",
    "class_count",
    "joinable_class",
    "step_cost",
    "eager_expression",
    "eager_width",
]


def future_classes(graph, placed):
    """Group the placed vertices by their neighbourhood among the unplaced ones.

    :param graph: the graph
    :type graph: Graph
    :param placed: bitset of placed vertices
    :type placed: int
    :return: future neighbourhood -> bitset of the placed vertices having it
    :rtype: Dict[int, int]
    """
    outside = graph.full_mask & ~placed
    classes = {}
    for u in iter_bits(placed):
        future = graph.adjacency[u] & outside
        classes[future] = classes.get(future, 0) | 1 << u
    return classes


def class_count(graph, placed):
    """Number of distinct future neighbourhoods among the placed vertices."""
    outside = graph.full_mask & ~placed
    return len({graph.adjacency[u] & outside for u in iter_bits(placed)})


def joinable_class(graph, placed, position, classes=None):
    """The future class that the vertex at bit `position` may be created into, if any.

    The vertex must have no neighbour in the class, every class member must already see all
    placed neighbours of the vertex, and after placing it the vertex and the class must have
    the same future neighbourhood. At most one class qualifies.

    :param graph: the graph
    :type graph: Graph
    :param placed: bitset of placed vertices
    :type placed: int
    :param position: bit position (id - 1) of the vertex to place
    :type position: int
    :param classes: ``future_classes(graph, placed)`` if already computed
    :type classes: Dict[int, int], optional
    :return: bitset of the class, or 0
    :rtype: int
    """
    if classes is None:
        classes = future_classes(graph, placed)
    row = graph.adjacency[position]
    seen = row & placed
    rest = graph.full_mask & ~placed & ~(1 << position)
    for future, members in classes.items():
        if row & members or future & rest != row & rest:
            continue
        if all(seen & ~graph.adjacency[u] == 0 for u in iter_bits(members)):
            return members
    return 0


def step_cost(graph, placed, position):
    """Labels alive while the vertex at bit `position` is inserted after `placed`."""
    classes = future_classes(graph, placed)
    fresh = 0 if joinable_class(graph, placed, position, classes) else 1
    return len(classes) + fresh


def _check_ordering(graph, ordering):
    if sorted(ordering) != list(graph.vertices()):
        raise InvalidParameterError(
            f"ordering must be a permutation of 1..{graph.n}, got {list(ordering)}"
        )


def eager_width(graph, ordering):
    """Width of :func:`eager_expression` for `ordering`, without building it.

    :rtype: int
    """
    _check_ordering(graph, ordering)
    placed = 0
    worst = 0
    for v in ordering:
        worst = max(worst, step_cost(graph, placed, v - 1))
        placed |= 1 << (v - 1)
    return worst


def eager_expression(graph, ordering):
    """Build the eager linear expression of `graph` for a vertex ordering.

    Vertex names in the expression are the printable labels of `graph` (names, or ids for
    unnamed vertices), so the result evaluates to `graph` itself.

    :param graph: the graph
    :type graph: Graph
    :param ordering: permutation of the vertex ids
    :type ordering: Sequence[int]
    :raises InvalidParameterError: if `ordering` is not a permutation of the ids
    :rtype: CwExpr
    """
    _check_ordering(graph, ordering)
    expr = None
    placed = 0
    label_of = {}  # bit position -> label

    for v in ordering:
        x = v - 1
        classes = future_classes(graph, placed)
        target = joinable_class(graph, placed, x, classes)
        if target:
            label = label_of[next(iter_bits(target))]
        else:
            alive = {label_of[u] for u in iter_bits(placed)}
            label = next(i for i in range(1, len(alive) + 2) if i not in alive)
        leaf = Make(label, graph.label(v))
        expr = leaf if expr is None else Union(expr, leaf)

        inside = [
            members
            for members in classes.values()
            if members & ~graph.adjacency[x] == 0
        ]
        for other in sorted(label_of[next(iter_bits(members))] for members in inside):
            expr = AddEdges(label, other, expr)

        label_of[x] = label
        placed |= 1 << x

        for members in future_classes(graph, placed).values():
            present = sorted({label_of[u] for u in iter_bits(members)})
            for extra in present[1:]:
                expr = Relabel(extra, present[0], expr)
            for u in iter_bits(members):
                label_of[u] = present[0]
    return expr
