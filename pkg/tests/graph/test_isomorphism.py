import itertools
import random

import networkx as nx
import pytest

from cwkit import (
    BudgetExceeded,
    Graph,
    find_isomorphism,
    is_isomorphic,
    make_M2,
    make_S_plus,
    refine_colors,
)


def _permuted(graph, order):
    image = {v: order[v - 1] for v in graph.vertices()}
    return Graph.from_edges(graph.n, [(image[u], image[v]) for u, v in graph.edges()])


def test_refinement_separates_degrees():
    star = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    (colors,) = refine_colors(star)
    assert colors[0] != colors[1] and colors[1] == colors[2] == colors[3]


def test_isomorphism_maps_edges_to_edges():
    graph = make_M2("+")
    order = list(range(1, graph.n + 1))
    random.Random(3).shuffle(order)
    other = _permuted(graph, order)

    mapping = find_isomorphism(graph, other)
    assert mapping is not None, "a relabelled graph must be isomorphic"
    for u, v in graph.edges():
        assert other.has_edge(mapping[u], mapping[v]), f"{u}-{v} not preserved"


def test_regular_non_isomorphic_pair():
    # C6 against two triangles: colour refinement alone cannot tell them apart
    cycle = Graph.from_edges(6, [(i, i % 6 + 1) for i in range(1, 7)])
    triangles = Graph.from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    assert not is_isomorphic(cycle, triangles)


def test_s_plus_cases_a_and_b_are_isomorphic():
    a, _ = make_S_plus(3, "a")
    b, _ = make_S_plus(3, "b")
    c, _ = make_S_plus(3, "c")
    assert is_isomorphic(a, b)
    assert not is_isomorphic(a, c)


def test_node_limit():
    # any search on an edgeless graph with several vertices needs more than one node
    empty = Graph.from_edges(6, [])
    with pytest.raises(BudgetExceeded):
        find_isomorphism(empty, empty, node_limit=1)


@pytest.mark.parametrize("n", [4, 5])
def test_agrees_with_networkx(n):
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
    pairs = itertools.combinations(atlas[:20], 2)
    for first, second in pairs:
        ours = is_isomorphic(Graph.from_networkx(first), Graph.from_networkx(second))
        assert ours == nx.is_isomorphic(
            first, second
        ), "isomorphism disagrees with networkx"
