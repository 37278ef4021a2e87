import itertools

import pytest

from cwkit import (
    Graph,
    InvalidParameterError,
    check_certificate,
    delete_vertex,
    make_J,
    make_S_plus,
    make_Z,
    path_power,
    search_certificate,
)


def test_finds_z2_minus_v4_at_three():
    graph = delete_vertex(make_Z(2), 4)[0]
    search = search_certificate(graph, 3)
    assert search.found and search.method == "dfs"
    assert check_certificate(search.expression, graph, 3)
    assert sorted(search.ordering) == list(graph.vertices())


def test_triangle_does_not_fit_one_label():
    triangle = Graph.from_edges(3, list(itertools.combinations(range(1, 4), 2)))
    search = search_certificate(triangle, 1)
    assert search.expression is None
    assert search.exhausted


def test_larger_graphs_within_budget():
    graph, _ = path_power(2, 30)
    search = search_certificate(graph, 4, budget=30)
    assert search.found, f"no certificate, notes: {search.notes}"
    assert search.check.width <= 4


def test_empty_graph():
    search = search_certificate(Graph.from_edges(0, []), 2)
    assert not search.found and search.notes


def test_rejects_zero_width():
    with pytest.raises(InvalidParameterError):
        search_certificate(path_power(1, 3)[0], 0)


def _j_minus_hole(k):
    graph, g = make_J(k)
    return delete_vertex(graph, g)[0]


def test_j2_minus_hole_at_three():
    graph = _j_minus_hole(2)
    search = search_certificate(graph, 3, budget=60)
    assert search.found, f"notes: {search.notes}"
    assert check_certificate(search.expression, graph, 3, linear=True)


@pytest.mark.slow
@pytest.mark.parametrize("k", [3, 4])
def test_j_minus_hole_at_k_plus_one(k):
    graph = _j_minus_hole(k)
    search = search_certificate(graph, k + 1, budget=900)
    assert search.found, f"J_{k} - z_g: no certificate within the budget"


@pytest.mark.slow
def test_s_plus_3_minus_v5():
    graph = delete_vertex(make_S_plus(3, "a")[0], 5)[0]
    search = search_certificate(graph, 4, budget=120)
    assert search.found
    assert check_certificate(search.expression, graph, 4, linear=True)


def test_larger_width_still_succeeds():
    graph = delete_vertex(make_Z(2), 4)[0]
    for w in (3, 4, 5):
        assert search_certificate(graph, w).found, f"no certificate at width {w}"
