import itertools

import numpy as np
import pytest

from cwkit import (
    Graph,
    InvalidParameterError,
    check_certificate,
    delete_vertex,
    eager_expression,
    eager_width,
    is_linear,
    make_Z,
    path_power,
    width,
)


def _complete(n):
    return Graph.from_edges(n, list(itertools.combinations(range(1, n + 1), 2)))


def _random_graph(rng, n, p):
    pairs = itertools.combinations(range(1, n + 1), 2)
    edges = [(u, v) for u, v in pairs if rng.random() < p]
    return Graph.from_edges(n, edges)


def test_z2_minus_v4_reverse_order():
    graph = delete_vertex(make_Z(2), 4)[0]
    ordering = [7, 6, 5, 4, 3, 2, 1]
    expr = eager_expression(graph, ordering)
    check = check_certificate(expr, graph, 3, linear=True)
    assert check, f"rejected: {check.reason}"
    assert width(expr) <= eager_width(graph, ordering) <= 3


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_complete_graphs_need_two_labels(n):
    graph = _complete(n)
    expr = eager_expression(graph, list(graph.vertices()))
    assert width(expr) == 2, f"K_{n} got width {width(expr)}"
    assert check_certificate(expr, graph, 2)


def test_path_in_natural_order():
    graph, layout = path_power(1, 4)
    assert eager_width(graph, layout) == 3
    assert check_certificate(eager_expression(graph, layout), graph, 3)


def test_path_power_layout_is_cheap():
    # a k-path layout never needs more than k + 2 labels
    graph, layout = path_power(3, 15)
    assert eager_width(graph, layout) <= 5


@pytest.mark.parametrize("seed", range(10))
def test_random_graphs_give_certificates(seed):
    rng = np.random.default_rng(seed)
    graph = _random_graph(rng, 7, 0.4)
    ordering = [int(v) for v in rng.permutation(np.arange(1, 8))]
    expr = eager_expression(graph, ordering)
    assert is_linear(expr)
    check = check_certificate(expr, graph, graph.n + 1, linear=True)
    assert check, f"seed {seed}: {check.reason}"
    assert check.width <= eager_width(graph, ordering)


@pytest.mark.parametrize("ordering", [[1, 2, 3], [1, 2, 2, 3], [0, 1, 2, 3]])
def test_bad_orderings(ordering):
    graph, _ = path_power(1, 4)
    with pytest.raises(InvalidParameterError):
        eager_expression(graph, ordering)
