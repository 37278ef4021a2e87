import itertools

import numpy as np
import pytest

from cwkit import (
    Graph,
    check_certificate,
    cwd_decide,
    cwd_exact,
    delete_vertex,
    induced_subgraph,
    lcwd_exact,
    make_Z,
    path_power,
    trivial_lower_bound,
)


@pytest.mark.parametrize(
    "graph, lcwd, cwd",
    [
        (Graph.from_edges(1, []), 1, 1),
        (Graph.from_edges(4, []), 1, 1),
        (Graph.from_edges(4, list(itertools.combinations(range(1, 5), 2))), 2, 2),
        (path_power(1, 4)[0], 3, 3),
        (path_power(1, 8)[0], 3, 3),
    ],
)
def test_known_widths(graph, lcwd, cwd):
    linear = lcwd_exact(graph)
    assert (
        linear.exact and linear.value == lcwd
    ), f"lcwd {linear.describe()}, expected {lcwd}"
    assert check_certificate(linear.certificate, graph, lcwd, linear=True)
    general = cwd_exact(graph)
    assert (
        general.exact and general.value == cwd
    ), f"cwd {general.describe()}, expected {cwd}"


def test_trivial_lower_bound():
    assert trivial_lower_bound(Graph.from_edges(3, [])) == 1
    assert trivial_lower_bound(path_power(1, 2)[0]) == 2


def test_out_of_budget_keeps_a_bracket():
    from cwkit.utils import Budget

    graph, _ = path_power(3, 18)
    result = lcwd_exact(graph, Budget(nodes=2))
    assert result.lower <= result.upper
    assert check_certificate(result.certificate, graph, result.upper, linear=True)
    if not result.exact:
        assert result.kind == "upper-bound"


def test_z2_minus_v4_is_three():
    graph = delete_vertex(make_Z(2), 4)[0]
    result = lcwd_exact(graph)
    assert result.exact and result.value == 3, f"lcwd {result.describe()}"


def test_z_clique_width_lower_bounds():
    assert cwd_decide(make_Z(1), 2).answer == "no"
    assert cwd_decide(make_Z(2), 3).answer == "no"


@pytest.mark.slow
def test_z2_clique_width_is_four():
    result = cwd_exact(make_Z(2))
    assert result.exact and result.value == 4


def _random_graph(rng, n):
    p = rng.uniform(0.2, 0.8)
    pairs = itertools.combinations(range(1, n + 1), 2)
    edges = [(u, v) for u, v in pairs if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.mark.parametrize(
    "count", [30, pytest.param(500, marks=pytest.mark.slow)]
)
def test_random_graph_properties(count):
    rng = np.random.default_rng(count)
    for _ in range(count):
        graph = _random_graph(rng, int(rng.integers(2, 7)))
        linear, general = lcwd_exact(graph), cwd_exact(graph)
        assert general.value <= linear.value, f"cwd > lcwd on {graph.edges()}"

        keep = [v for v in graph.vertices() if rng.random() < 0.7] or [1]
        sub = induced_subgraph(graph, keep)[0]
        assert lcwd_exact(sub).value <= linear.value, f"{keep} of {graph.edges()}"
        assert cwd_exact(sub).value <= general.value, f"{keep} of {graph.edges()}"
