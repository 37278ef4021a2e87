import unittest.mock as mock

import pytest

import cwkit
from cwkit.families.family import BaseFamily
from cwkit import (
    InvalidParameterError,
    j_hole,
    j_order,
    make_J,
    make_Z,
    path_power,
    path_power_edge_count,
    z_order,
)


@pytest.mark.parametrize("k, n", [(1, 1), (1, 6), (2, 5), (3, 3), (3, 10), (4, 21)])
def test_path_power_adjacency(k, n):
    graph, layout = path_power(k, n)
    assert layout == list(range(1, n + 1))
    for u in graph.vertices():
        for v in graph.vertices():
            expected = 0 < abs(u - v) <= k
            assert graph.has_edge(u, v) == expected, f"x_{u} x_{v} wrong for k={k}"
    assert graph.num_edges == path_power_edge_count(k, n), (
        f"closed form {path_power_edge_count(k, n)} differs from {graph.num_edges}"
    )


@pytest.mark.parametrize("k, n", [(0, 3), (2, 0)])
def test_path_power_ranges(k, n):
    with pytest.raises(InvalidParameterError):
        path_power(k, n)


@pytest.mark.parametrize(
    "k, order, hole", [(2, 10, 3), (3, 21, 8), (4, 36, 15), (5, 55, 24)]
)
def test_j_sizes(k, order, hole):
    graph, g = make_J(k)
    assert j_order(k) == order and graph.n == order, f"|V(J_{k})| = {graph.n}"
    assert j_hole(k) == g == hole
    assert graph.name(g) == f"z_{hole}"


@pytest.mark.parametrize("k, order", [(0, 2), (1, 4), (2, 8), (3, 14)])
def test_z_sizes(k, order):
    graph = make_Z(k)
    assert z_order(k) == order == graph.n
    assert graph.num_edges == path_power_edge_count(k, order)


def test_z0_is_edgeless():
    assert make_Z(0).num_edges == 0


@pytest.mark.parametrize(
    "name, params", [("J", {"k": 1}), ("Z", {"k": -1}), ("path-power", {"n": 0})]
)
def test_family_ranges(name, params):
    with pytest.raises(InvalidParameterError):
        cwkit.get_family(name, **params)


def test_unknown_parameter():
    with pytest.raises(InvalidParameterError):
        cwkit.get_family("J", k=3, case="a")


def test_errors_inside_a_family_are_not_parameter_errors():
    with mock.patch.object(
        BaseFamily, "_initialize_family_params", side_effect=TypeError("broken")
    ):
        with pytest.raises(TypeError) as info:
            cwkit.get_family("J", k=3)
    assert str(info.value) == "broken"


def test_j_distinguishes_z_g():
    family = cwkit.get_family("J", k=3)
    assert family.graph.label(family.distinguished) == "z_8"
    assert family.path_power_k == 3
