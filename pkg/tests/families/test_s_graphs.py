import pytest

import cwkit
from cwkit import (
    S_PLUS_CASES,
    InvalidParameterError,
    make_S,
    make_S_plus,
    s_core_order,
    w_plus_neighbourhood,
)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_s_structure(k):
    graph = make_S(k)
    n = s_core_order(k)
    assert graph.n == n + 4

    w1, w2, w3, w4 = (graph.id_of(f"w_{i}") for i in range(1, 5))
    assert graph.neighbors(w1) == [w2]
    assert sorted(graph.neighbors(w2)) == sorted(
        [1, w1]
    ), "w_2 must sit between v_1 and w_1"
    assert sorted(graph.neighbors(w3)) == sorted(
        [n, w4]
    ), "w_3 must sit between v_n and w_4"
    assert graph.neighbors(w4) == [w3]


def test_s2_core():
    # S_2: the square of the path on five vertices plus two pendant paths
    assert s_core_order(2) == 5
    assert make_S(2).num_edges == 7 + 4


@pytest.mark.parametrize("case", S_PLUS_CASES)
def test_s_plus_neighbourhoods(case):
    k = 3
    graph, w_plus = make_S_plus(k, case)
    assert graph.label(w_plus) == "w^+"
    assert graph.neighbors(w_plus) == sorted(w_plus_neighbourhood(k, case))
    expected = k + 2 if case in ("a", "b") else k + 1
    degree = graph.degree(w_plus)
    assert degree == expected, f"case {case}: degree {degree}"


def test_s_plus_rejects():
    with pytest.raises(InvalidParameterError):
        make_S_plus(2, "a")
    with pytest.raises(InvalidParameterError):
        make_S_plus(3, "e")
    with pytest.raises(InvalidParameterError):
        cwkit.get_family("S+", case="x")


def test_s_plus_family_distinguishes_w_plus():
    family = cwkit.get_family("S+", k=4, case="d")
    assert family.graph.label(family.distinguished) == "w^+"
