import pytest

from cwkit import InvalidParameterError, f_order, make_F, make_gem, make_M, make_M2


@pytest.mark.parametrize("k", [3, 4])
def test_f_order(k):
    assert make_F(k).n == f_order(k) == k * k


@pytest.mark.parametrize("k, l", [(3, 0), (3, 1), (3, 2), (4, 3)])
def test_m_connector(k, l):
    graph = make_M(k, l)
    n = k * k
    assert graph.n == 2 * n + l, f"M_({k},1,{l}) has {graph.n} vertices"

    connector = [n] + [2 * n + i for i in range(1, l + 1)] + [2 * n]
    for a, b in zip(connector, connector[1:]):
        assert graph.has_edge(a, b), f"connector edge {a}-{b} missing"
    for w in connector[1:-1]:
        assert graph.degree(w) == 2, "inner connector vertices have degree two"

    cross = [
        (u, v) for u, v in graph.edges() if u <= n and n < v <= 2 * n
    ]
    assert cross == ([(n, 2 * n)] if l == 0 else []), f"unexpected cross edges {cross}"


def test_m_rejects_negative_l():
    with pytest.raises(InvalidParameterError):
        make_M(3, -1)


def test_gem():
    gem = make_gem()
    assert gem.n == 5 and gem.num_edges == 7
    assert gem.degree(3) == 4, "x_3 is adjacent to the whole P_4"


def test_m2():
    minus = make_M2("-")
    plus = make_M2("+")
    assert minus.num_edges == 14
    assert plus.edges() == sorted(minus.edges() + [(5, 10)])
    assert plus.label(5) == "x_5" and plus.label(10) == "x'_5"
    with pytest.raises(InvalidParameterError):
        make_M2("0")
