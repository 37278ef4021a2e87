from ...exceptions import InvalidParameterError
from ...graph import Graph, disjoint_union
from ..path_powers.path_power_gen import path_power

__all__ = ["M2_SIGNS", "f_order", "make_F", "make_M", "make_gem", "make_M2"]

M2_SIGNS = ("+", "-")


def f_order(k):
    """Order n = (k-1)(k+1)+1 = k^2 of F_k."""
    return k * k


def make_F(k):
    """F_k: the k-path power on k^2 vertices v_1..v_n.

    :param k: k >= 3
    :type k: int
    :raises InvalidParameterError: if k < 3
    :rtype: Graph
    """
    if k < 3:
        raise InvalidParameterError(f"F_k needs k >= 3, got {k}")
    graph, _ = path_power(k, f_order(k), prefix="v")
    return graph


def make_M(k, l):
    """M_{k,1,l}: two copies of F_k whose last vertices are joined by a path through l new vertices.

    Ids: v_1..v_n, then v'_1..v'_n, then w_1..w_l. The connector v_n, w_1, ..., w_l, v'_n is an
    induced path; for l = 0 it is the single edge v_n v'_n.

    :param k: k >= 3
    :type k: int
    :param l: l >= 0
    :type l: int
    :raises InvalidParameterError: on bad parameters
    :rtype: Graph
    """
    if l < 0:
        raise InvalidParameterError(f"M_(k,1,l) needs l >= 0, got {l}")
    half = make_F(k)
    n = half.n
    both = disjoint_union(half, half)

    connector = [n] + [2 * n + i for i in range(1, l + 1)] + [2 * n]
    edges = both.edges() + list(zip(connector, connector[1:]))
    names = both.names + tuple(f"w_{i}" for i in range(1, l + 1))
    return Graph.from_edges(2 * n + l, edges, names)


def make_gem():
    """The gem: the 2-path power x_1..x_5, a P_4 plus a vertex (x_3) adjacent to all of it."""
    graph, _ = path_power(2, 5)
    return graph


def make_M2(sign):
    """M^-_2 is two disjoint gems (x_i and x'_i); M^+_2 also joins the layout ends x_5 x'_5.

    :param sign: "+" or "-"
    :type sign: str
    :raises InvalidParameterError: on any other sign
    :rtype: Graph
    """
    if sign not in M2_SIGNS:
        raise InvalidParameterError(f"sign must be one of {M2_SIGNS}, got {sign!r}")
    gem = make_gem()
    both = disjoint_union(gem, gem)
    if sign == "-":
        return both
    return Graph.from_edges(both.n, both.edges() + [(5, 10)], both.names)
