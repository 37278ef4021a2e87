from ...exceptions import InvalidParameterError
from ...graph import Graph
from ..path_powers.path_power_gen import path_power

__all__ = [
    "S_PLUS_CASES",
    "s_core_order",
    "w_plus_neighbourhood",
    "make_S",
    "make_S_plus",
]

S_PLUS_CASES = ("a", "b", "c", "d")


def s_core_order(k):
    """Order n = (k-1)(k+1)+2 of the path power at the core of S_k."""
    return (k - 1) * (k + 1) + 2


def make_S(k):
    """S_k: the k-path power v_1..v_n with pendant paths w_2 w_1 at v_1 and w_3 w_4 at v_n.

    Ids are v_1..v_n = 1..n followed by w_1..w_4 = n+1..n+4.

    :param k: k >= 2
    :type k: int
    :raises InvalidParameterError: if k < 2
    :rtype: Graph
    """
    if k < 2:
        raise InvalidParameterError(f"S_k needs k >= 2, got {k}")
    n = s_core_order(k)
    core, _ = path_power(k, n, prefix="v")
    w1, w2, w3, w4 = n + 1, n + 2, n + 3, n + 4
    edges = core.edges() + [(w1, w2), (1, w2), (n, w3), (w3, w4)]
    names = core.names + ("w_1", "w_2", "w_3", "w_4")
    return Graph.from_edges(n + 4, edges, names)


def w_plus_neighbourhood(k, case):
    """Ids of the neighbours of w^+ in S^+_k for one of the cases a-d.

    :param k: k >= 3
    :type k: int
    :param case: "a", "b", "c" or "d"
    :type case: str
    :raises InvalidParameterError: on an unknown case
    :rtype: List[int]
    """
    n = s_core_order(k)
    w1, w2, w3, w4 = n + 1, n + 2, n + 3, n + 4
    if case == "a":
        return [w1, w2] + list(range(1, k + 1))
    if case == "b":
        return list(range(n - k + 1, n + 1)) + [w3, w4]
    if case == "c":
        return [w1, w2] + list(range(1, k))
    if case == "d":
        return list(range(n - k + 2, n + 1)) + [w3, w4]
    raise InvalidParameterError(f"case must be one of {S_PLUS_CASES}, got {case!r}")


def make_S_plus(k, case):
    """S^+_k: S_k plus the vertex w^+ (id n+5) with the neighbourhood of the given case.

    :param k: k >= 3
    :type k: int
    :param case: "a", "b", "c" or "d"
    :type case: str
    :raises InvalidParameterError: if k < 3 or the case is unknown
    :return: the graph and the id of w^+
    :rtype: Tuple[Graph, int]
    """
    if k < 3:
        raise InvalidParameterError(f"S^+_k needs k >= 3, got {k}")
    neighbours = w_plus_neighbourhood(k, case)
    base = make_S(k)
    w_plus = base.n + 1
    edges = base.edges() + [(u, w_plus) for u in neighbours]
    return Graph.from_edges(w_plus, edges, base.names + ("w^+",)), w_plus
