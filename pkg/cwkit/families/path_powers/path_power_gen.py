from ...exceptions import InvalidParameterError
from ...graph import Graph

__all__ = [
    "path_power_edge_count",
    "path_power",
    "j_order",
    "j_hole",
    "z_order",
    "make_J",
    "make_Z",
]


def path_power_edge_count(k, n):
    """Number of edges of the k-path power on n vertices.

    :param k: the power, k >= 0
    :type k: int
    :param n: number of vertices
    :type n: int
    :rtype: int
    """
    if n <= k:
        return n * (n - 1) // 2
    return k * n - k * (k + 1) // 2


def _path_power(k, n, prefix):
    # k = 0 is allowed here: the edgeless graph that Z_0 is
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, min(i + k, n) + 1)]
    names = [f"{prefix}_{i}" for i in range(1, n + 1)]
    return Graph.from_edges(n, edges, names)


def path_power(k, n, prefix="x"):
    """The k-path power on n vertices: x_i and x_j are adjacent iff 0 < |i - j| <= k.

    :param k: the power, k >= 1
    :type k: int
    :param n: number of vertices, n >= 1
    :type n: int
    :param prefix: vertex name prefix, defaults to "x"
    :type prefix: str, optional
    :raises InvalidParameterError: if k < 1 or n < 1
    :return: the graph and its k-path layout (the ids in layout order)
    :rtype: Tuple[Graph, List[int]]
    """
    if k < 1 or n < 1:
        raise InvalidParameterError(
            f"path_power needs k >= 1 and n >= 1, got k={k}, n={n}"
        )
    return _path_power(k, n, prefix), list(range(1, n + 1))


def j_order(k):
    return (2 * k - 1) * (k + 1) + 1


def j_hole(k):
    """Index g = (k-1)(k+1) of the vertex z_g."""
    return (k - 1) * (k + 1)


def z_order(k):
    return k * (k + 1) + 2


def make_J(k):
    """J_k: the k-path power on (2k-1)(k+1)+1 vertices z_1, z_2, ...

    :param k: k >= 2
    :type k: int
    :raises InvalidParameterError: if k < 2
    :return: the graph and the id of z_g
    :rtype: Tuple[Graph, int]
    """
    if k < 2:
        raise InvalidParameterError(f"J_k needs k >= 2, got {k}")
    return _path_power(k, j_order(k), "z"), j_hole(k)


def make_Z(k):
    """Z_k: the k-path power on k(k+1)+2 vertices v_1, v_2, ...

    :param k: k >= 0
    :type k: int
    :raises InvalidParameterError: if k < 0
    :rtype: Graph
    """
    if k < 0:
        raise InvalidParameterError(f"Z_k needs k >= 0, got {k}")
    return _path_power(k, z_order(k), "v")
