"""
graph_io.py
====================================
Reading and writing the line-oriented graph format::

    # comments run to the end of the line
    g <n> <m>
    v <id> <name>      (optional, one per named vertex)
    e <u> <v>          (exactly m lines, 1 <= u < v <= n)
"""

from ..exceptions import GraphFormatError
from .graph import Graph

__all__ = ["read_graph", "write_graph", "load_graph", "save_graph"]


def _tokens(text):
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].split()
        if content:
            yield number, content


def _int(token, number, what):
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(
            f"{what} must be an integer, got {token!r}", number
        ) from None


def read_graph(text):
    """Parse a graph from its text form.

    :param text: file contents
    :type text: str
    :raises GraphFormatError: on a malformed header, a bad or duplicate vertex line, a loop,
        an out-of-range or duplicate edge, or a wrong edge count
    :return: the graph
    :rtype: Graph
    """
    lines = _tokens(text)
    header = next(lines, None)
    if header is None:
        raise GraphFormatError("empty graph file")
    number, fields = header
    if len(fields) != 3 or fields[0] != "g":
        got = " ".join(fields)
        raise GraphFormatError(f"expected header 'g <n> <m>', got {got!r}", number)
    n = _int(fields[1], number, "vertex count")
    m = _int(fields[2], number, "edge count")
    if n < 0 or m < 0:
        raise GraphFormatError("counts must be non-negative", number)

    names = [None] * n
    edges = set()
    adjacency = [0] * n
    last = number
    for number, fields in lines:
        last = number
        kind = fields[0]
        if kind == "v":
            if edges:
                raise GraphFormatError("vertex lines must precede edge lines", number)
            if len(fields) != 3:
                raise GraphFormatError("expected 'v <id> <name>'", number)
            v = _int(fields[1], number, "vertex id")
            if not 1 <= v <= n:
                raise GraphFormatError(f"vertex id {v} outside 1..{n}", number)
            if names[v - 1] is not None:
                raise GraphFormatError(f"vertex {v} named twice", number)
            if fields[2] in names:
                raise GraphFormatError(f"duplicate vertex name {fields[2]!r}", number)
            names[v - 1] = fields[2]
        elif kind == "e":
            if len(fields) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", number)
            u = _int(fields[1], number, "vertex id")
            v = _int(fields[2], number, "vertex id")
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}", number)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(
                    f"edge {u} {v} leaves the id range 1..{n}", number
                )
            if u > v:
                raise GraphFormatError(
                    f"edge {u} {v} must be written as 'e {v} {u}'", number
                )
            if (u, v) in edges:
                raise GraphFormatError(f"duplicate edge {u} {v}", number)
            edges.add((u, v))
            adjacency[u - 1] |= 1 << (v - 1)
            adjacency[v - 1] |= 1 << (u - 1)
        else:
            raise GraphFormatError(f"unknown line type {kind!r}", number)

    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}", last)
    return Graph(tuple(adjacency), tuple(names))


def write_graph(graph):
    """Canonical text form: header, named vertices by id, edges in lexicographic order.

    :param graph: the graph to write
    :type graph: Graph
    :rtype: str
    """
    lines = [f"g {graph.n} {graph.num_edges}"]
    named = [v for v in graph.vertices() if graph.name(v) is not None]
    lines += [f"v {v} {graph.name(v)}" for v in named]
    lines += [f"e {u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def load_graph(path):
    with open(path, encoding="utf-8") as f:
        return read_graph(f.read())


def save_graph(graph, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(write_graph(graph))
