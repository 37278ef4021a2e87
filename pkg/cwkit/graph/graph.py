"""
graph.py
====================================
The graph value shared by every cwkit module, and the induced-subgraph operations on it.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from ..exceptions import InvalidVertexError
from ..utils import iter_bits

__all__ = [
    "Graph",
    "Embedding",
    "delete_vertex",
    "induced_subgraph",
    "disjoint_union",
    "prime_name",
    "reversal_map",
]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on the vertex ids 1..n.

    Adjacency is stored as one bitset per vertex: bit ``u - 1`` of ``adjacency[v - 1]`` is set
    iff ``u`` and ``v`` are adjacent. Graphs are immutable; every operation returns a new graph.

    :param adjacency: neighbourhood bitset per vertex, in id order
    :type adjacency: Tuple[int, ...]
    :param names: optional unique name per vertex (``None`` for unnamed vertices)
    :type names: Tuple[Optional[str], ...], optional
    """

    adjacency: Tuple[int, ...]
    names: Tuple[Optional[str], ...] = field(default=None)

    def __post_init__(self):
        n = len(self.adjacency)
        if self.names is None:
            object.__setattr__(self, "names", (None,) * n)
        elif len(self.names) != n:
            raise ValueError(f"expected {n} names, got {len(self.names)}")

        full = (1 << n) - 1
        for i, row in enumerate(self.adjacency):
            if row & ~full:
                raise InvalidVertexError(
                    f"vertex {i + 1} has a neighbour outside 1..{n}"
                )
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i + 1}")
            for j in iter_bits(row):
                if not self.adjacency[j] >> i & 1:
                    raise ValueError(
                        f"adjacency of {i + 1} and {j + 1} is not symmetric"
                    )

        given = [name for name in self.names if name is not None]
        if len(set(given)) != len(given):
            raise ValueError("vertex names must be unique")

    @classmethod
    def from_edges(cls, n, edges, names=None):
        """Build a graph from an edge list over the ids 1..n.

        :param n: number of vertices
        :type n: int
        :param edges: pairs of 1-based vertex ids
        :type edges: Iterable[Tuple[int, int]]
        :param names: optional names, one per vertex
        :type names: Sequence[Optional[str]], optional
        :raises InvalidVertexError: if an edge mentions an id outside 1..n
        :raises ValueError: on loops
        :return: the graph
        :rtype: Graph
        """
        adjacency = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidVertexError(f"edge {u}-{v} leaves the id range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adjacency[u - 1] |= 1 << (v - 1)
            adjacency[v - 1] |= 1 << (u - 1)
        return cls(tuple(adjacency), None if names is None else tuple(names))

    @property
    def n(self):
        return len(self.adjacency)

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def vertices(self):
        return range(1, self.n + 1)

    def _check(self, v):
        if not 1 <= v <= self.n:
            raise InvalidVertexError(f"unknown vertex id {v}, expected 1..{self.n}")

    def mask(self, v):
        """Neighbourhood of `v` as a bitset (bit u-1 for neighbour u)."""
        self._check(v)
        return self.adjacency[v - 1]

    def has_edge(self, u, v):
        self._check(u)
        self._check(v)
        return bool(self.adjacency[u - 1] >> (v - 1) & 1)

    def neighbors(self, v):
        return [u + 1 for u in iter_bits(self.mask(v))]

    def degree(self, v):
        return bin(self.mask(v)).count("1")

    def edges(self):
        """All edges as sorted pairs ``(u, v)`` with ``u < v``."""
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self.adjacency)
            for j in iter_bits(row >> (i + 1) << (i + 1))
        ]

    @property
    def num_edges(self):
        return sum(bin(row).count("1") for row in self.adjacency) // 2

    def name(self, v):
        self._check(v)
        return self.names[v - 1]

    def label(self, v):
        """Printable vertex label: the name if there is one, the id otherwise."""
        name = self.name(v)
        return str(v) if name is None else name

    def id_of(self, name):
        try:
            return self.names.index(name) + 1
        except ValueError:
            raise InvalidVertexError(f"no vertex named {name!r}") from None

    def is_fully_named(self):
        return all(name is not None for name in self.names)

    def relabel_names(self, names):
        return Graph(self.adjacency, tuple(names))

    def to_networkx(self):
        """Convert to a `networkx.Graph` whose nodes are the ids, names as a node attribute."""
        import networkx as nx

        graph = nx.Graph()
        for v in self.vertices():
            graph.add_node(v, name=self.names[v - 1])
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_networkx(cls, graph):
        """Convert from networkx; nodes are numbered 1..n in sorted order when sortable."""
        try:
            nodes = sorted(graph.nodes())
        except TypeError:
            nodes = list(graph.nodes())
        index = {node: i + 1 for i, node in enumerate(nodes)}
        names = [graph.nodes[node].get("name") for node in nodes]
        return cls.from_edges(
            len(nodes),
            [(index[u], index[v]) for u, v in graph.edges() if u != v],
            names if any(name is not None for name in names) else None,
        )

    def __str__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class Embedding:
    """An injective map from guest ids to host ids witnessing an induced subgraph.

    :param guest: the embedded graph
    :type guest: Graph
    :param host: the graph embedded into
    :type host: Graph
    :param mapping: guest id -> host id
    :type mapping: Dict[int, int]
    """

    guest: Graph
    host: Graph
    mapping: Dict[int, int]

    def describe(self):
        """Pairs of printable labels, guest to host, in guest id order."""
        return [
            (self.guest.label(u), self.host.label(self.mapping[u]))
            for u in sorted(self.mapping)
        ]


def _reindex(graph, keep):
    keep = sorted(keep)
    for v in keep:
        graph._check(v)
    translation = {old: new for new, old in enumerate(keep, start=1)}

    adjacency = []
    for old in keep:
        row = 0
        for u in iter_bits(graph.adjacency[old - 1]):
            new = translation.get(u + 1)
            if new is not None:
                row |= 1 << (new - 1)
        adjacency.append(row)
    names = tuple(graph.names[old - 1] for old in keep)
    return Graph(tuple(adjacency), names), translation


def delete_vertex(graph, v):
    """Delete vertex `v`, keeping the induced graph on the rest.

    Remaining ids are renumbered 1..n-1 in their original order.

    :param graph: the graph
    :type graph: Graph
    :param v: id of the vertex to delete
    :type v: int
    :raises InvalidVertexError: if `v` is not a vertex
    :return: the smaller graph and the translation old id -> new id
    :rtype: Tuple[Graph, Dict[int, int]]
    """
    graph._check(v)
    return _reindex(graph, [u for u in graph.vertices() if u != v])


def induced_subgraph(graph, vertices):
    """The subgraph induced by `vertices`, renumbered in original id order.

    :param graph: the graph
    :type graph: Graph
    :param vertices: ids to keep
    :type vertices: Iterable[int]
    :raises InvalidVertexError: if an id is out of range
    :return: the induced subgraph and the translation old id -> new id
    :rtype: Tuple[Graph, Dict[int, int]]
    """
    return _reindex(graph, set(vertices))


def prime_name(name):
    """``v_3`` -> ``v'_3``; names without an index get a trailing prime."""
    head, sep, tail = name.partition("_")
    return f"{head}'{sep}{tail}" if sep else f"{name}'"


def disjoint_union(first, second):
    """Disjoint union; the ids of `second` are shifted by ``first.n``.

    Names of `second` that clash with names of `first` are primed (``x_5`` becomes ``x'_5``).

    :param first: left operand
    :type first: Graph
    :param second: right operand
    :type second: Graph
    :return: the union, without edges between the operands
    :rtype: Graph
    """
    shift = first.n
    taken = {name for name in first.names if name is not None}
    names = list(first.names)
    for name in second.names:
        if name is not None:
            while name in taken:
                name = prime_name(name)
            taken.add(name)
        names.append(name)
    adjacency = first.adjacency + tuple(row << shift for row in second.adjacency)
    return Graph(adjacency, tuple(names))



def reversal_map(n):
    """The layout reversal i -> n - i + 1, an automorphism of every path power on n vertices."""
    return {i: n - i + 1 for i in range(1, n + 1)}
