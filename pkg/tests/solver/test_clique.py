import unittest.mock as mock

import networkx as nx
import pytest

import cwkit.solver.clique as clique
from cwkit import (
    LINEAR_NODE_LIMIT,
    Graph,
    InvalidParameterError,
    check_certificate,
    cwd_decide,
    general_cwd_decide,
    path_power,
)


def _atlas(n):
    atlas = nx.graph_atlas_g()
    return [Graph.from_networkx(g) for g in atlas if g.number_of_nodes() == n]


def _cycle(n):
    return Graph.from_networkx(nx.cycle_graph(n))


@pytest.mark.gate
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_agrees_with_closure(n):
    for graph in _atlas(n):
        for w in (1, 2, 3):
            ours = cwd_decide(graph, w)
            assert ours.verified
            assert bool(ours) == general_cwd_decide(
                graph, w
            ), f"{graph.edges()} at w={w}"
            if ours:
                assert check_certificate(ours.certificate, graph, w, linear=False)


def test_p4_needs_three():
    graph, _ = path_power(1, 4)
    assert cwd_decide(graph, 2).answer == "no"
    assert cwd_decide(graph, 3)


@pytest.mark.parametrize("n, cwd", [(5, 3), (6, 3), (7, 4)])
def test_cycles(n, cwd):
    # cycles from C_7 on need four labels
    decision = cwd_decide(_cycle(n), cwd)
    assert decision, f"C_{n} has clique-width {cwd}"
    assert check_certificate(decision.certificate, _cycle(n), cwd, linear=False)
    assert cwd_decide(_cycle(n), cwd - 1).answer == "no", f"C_{n} at {cwd - 1}"


def test_disconnected_graph_uses_unions():
    # two disjoint P4s: every side needs three labels, the union needs no more
    graph = Graph.from_edges(8, [(1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8)])
    decision = cwd_decide(graph, 3)
    assert decision
    assert check_certificate(decision.certificate, graph, 3, linear=False)


def test_rejects_empty_graph():
    with pytest.raises(InvalidParameterError):
        cwd_decide(Graph.from_edges(0, []), 2)


def test_linear_first_attempt_is_capped_without_a_budget():
    with mock.patch.object(
        clique, "lcwd_decide", wraps=clique.lcwd_decide
    ) as mock_lcwd_decide:
        decision = cwd_decide(_cycle(7), 4)
        mock_lcwd_decide.assert_called_once()

    given = mock_lcwd_decide.call_args[0][2]
    assert given.nodes == LINEAR_NODE_LIMIT, f"linear attempt got {given.nodes} nodes"
    assert decision, "C_7 has clique-width 4"
