import pytest

from cwkit import (
    AddEdges,
    Graph,
    Make,
    Union,
    check_certificate,
    eager_expression,
    evaluate,
    make_Z,
    same_graph_by_names,
)


def _edge(a="a", b="b"):
    return AddEdges(1, 2, Union(Make(1, a), Make(2, b)))


def test_accepts_by_names():
    graph = Graph.from_edges(2, [(1, 2)], ["a", "b"])
    check = check_certificate(_edge(), graph, 2)
    assert check, f"rejected: {check.reason}"
    assert check.width == 2 and check.linear
    assert "names" in check.reason


def test_accepts_by_isomorphism_when_names_differ():
    graph = Graph.from_edges(2, [(1, 2)])
    check = check_certificate(_edge("p", "q"), graph, 2)
    assert check and "isomorphic" in check.reason


@pytest.mark.parametrize(
    "w, linear, graph, fragment",
    [
        (1, True, Graph.from_edges(2, [(1, 2)], ["a", "b"]), "more than 1"),
        (2, True, Graph.from_edges(3, [(1, 2)]), "vertices"),
        (2, True, Graph.from_edges(2, [], ["a", "b"]), "edges"),
    ],
)
def test_rejections(w, linear, graph, fragment):
    check = check_certificate(_edge(), graph, w, linear=linear)
    assert not check, "certificate should be rejected"
    assert fragment in check.reason, f"unexpected reason {check.reason!r}"


def test_non_linear_rejected_only_when_required():
    left = Union(Make(1, "a"), Make(1, "b"))
    tree = AddEdges(1, 2, Union(left, Union(Make(2, "c"), Make(2, "d"))))
    graph = Graph.from_edges(4, [(1, 3), (1, 4), (2, 3), (2, 4)], ["a", "b", "c", "d"])
    assert not check_certificate(tree, graph, 2, linear=True)
    assert check_certificate(tree, graph, 2, linear=False)


def test_never_raises_on_broken_expressions():
    broken = Union(Make(1, "a"), Make(2, "a"))
    check = check_certificate(broken, Graph.from_edges(2, []), 2)
    assert not check and "invalid" in check.reason


def test_same_graph_by_names():
    graph = make_Z(1)
    built = eager_expression(graph, [4, 3, 2, 1])
    assert same_graph_by_names(evaluate(built).graph, graph)
    assert same_graph_by_names(Graph.from_edges(1, [], ["q"]), graph) is None


def test_matching_names_require_matching_edges():
    # a-b-c built, a-c-b asked: isomorphic paths, different named edges
    path = Graph.from_edges(3, [(1, 2), (2, 3)], ["a", "b", "c"])
    built = eager_expression(path, [1, 2, 3])
    graph = Graph.from_edges(3, [(1, 3), (2, 3)], ["a", "b", "c"])
    check = check_certificate(built, graph, 3)
    assert not check, "a certificate with the wrong named edges was accepted"
    assert "same vertex names" in check.reason
