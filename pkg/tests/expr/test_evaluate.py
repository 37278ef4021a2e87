import pytest

from cwkit import (
    AddEdges,
    InvalidExpressionError,
    Make,
    Relabel,
    Union,
    evaluate,
    map_labels,
)


def test_evaluate_path():
    expr = AddEdges(1, 2, Union(Make(1, "a"), Make(2, "b")))
    expr = Relabel(1, 3, expr)
    expr = AddEdges(2, 1, Union(expr, Make(1, "c")))
    value = evaluate(expr)

    graph = value.graph
    assert graph.names == ("a", "b", "c"), "ids follow the Make leaves"
    assert graph.edges() == [(1, 2), (2, 3)], f"edges {graph.edges()}"
    assert value.labels == {1: 3, 2: 2, 3: 1}
    assert value.label_of("a") == 3
    assert value.classes() == {1: [3], 2: [2], 3: [1]}


def test_join_between_absent_labels_is_a_no_op():
    value = evaluate(AddEdges(5, 6, Make(1, "a")))
    assert value.graph.num_edges == 0


def test_duplicate_names():
    with pytest.raises(InvalidExpressionError):
        evaluate(Union(Make(1, "a"), Make(2, "a")))


def test_relabelling_is_equivariant():
    inner = AddEdges(1, 3, Union(Make(1, "a"), Make(3, "b")))
    expr = AddEdges(1, 2, Union(inner, Make(2, "c")))
    renamed = map_labels(expr, {1: 3, 2: 1, 3: 2})
    before, after = evaluate(expr), evaluate(renamed)
    assert before.graph == after.graph
    renaming = {1: 3, 2: 1, 3: 2}
    assert {v: renaming[label] for v, label in before.labels.items()} == after.labels
