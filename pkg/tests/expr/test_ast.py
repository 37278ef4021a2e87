import pytest

from cwkit import (
    AddEdges,
    InvalidExpressionError,
    Make,
    Relabel,
    Union,
    is_linear,
    makes,
    map_labels,
    to_text,
    width,
)


def _p4_linear():
    # a - b - c - d built left to right with three labels
    expr = AddEdges(1, 2, Union(Make(1, "a"), Make(2, "b")))
    expr = Relabel(1, 3, expr)
    expr = AddEdges(2, 1, Union(expr, Make(1, "c")))
    expr = Relabel(2, 3, expr)
    expr = AddEdges(1, 2, Union(expr, Make(2, "d")))
    return expr


def test_text_form():
    expr = Relabel(1, 2, AddEdges(1, 2, Union(Make(1, "a"), Make(2, "b"))))
    assert to_text(expr) == "rho(1->2){eta(1,2){(v(1,a) + v(2,b))}}"
    assert str(expr) == to_text(expr)


def test_equality_by_text():
    assert Union(Make(1, "a"), Make(2, "b")) == Union(Make(1, "a"), Make(2, "b"))
    assert Make(1, "a") != Make(2, "a")
    assert len({Make(1, "a"), Make(1, "a")}) == 1


@pytest.mark.parametrize(
    "factory",
    [
        lambda: Make(0, "a"),
        lambda: Make(1, ""),
        lambda: AddEdges(2, 2, Make(1, "a")),
        lambda: Relabel(1, 1, Make(1, "a")),
        lambda: Relabel(True, 2, Make(1, "a")),
    ],
)
def test_invalid_nodes(factory):
    with pytest.raises(InvalidExpressionError):
        factory()


def test_width_counts_distinct_labels():
    expr = _p4_linear()
    assert width(expr) == 3, f"width {width(expr)}"
    # large label values do not matter, only how many there are
    assert width(map_labels(expr, {1: 10, 2: 20, 3: 30})) == 3


def test_linearity():
    assert is_linear(_p4_linear())
    tree = Union(
        AddEdges(1, 2, Union(Make(1, "a"), Make(2, "b"))),
        AddEdges(1, 2, Union(Make(1, "c"), Make(2, "d"))),
    )
    assert not is_linear(tree)
    assert is_linear(Make(1, "a"))


def test_makes_in_order():
    assert [leaf.name for leaf in makes(_p4_linear())] == ["a", "b", "c", "d"]


def test_deep_expressions_do_not_recurse():
    expr = Make(1, "x0")
    for i in range(1, 5000):
        expr = Relabel(2, 1, AddEdges(1, 2, Union(expr, Make(2, f"x{i}"))))
    assert is_linear(expr)
    assert width(expr) == 2
    assert len(to_text(expr)) > 5000
