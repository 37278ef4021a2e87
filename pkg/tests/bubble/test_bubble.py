import pytest

from cwkit import (
    BubbleModel,
    bubble_to_graph,
    family_bubbles,
    make_J,
    make_S,
    make_Z,
    path_power,
    path_power_bubbles,
    render_bubbles,
)


@pytest.mark.parametrize("k, n", [(1, 5), (2, 5), (2, 8), (3, 14), (4, 17), (5, 30)])
def test_round_trip(k, n):
    graph, _ = path_power(k, n)
    assert bubble_to_graph(path_power_bubbles(k, n)) == graph, (
        f"the canonical model of the {k}-path power on {n} vertices "
        "builds another graph"
    )


def test_j5_model_has_eleven_columns():
    graph, _ = make_J(5)
    model = family_bubbles(graph, 5)
    assert graph.n == 55
    assert len(model.columns) == 11, f"got {len(model.columns)} columns"


def test_positions():
    model = path_power_bubbles(3, 7)
    assert model.position(1) == (1, 1)
    assert model.position(3) == (1, 3)
    assert model.position(4) == (2, 1)
    assert model.position(7) == (3, 1)
    with pytest.raises(KeyError):
        model.position(8)


def test_edge_rule_between_columns():
    # row 2 of column 1 sees rows 1 and 2 of column 2, but not row 3
    first = (frozenset({1}), frozenset({2}), frozenset({3}))
    second = (frozenset({4}), frozenset({5}), frozenset({6}))
    model = BubbleModel((first, second))
    graph = bubble_to_graph(model)
    assert graph.has_edge(2, 4) and graph.has_edge(2, 5)
    assert not graph.has_edge(2, 6)
    assert graph.has_edge(3, 6) and not graph.has_edge(1, 5)


@pytest.mark.parametrize(
    "columns",
    [
        ((frozenset({1}), frozenset({1, 2})),),
        ((frozenset({1}),), (frozenset(),)),
        ((frozenset({1, 3}),),),
    ],
)
def test_invalid_models(columns):
    with pytest.raises(ValueError):
        BubbleModel(columns)


def test_family_bubbles_rejects_non_path_powers():
    with pytest.raises(ValueError):
        family_bubbles(make_S(2), 2)


def test_render_marks_the_hole():
    graph, g = make_J(3)
    drawing = render_bubbles(family_bubbles(graph, 3), mark=graph.label(g))
    assert "[z_8]" in drawing, "z_8 is not highlighted"
    assert drawing.count("[") == 1
    lines = drawing.splitlines()
    assert len(lines) == 3 + 2, "one line per row plus two borders"
    assert len({len(line) for line in lines}) == 1, "ragged drawing"


def test_render_mark_by_id():
    graph = make_Z(1)
    drawing = render_bubbles(family_bubbles(graph, 1), mark=1)
    assert "[v_1]" in drawing and "[v_2]" not in drawing


def test_empty_model():
    model = BubbleModel(())
    assert model.n == 0
    assert bubble_to_graph(model).n == 0
    assert render_bubbles(model) == ""
