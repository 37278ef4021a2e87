import pytest

from cwkit import (
    Graph,
    GraphFormatError,
    load_graph,
    make_S,
    read_graph,
    save_graph,
    write_graph,
)


def test_write_is_canonical():
    graph = Graph.from_edges(3, [(3, 1), (1, 2)], ["a", None, "c"])
    text = write_graph(graph)
    assert text == "g 3 2\nv 1 a\nv 3 c\ne 1 2\ne 1 3\n", f"unexpected text {text!r}"


def test_read_ignores_comments_and_blank_lines():
    text = "# a path\ng 3 2\n\nv 2 mid  # the middle\ne 1 2\ne 2 3\n"
    graph = read_graph(text)
    assert graph.edges() == [(1, 2), (2, 3)]
    assert graph.names == (None, "mid", None)


def test_file_round_trip(tmp_path):
    graph = make_S(2)
    path = tmp_path / "s2.graph"
    save_graph(graph, str(path))
    assert load_graph(str(path)) == graph, "S_2 changed on the way through a file"


@pytest.mark.parametrize(
    "text, line",
    [
        ("", None),
        ("h 2 1\n", 1),
        ("g 2 x\n", 1),
        ("g 3 1\ne 1 1\n", 2),
        ("g 3 1\ne 1 4\n", 2),
        ("g 3 1\ne 2 1\n", 2),
        ("g 3 2\ne 1 2\ne 1 2\n", 3),
        ("g 3 2\ne 1 2\n", 2),
        ("g 2 0\nv 1 a\nv 2 a\n", 3),
        ("g 2 1\ne 1 2\nv 1 a\n", 3),
        ("g 2 0\nq 1\n", 2),
    ],
)
def test_malformed_files(text, line):
    with pytest.raises(GraphFormatError) as info:
        read_graph(text)
    assert (
        info.value.line == line
    ), f"error reported at line {info.value.line}, not {line}"
