import pytest

from cwkit import (
    ExpressionSyntaxError,
    InvalidExpressionError,
    eager_expression,
    load_expression,
    make_Z,
    parse,
    save_expression,
    to_text,
)


def test_parse_with_whitespace_and_comments():
    text = """
    # the path a - b - c
    eta(2, 1) {
        ( rho(1 -> 3){ eta(1,2){ (v(1, a) + v(2,b)) } }
          + v(1,c) )
    }
    """
    expr = parse(text)
    expected = "eta(2,1){(rho(1->3){eta(1,2){(v(1,a) + v(2,b))}} + v(1,c))}"
    assert to_text(expr) == expected


def test_names_may_carry_primes_and_carets():
    expr = parse("(v(1,x'_5) + v(2,w^+))")
    assert to_text(expr) == "(v(1,x'_5) + v(2,w^+))"


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("v(1,a", 1, 1),
        ("(v(1,a) v(2,b))", 1, 9),
        ("(v(1,a) + v(2,b)", 1, 17),
        ("v(0,a)", 1, 1),
        ("eta(1,1){v(1,a)}", 1, 1),
        ("v(1,a)\n)", 2, 1),
        ("rho(1->2){v(1,a))", 1, 17),
        ("", 1, 1),
    ],
)
def test_syntax_errors(text, line, column):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column), (
        f"error at {info.value.line}:{info.value.column}, expected {line}:{column}"
    )


def test_duplicate_names_are_not_syntax_errors():
    with pytest.raises(InvalidExpressionError) as info:
        parse("(v(1,a) + v(2,a))")
    assert not isinstance(info.value, ExpressionSyntaxError)


def test_file_round_trip(tmp_path):
    graph = make_Z(2)
    expr = eager_expression(graph, list(graph.vertices()))
    path = tmp_path / "z2.expr"
    save_expression(expr, str(path))
    assert load_expression(str(path)) == expr
