"""
parser.py
====================================
Text form of clique-width expressions::

    expr  ::= make | union | eta | rho
    make  ::= "v(" INT "," IDENT ")"
    union ::= "(" expr "+" expr ")"
    eta   ::= "eta(" INT "," INT "){" expr "}"
    rho   ::= "rho(" INT "->" INT "){" expr "}"

Whitespace is insignificant and ``#`` starts a comment that runs to the end of the line.
"""

import re

from ..exceptions import ExpressionSyntaxError, InvalidExpressionError
from .ast import AddEdges, Make, Relabel, Union, makes, to_text

__all__ = ["parse", "to_text", "write_expression", "load_expression", "save_expression"]

IDENT = r"[^\s(),{}#]+"

_TOKENS = re.compile(
    rf"""
    (?P<skip>\s+|\#[^\n]*)
  | (?P<make>v\(\s*(?P<make_label>\d+)\s*,\s*(?P<make_name>{IDENT})\s*\))
  | (?P<eta>eta\(\s*(?P<eta_i>\d+)\s*,\s*(?P<eta_j>\d+)\s*\)\s*\{{)
  | (?P<rho>rho\(\s*(?P<rho_i>\d+)\s*->\s*(?P<rho_j>\d+)\s*\)\s*\{{)
  | (?P<open>\()
  | (?P<plus>\+)
  | (?P<close>\))
  | (?P<brace>\}})
    """,
    re.VERBOSE,
)


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _tokenize(text):
    offset = 0
    while offset < len(text):
        match = _TOKENS.match(text, offset)
        if match is None:
            snippet = text[offset : offset + 12].split("\n")[0]
            raise ExpressionSyntaxError(
                f"unexpected input {snippet!r}", *_position(text, offset)
            )
        if match.lastgroup != "skip":
            yield match, offset
        offset = match.end()


def parse(text):
    """Parse an expression from its text form.

    :param text: the expression text
    :type text: str
    :raises ExpressionSyntaxError: on text that does not follow the grammar, or on label 0
        and equal labels in eta/rho, with the line and column of the offending token
    :raises InvalidExpressionError: if a vertex name is created twice
    :rtype: CwExpr
    """
    tokens = _tokenize(text)

    def fail(message, offset):
        raise ExpressionSyntaxError(message, *_position(text, offset))

    def take(expected):
        item = next(tokens, None)
        if item is None:
            fail(f"expected {expected!r}, found end of input", len(text))
        return item

    def build(factory, offset, *args):
        try:
            return factory(*args)
        except InvalidExpressionError as e:
            fail(str(e), offset)

    # frames: ["union", left-or-None, offset] | ["eta"/"rho", i, j, offset]
    stack = []
    result = None
    while True:
        if result is None:
            match, offset = take("expression")
            kind = match.lastgroup
            if kind == "make":
                label = int(match["make_label"])
                result = build(Make, offset, label, match["make_name"])
            elif kind == "open":
                stack.append(["union", None, offset])
                continue
            elif kind == "eta":
                stack.append(["eta", int(match["eta_i"]), int(match["eta_j"]), offset])
                continue
            elif kind == "rho":
                stack.append(["rho", int(match["rho_i"]), int(match["rho_j"]), offset])
                continue
            else:
                fail(f"expected an expression, found {match.group()!r}", offset)

        if not stack:
            break
        frame = stack[-1]
        if frame[0] == "union" and frame[1] is None:
            match, offset = take("+")
            if match.lastgroup != "plus":
                fail(f"expected '+', found {match.group()!r}", offset)
            frame[1] = result
            result = None
            continue

        closing = ")" if frame[0] == "union" else "}"
        match, offset = take(closing)
        if match.group() != closing:
            fail(f"expected {closing!r}, found {match.group()!r}", offset)
        stack.pop()
        if frame[0] == "union":
            result = Union(frame[1], result)
        elif frame[0] == "eta":
            result = build(AddEdges, frame[3], frame[1], frame[2], result)
        else:
            result = build(Relabel, frame[3], frame[1], frame[2], result)

    leftover = next(tokens, None)
    if leftover is not None:
        fail(f"unexpected {leftover[0].group()!r} after the expression", leftover[1])

    seen = set()
    for leaf in makes(result):
        if leaf.name in seen:
            raise InvalidExpressionError(f"vertex name {leaf.name!r} is created twice")
        seen.add(leaf.name)
    return result


def write_expression(expr):
    return to_text(expr) + "\n"


def load_expression(path):
    with open(path, encoding="utf-8") as f:
        return parse(f.read())


def save_expression(expr, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(write_expression(expr))
