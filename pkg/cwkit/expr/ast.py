"""
ast.py
====================================
Terms of the clique-width algebra and the traversals and measures defined on them.

Every function here walks expressions with an explicit stack: the linear expressions cwkit
produces nest once per vertex operation and easily exceed the interpreter's recursion limit.
"""

from dataclasses import dataclass

from ..exceptions import InvalidExpressionError

__all__ = [
    "CwExpr",
    "Make",
    "Union",
    "AddEdges",
    "Relabel",
    "pre_traversal",
    "post_traversal",
    "makes",
    "labels",
    "width",
    "is_linear",
    "map_labels",
    "to_text",
]


def _check_label(label):
    if not isinstance(label, int) or isinstance(label, bool) or label < 1:
        raise InvalidExpressionError(f"labels are positive integers, got {label!r}")


class CwExpr:
    """Base class of the four node kinds. Expressions compare and hash by their text form."""

    def operands(self):
        return ()

    def __eq__(self, other):
        if not isinstance(other, CwExpr):
            return NotImplemented
        return to_text(self) == to_text(other)

    def __hash__(self):
        return hash(to_text(self))

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"{type(self).__name__}<{to_text(self)}>"


@dataclass(frozen=True, eq=False, repr=False)
class Make(CwExpr):
    """A single vertex `name` with label `label`."""

    label: int
    name: str

    def __post_init__(self):
        _check_label(self.label)
        if not isinstance(self.name, str) or not self.name:
            raise InvalidExpressionError(
                f"vertex names are non-empty strings, got {self.name!r}"
            )


@dataclass(frozen=True, eq=False, repr=False)
class Union(CwExpr):
    """Disjoint union of two expressions."""

    left: CwExpr
    right: CwExpr

    def operands(self):
        return (self.left, self.right)


@dataclass(frozen=True, eq=False, repr=False)
class AddEdges(CwExpr):
    """Join every vertex labelled `i` to every vertex labelled `j`."""

    i: int
    j: int
    child: CwExpr

    def __post_init__(self):
        _check_label(self.i)
        _check_label(self.j)
        if self.i == self.j:
            raise InvalidExpressionError(
                f"eta needs two different labels, got {self.i} twice"
            )

    def operands(self):
        return (self.child,)


@dataclass(frozen=True, eq=False, repr=False)
class Relabel(CwExpr):
    """Move every vertex labelled `i` to label `j`."""

    i: int
    j: int
    child: CwExpr

    def __post_init__(self):
        _check_label(self.i)
        _check_label(self.j)
        if self.i == self.j:
            raise InvalidExpressionError(
                f"rho needs two different labels, got {self.i} twice"
            )

    def operands(self):
        return (self.child,)


def pre_traversal(expr):
    """Yields each node of `expr`, parent before children, left before right."""
    pending = [expr]
    while pending:
        node = pending.pop()
        yield node
        pending.extend(reversed(node.operands()))


def post_traversal(expr):
    """Yields each node of `expr`, children before parent, left before right."""
    stack = [(expr, list(reversed(expr.operands())))]
    while stack:
        node, ops = stack[-1]
        if ops:
            child = ops.pop()
            stack.append((child, list(reversed(child.operands()))))
        else:
            yield node
            stack.pop()


def makes(expr):
    """The Make leaves of `expr` from left to right."""
    return [node for node in pre_traversal(expr) if isinstance(node, Make)]


def labels(expr):
    """Every label that occurs anywhere in `expr`."""
    found = set()
    for node in pre_traversal(expr):
        if isinstance(node, Make):
            found.add(node.label)
        elif isinstance(node, (AddEdges, Relabel)):
            found.update((node.i, node.j))
    return found


def width(expr):
    """Number of distinct labels used by `expr`.

    :param expr: the expression
    :type expr: CwExpr
    :rtype: int
    """
    return len(labels(expr))


def is_linear(expr):
    """Whether the right operand of every union contains exactly one vertex.

    :param expr: the expression
    :type expr: CwExpr
    :rtype: bool
    """
    counts = {}
    for node in post_traversal(expr):
        if isinstance(node, Make):
            counts[id(node)] = 1
        elif isinstance(node, Union):
            if counts[id(node.right)] != 1:
                return False
            counts[id(node)] = counts[id(node.left)] + 1
        else:
            counts[id(node)] = counts[id(node.child)]
    return True


def _rebuild(expr, leaf, unary):
    # post-order rebuild; `leaf` maps a Make, `unary` maps an AddEdges/Relabel given its new child
    built = []
    for node in post_traversal(expr):
        if isinstance(node, Make):
            built.append(leaf(node))
        elif isinstance(node, Union):
            right = built.pop()
            built.append(Union(built.pop(), right))
        else:
            built.append(unary(node, built.pop()))
    return built.pop()


def map_labels(expr, mapping):
    """Apply a bijection of labels to every label in `expr`.

    :param expr: the expression
    :type expr: CwExpr
    :param mapping: old label -> new label; labels missing from it stay unchanged
    :type mapping: Dict[int, int]
    :rtype: CwExpr
    """

    def rename(label):
        return mapping.get(label, label)

    return _rebuild(
        expr,
        lambda node: Make(rename(node.label), node.name),
        lambda node, child: type(node)(rename(node.i), rename(node.j), child),
    )


def to_text(expr):
    """Canonical text form: ``v(1,a)``, ``(A + B)``, ``eta(i,j){A}``, ``rho(i->j){A}``.

    :param expr: the expression
    :type expr: CwExpr
    :rtype: str
    """
    parts = []
    for node in post_traversal(expr):
        if isinstance(node, Make):
            parts.append(f"v({node.label},{node.name})")
        elif isinstance(node, Union):
            right = parts.pop()
            parts.append(f"({parts.pop()} + {right})")
        elif isinstance(node, AddEdges):
            parts.append(f"eta({node.i},{node.j}){{{parts.pop()}}}")
        else:
            parts.append(f"rho({node.i}->{node.j}){{{parts.pop()}}}")
    return parts.pop()
