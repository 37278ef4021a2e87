"""
exceptions.py
====================================
Errors raised by cwkit.
"""

__all__ = [
    "GraphFormatError",
    "ExpressionSyntaxError",
    "InvalidExpressionError",
    "InvalidParameterError",
    "InvalidVertexError",
    "BudgetExceeded",
]


class GraphFormatError(ValueError):
    """A graph file could not be read.

    :param message: what is wrong with the file
    :type message: str
    :param line: 1-based line number of the offending line, if known
    :type line: int, optional
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ExpressionSyntaxError(ValueError):
    """Expression text does not follow the grammar."""

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class InvalidExpressionError(ValueError):
    """Expression is well-formed text but violates the algebra's rules."""


class InvalidParameterError(ValueError):
    """Family, map or claim parameters outside their admissible range."""


class InvalidVertexError(ValueError):
    """Vertex id or name that does not exist in the graph."""


class BudgetExceeded(Exception):
    """A search gave up before it could answer."""
