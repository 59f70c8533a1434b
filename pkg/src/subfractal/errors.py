"""Exception hierarchy shared by the whole engine.

Everything raised on bad input derives from :class:`FractalError`, so the
CLI and the HTTP service can map "domain error" uniformly (exit code 2,
HTTP 4xx) without enumerating causes.
"""

from __future__ import annotations


class FractalError(Exception):
    """Base class for all domain errors."""


class ParseError(FractalError):
    """Syntax error in the class DSL or in a type expression.

    Carries the offset into the source text and the offending token so
    callers can point at the exact position.
    """

    def __init__(self, message: str, pos: int, token: str = ""):
        super().__init__(f"{message} at offset {pos}" + (f" (near {token!r})" if token else ""))
        self.pos = pos
        self.token = token


class DeclError(FractalError):
    """Semantic error in a class declaration: duplicate class, unknown or
    generic superclass, cyclic extends, ill-formed bound."""


class TypeTermError(FractalError):
    """Semantic error in a type expression: unknown class, arity mismatch,
    bound violation, inverted interval."""


class UnknownClassError(TypeTermError):
    """A type expression or query names a class that is not in the table."""


class GraphError(FractalError):
    """Bad graph operation input: cyclic relation, inverted window,
    unknown export format."""


class BudgetError(FractalError):
    """A construction step would exceed the node or level budget."""

    def __init__(self, message: str, largest_level: int):
        super().__init__(message)
        self.largest_level = largest_level
