"""Syntax tree for .cat files.

Spans are excluded from equality, so two trees compare equal when they
declare the same things regardless of layout.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import CatforgeError


@dataclass(frozen=True)
class Span:
    line: int
    column: int
    length: int = 1

    def __str__(self):
        return f"{self.line}:{self.column}"


NOWHERE = Span(0, 0, 0)


@dataclass(frozen=True)
class Name:
    text: str
    span: Span = field(default=NOWHERE, compare=False)

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class ArrowDecl:
    name: Name
    dom: Name
    cod: Name


@dataclass(frozen=True)
class ComposeDecl:
    g: Name
    f: Name
    result: Name


@dataclass(frozen=True)
class CategoryDecl:
    name: Name
    objects: tuple = ()
    arrows: tuple = ()
    composites: tuple = ()
    span: Span = field(default=NOWHERE, compare=False)


@dataclass(frozen=True)
class NodeDecl:
    name: Name
    obj: Name


@dataclass(frozen=True)
class EdgeDecl:
    arrow: Name
    source: Name
    target: Name


@dataclass(frozen=True)
class DiagramDecl:
    name: Name
    category: Name
    nodes: tuple = ()
    edges: tuple = ()
    span: Span = field(default=NOWHERE, compare=False)


@dataclass(frozen=True)
class MapDecl:
    source: Name
    target: Name


@dataclass(frozen=True)
class FunctorDecl:
    name: Name
    source: Name
    target: Name
    objects: tuple = ()
    arrows: tuple = ()
    span: Span = field(default=NOWHERE, compare=False)


@dataclass(frozen=True)
class FunctorExpr:
    """``G.F`` is stored outermost first: ``parts = (G, F)``."""

    parts: tuple

    @property
    def span(self) -> Span:
        return self.parts[0].span

    def __str__(self):
        return ".".join(p.text for p in self.parts)


@dataclass(frozen=True)
class ComponentDecl:
    obj: Name
    arrow: Name


@dataclass(frozen=True)
class NatDecl:
    name: Name
    source: FunctorExpr
    target: FunctorExpr
    components: tuple = ()
    span: Span = field(default=NOWHERE, compare=False)


@dataclass(frozen=True)
class AdjunctionDecl:
    name: Name
    left: Name
    right: Name
    unit: Name
    counit: Name
    span: Span = field(default=NOWHERE, compare=False)


@dataclass(frozen=True)
class CategorySpec:
    decls: tuple = ()

    def of_kind(self, kind) -> list:
        return [d for d in self.decls if isinstance(d, kind)]


class LocatedError(CatforgeError):
    """An error tied to a position in the source text."""

    def __init__(self, message, line, column):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


class ParseError(LocatedError):
    def __init__(self, message, line, column, token, expected=()):
        self.token = token
        self.expected = tuple(sorted(expected))
        super().__init__(message, line, column)


class ResolutionError(LocatedError):
    """A name that does not refer to anything declared."""


class ElaborationError(LocatedError):
    """Well-formed text that cannot be turned into a structure."""
