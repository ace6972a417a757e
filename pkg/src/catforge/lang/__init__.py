"""The .cat language: parsing, elaboration and canonical serialization."""
from .elaborate import Check, Workspace, elaborate
from .parser import parse_catfile, tokenize
from .serialize import category_decl, serialize
from .syntax import (
    CategorySpec,
    ElaborationError,
    LocatedError,
    ParseError,
    ResolutionError,
    Span,
)

__all__ = [
    "CategorySpec", "Check", "ElaborationError", "LocatedError", "ParseError",
    "ResolutionError", "Span", "Workspace", "category_decl", "elaborate",
    "parse_catfile", "serialize", "tokenize",
]
