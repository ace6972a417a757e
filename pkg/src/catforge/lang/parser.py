"""Tokenizer and recursive-descent parser for .cat files.

Clauses inside a block may come in any order and repeat; ``#`` starts a
comment running to the end of the line.  Keywords are contextual: a word
such as ``unit`` is a keyword only where a clause or declaration starts,
so it remains usable as a name elsewhere.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .syntax import (
    AdjunctionDecl,
    ArrowDecl,
    CategoryDecl,
    CategorySpec,
    ComponentDecl,
    ComposeDecl,
    DiagramDecl,
    EdgeDecl,
    FunctorDecl,
    FunctorExpr,
    MapDecl,
    Name,
    NatDecl,
    NodeDecl,
    ParseError,
    Span,
)

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<sym>->|=>|[{}:=.])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str      # "name", "sym" or "eof"
    text: str
    span: Span

    def describe(self) -> str:
        return "end of input" if self.kind == "eof" else repr(self.text)


def tokenize(text: str) -> list:
    out, line, start, pos = [], 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - start + 1
        if m is None:
            ch = text[pos]
            raise ParseError(f"unexpected character {ch!r}", line, col, ch, ("name", "symbol"))
        kind = m.lastgroup
        tok = m.group()
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind == "name":
            out.append(Token("name", tok, Span(line, col, len(tok))))
        elif kind == "sym":
            out.append(Token("sym", tok, Span(line, col, len(tok))))
        pos = m.end()
    out.append(Token("eof", "", Span(line, pos - start + 1, 0)))
    return out


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected):
        t = self.tok
        exp = ", ".join(sorted(expected))
        raise ParseError(f"expected {exp} but found {t.describe()}", t.span.line, t.span.column,
                         t.text, expected)

    def at(self, text) -> bool:
        return self.tok.kind in ("sym", "name") and self.tok.text == text

    def expect(self, text) -> Token:
        if not self.at(text):
            self.fail({repr(text)})
        t = self.tok
        self.i += 1
        return t

    def name(self) -> Name:
        t = self.tok
        if t.kind != "name":
            self.fail({"name"})
        self.i += 1
        return Name(t.text, t.span)

    def block(self, clauses: dict):
        """Parse ``{ clause* }`` dispatching on each clause's keyword."""
        self.expect("{")
        while not self.at("}"):
            t = self.tok
            if t.kind == "name" and t.text in clauses:
                self.i += 1
                clauses[t.text]()
            else:
                self.fail({repr(k) for k in clauses} | {"'}'"})
        self.expect("}")

    # -- declarations ----------------------------------------------------

    def parse(self) -> CategorySpec:
        decls = []
        starters = {"category": self.category, "diagram": self.diagram, "functor": self.functor,
                    "nat": self.nat, "adjunction": self.adjunction}
        while self.tok.kind != "eof":
            t = self.tok
            if t.kind == "name" and t.text in starters:
                self.i += 1
                decls.append(starters[t.text](t.span))
            else:
                self.fail({repr(k) for k in starters})
        return CategorySpec(tuple(decls))

    def category(self, span):
        name = self.name()
        objects, arrows, comps = [], [], []

        def objs():
            objects.append(self.name())
            while self.tok.kind == "name" and self.tok.text not in clauses:
                objects.append(self.name())

        def arrow():
            a = self.name()
            self.expect(":")
            d = self.name()
            self.expect("->")
            arrows.append(ArrowDecl(a, d, self.name()))

        def compose():
            g, f = self.name(), self.name()
            self.expect("=")
            comps.append(ComposeDecl(g, f, self.name()))

        clauses = {"objects": objs, "arrow": arrow, "compose": compose}
        self.block(clauses)
        return CategoryDecl(name, tuple(objects), tuple(arrows), tuple(comps), span)

    def diagram(self, span):
        name = self.name()
        self.expect("over")
        cat = self.name()
        nodes, edges = [], []

        def node():
            n = self.name()
            self.expect(":")
            nodes.append(NodeDecl(n, self.name()))

        def edge():
            a = self.name()
            self.expect(":")
            s = self.name()
            self.expect("->")
            edges.append(EdgeDecl(a, s, self.name()))

        self.block({"node": node, "edge": edge})
        return DiagramDecl(name, cat, tuple(nodes), tuple(edges), span)

    def functor(self, span):
        name = self.name()
        self.expect(":")
        src = self.name()
        self.expect("->")
        dst = self.name()
        objs, arrs = [], []

        def mapping(into):
            def clause():
                a = self.name()
                self.expect("=>")
                into.append(MapDecl(a, self.name()))
            return clause

        self.block({"obj": mapping(objs), "arr": mapping(arrs)})
        return FunctorDecl(name, src, dst, tuple(objs), tuple(arrs), span)

    def functor_expr(self) -> FunctorExpr:
        parts = [self.name()]
        while self.at("."):
            self.i += 1
            parts.append(self.name())
        return FunctorExpr(tuple(parts))

    def nat(self, span):
        name = self.name()
        self.expect(":")
        F = self.functor_expr()
        self.expect("=>")
        G = self.functor_expr()
        comps = []

        def at():
            X = self.name()
            self.expect("=")
            comps.append(ComponentDecl(X, self.name()))

        self.block({"at": at})
        return NatDecl(name, F, G, tuple(comps), span)

    def adjunction(self, span):
        name = self.name()
        parts = {}

        def field(key):
            def clause():
                if key in parts:
                    t = self.tokens[self.i - 1]
                    raise ParseError(f"duplicate '{key}' clause", t.span.line, t.span.column, t.text)
                parts[key] = self.name()
            return clause

        self.block({k: field(k) for k in ("left", "right", "unit", "counit")})
        missing = [k for k in ("left", "right", "unit", "counit") if k not in parts]
        if missing:
            t = self.tokens[self.i - 1]
            raise ParseError(f"adjunction {name} lacks {', '.join(missing)}", t.span.line, t.span.column,
                             t.text, {repr(k) for k in missing})
        return AdjunctionDecl(name, parts["left"], parts["right"], parts["unit"], parts["counit"], span)


def parse_catfile(text: str) -> CategorySpec:
    """Parse .cat source; the first syntax error raises :class:`ParseError`."""
    return _Parser(text).parse()
