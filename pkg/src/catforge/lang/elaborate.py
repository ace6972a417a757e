"""Turn a parsed spec into categories, diagrams, functors and the rest.

Structural problems (unknown names, non-total maps, ill-typed components,
incomplete composition tables) raise located errors.  Law violations do
not: they are collected in :attr:`Workspace.checks` with the span of the
offending declaration.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..adjunction import AdjointSituation, verify_adjoint_situation
from ..category import FinCategory, LawReport, build_category, validate_category
from ..diagram import Diagram, EdgeTypingError, build_diagram
from ..errors import IncompleteTableError, StructureError
from ..functor import (
    Functor,
    NaturalTransformation,
    compose_functors,
    identity_functor,
    validate_functor,
    validate_natural_transformation,
)
from .syntax import (
    AdjunctionDecl,
    CategoryDecl,
    CategorySpec,
    DiagramDecl,
    ElaborationError,
    FunctorDecl,
    FunctorExpr,
    Name,
    NatDecl,
    ResolutionError,
    Span,
)


@dataclass(frozen=True)
class Check:
    kind: str          # category, functor, nat or adjunction
    name: str
    span: Span
    report: LawReport


@dataclass
class Workspace:
    spec: CategorySpec
    categories: dict = field(default_factory=dict)
    diagrams: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)
    nats: dict = field(default_factory=dict)
    adjunctions: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def checks_of(self, kind) -> list:
        return [c for c in self.checks if c.kind == kind]


def _err(message, where) -> ElaborationError:
    span = where.span if isinstance(where, (Name, FunctorExpr)) else where
    return ElaborationError(message, span.line, span.column)


def _unknown(what, name: Name) -> ResolutionError:
    return ResolutionError(f"unknown {what} {name.text!r}", name.span.line, name.span.column)


def _lookup(table, what, name: Name):
    if name.text not in table:
        raise _unknown(what, name)
    return table[name.text]


def _register(table, decl, what):
    if decl.name.text in table:
        raise _err(f"duplicate {what} {decl.name.text!r}", decl.name)


def _object(C: FinCategory, name: Name, where="object"):
    try:
        return C.object_named(name.text)
    except (KeyError, ValueError, StructureError):
        raise _unknown(where, name) from None


def _arrow(C: FinCategory, name: Name):
    try:
        return C.arrow_named(name.text)
    except (KeyError, ValueError, StructureError):
        raise _unknown("arrow", name) from None


def _category(d: CategoryDecl) -> FinCategory:
    objects = {}
    for o in d.objects:
        if o.text in objects:
            raise _err(f"duplicate object {o.text!r}", o)
        objects[o.text] = o
    arrows = {f"id_{o}": o for o in objects}
    for a in d.arrows:
        for end in (a.dom, a.cod):
            if end.text not in objects:
                raise _unknown("object", end)
        if a.name.text in arrows:
            raise _err(f"duplicate arrow {a.name.text!r}", a.name)
        arrows[a.name.text] = a.name
    composites = {}
    for c in d.composites:
        for n in (c.g, c.f, c.result):
            if n.text not in arrows:
                raise _unknown("arrow", n)
        key = (c.g.text, c.f.text)
        if key in composites:
            raise _err(f"composite {c.g} {c.f} bound twice", c.g)
        composites[key] = c.result.text
    try:
        return build_category(list(objects), [(a.name.text, a.dom.text, a.cod.text) for a in d.arrows],
                              composites)
    except IncompleteTableError as e:
        pairs = ", ".join(f"({g}, {f})" for g, f in e.missing)
        raise _err(f"category {d.name} leaves composites unspecified: {pairs}", d.span) from None


def _diagram(ws: Workspace, d: DiagramDecl) -> Diagram:
    C = _lookup(ws.categories, "category", d.category)
    nodes, seen = [], set()
    for n in d.nodes:
        if n.name.text in seen:
            raise _err(f"duplicate node {n.name.text!r}", n.name)
        seen.add(n.name.text)
        nodes.append((n.name.text, _object(C, n.obj)))
    edges = []
    for e in d.edges:
        for end in (e.source, e.target):
            if end.text not in seen:
                raise _unknown("node", end)
        edges.append((e.source.text, e.target.text, _arrow(C, e.arrow)))
    try:
        return build_diagram(C, nodes, edges)
    except EdgeTypingError as err:
        raise _err(str(err), d.edges[err.index].arrow) from None


def _functor(ws: Workspace, d: FunctorDecl) -> Functor:
    C = _lookup(ws.categories, "category", d.source)
    D = _lookup(ws.categories, "category", d.target)
    om = [None] * C.n_objects
    for m in d.objects:
        X = _object(C, m.source)
        if om[X] is not None:
            raise _err(f"object {m.source.text!r} mapped twice", m.source)
        om[X] = _object(D, m.target)
    missing = [C.objects[X] for X, v in enumerate(om) if v is None]
    if missing:
        raise _err(f"functor {d.name} does not map objects {', '.join(missing)}", d.span)
    am = [None] * C.n_arrows
    for m in d.arrows:
        f = _arrow(C, m.source)
        if am[f] is not None:
            raise _err(f"arrow {m.source.text!r} mapped twice", m.source)
        am[f] = _arrow(D, m.target)
    for X in range(C.n_objects):
        if am[C.identity(X)] is None:
            am[C.identity(X)] = D.identity(om[X])
    missing = [C.name(f) for f, v in enumerate(am) if v is None]
    if missing:
        raise _err(f"functor {d.name} does not map arrows {', '.join(missing)}", d.span)
    return Functor(C, D, tuple(om), tuple(am))


def _functor_expr(ws: Workspace, e: FunctorExpr) -> Functor:
    found = []
    for p in e.parts:
        if p.text in ws.functors:
            found.append(ws.functors[p.text])
        elif p.text.startswith("Id_") and p.text[3:] in ws.categories:
            found.append(identity_functor(ws.categories[p.text[3:]]))
        else:
            raise _unknown("functor", p)
    F = found[-1]
    for G, part in zip(reversed(found[:-1]), reversed(e.parts[:-1])):
        try:
            F = compose_functors(G, F)
        except StructureError as err:
            raise _err(f"cannot form {e}: {err}", part) from None
    return F


def _nat(ws: Workspace, d: NatDecl) -> NaturalTransformation:
    F, G = _functor_expr(ws, d.source), _functor_expr(ws, d.target)
    if F.source is not G.source or F.target is not G.target:
        raise _err(f"{d.source} and {d.target} do not share source and target", d.target)
    C, D = F.source, F.target
    comps = [None] * C.n_objects
    for c in d.components:
        X = _object(C, c.obj)
        if comps[X] is not None:
            raise _err(f"component at {c.obj.text!r} given twice", c.obj)
        f = _arrow(D, c.arrow)
        if D.dom(f) != F.obj(X) or D.cod(f) != G.obj(X):
            raise _err(f"component {c.arrow.text} at {c.obj.text} is {D.describe(f)}, expected "
                       f"{D.objects[F.obj(X)]} -> {D.objects[G.obj(X)]}", c.arrow)
        comps[X] = f
    missing = [C.objects[X] for X, v in enumerate(comps) if v is None]
    if missing:
        raise _err(f"nat {d.name} has no component at {', '.join(missing)}", d.span)
    return NaturalTransformation(F, G, tuple(comps))


def _adjunction(ws: Workspace, d: AdjunctionDecl) -> AdjointSituation:
    S = AdjointSituation(_lookup(ws.functors, "functor", d.left), _lookup(ws.functors, "functor", d.right),
                         _lookup(ws.nats, "nat", d.unit), _lookup(ws.nats, "nat", d.counit))
    try:
        report = verify_adjoint_situation(S)
    except StructureError as err:
        raise _err(f"adjunction {d.name}: {err}", d.span) from None
    ws.checks.append(Check("adjunction", d.name.text, d.span, report))
    return S


def elaborate(spec: CategorySpec) -> Workspace:
    """Build every declaration; categories first, then functors, diagrams, nats, adjunctions."""
    ws = Workspace(spec)
    for d in spec.of_kind(CategoryDecl):
        _register(ws.categories, d, "category")
        ws.categories[d.name.text] = C = _category(d)
        ws.checks.append(Check("category", d.name.text, d.span, validate_category(C)))
    for d in spec.of_kind(FunctorDecl):
        _register(ws.functors, d, "functor")
        ws.functors[d.name.text] = F = _functor(ws, d)
        ws.checks.append(Check("functor", d.name.text, d.span, validate_functor(F)))
    for d in spec.of_kind(DiagramDecl):
        _register(ws.diagrams, d, "diagram")
        ws.diagrams[d.name.text] = _diagram(ws, d)
    for d in spec.of_kind(NatDecl):
        _register(ws.nats, d, "nat")
        ws.nats[d.name.text] = t = _nat(ws, d)
        ws.checks.append(Check("nat", d.name.text, d.span, validate_natural_transformation(t)))
    for d in spec.of_kind(AdjunctionDecl):
        _register(ws.adjunctions, d, "adjunction")
        ws.adjunctions[d.name.text] = _adjunction(ws, d)
    return ws
