"""Canonical text for a parsed spec; re-parsing the output gives an equal tree."""
from __future__ import annotations

from .syntax import (
    AdjunctionDecl,
    ArrowDecl,
    CategoryDecl,
    CategorySpec,
    ComposeDecl,
    DiagramDecl,
    FunctorDecl,
    Name,
    NatDecl,
)


def _category(d: CategoryDecl) -> list:
    lines = [f"category {d.name} {{"]
    if d.objects:
        lines.append("  objects " + " ".join(o.text for o in d.objects))
    lines += [f"  arrow {a.name} : {a.dom} -> {a.cod}" for a in d.arrows]
    lines += [f"  compose {c.g} {c.f} = {c.result}" for c in d.composites]
    return lines + ["}"]


def _diagram(d: DiagramDecl) -> list:
    lines = [f"diagram {d.name} over {d.category} {{"]
    lines += [f"  node {n.name} : {n.obj}" for n in d.nodes]
    lines += [f"  edge {e.arrow} : {e.source} -> {e.target}" for e in d.edges]
    return lines + ["}"]


def _functor(d: FunctorDecl) -> list:
    lines = [f"functor {d.name} : {d.source} -> {d.target} {{"]
    lines += [f"  obj {m.source} => {m.target}" for m in d.objects]
    lines += [f"  arr {m.source} => {m.target}" for m in d.arrows]
    return lines + ["}"]


def _nat(d: NatDecl) -> list:
    lines = [f"nat {d.name} : {d.source} => {d.target} {{"]
    lines += [f"  at {c.obj} = {c.arrow}" for c in d.components]
    return lines + ["}"]


def _adjunction(d: AdjunctionDecl) -> list:
    return [f"adjunction {d.name} {{",
            f"  left {d.left}", f"  right {d.right}",
            f"  unit {d.unit}", f"  counit {d.counit}", "}"]


_WRITERS = {CategoryDecl: _category, DiagramDecl: _diagram, FunctorDecl: _functor,
            NatDecl: _nat, AdjunctionDecl: _adjunction}


def serialize(spec: CategorySpec) -> str:
    blocks = ["\n".join(_WRITERS[type(d)](d)) for d in spec.decls]
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def category_decl(C, name: str) -> CategoryDecl:
    """A declaration for an existing category.

    Identity arrows and composites with an identity factor stay implicit;
    a composite equal to an identity is written ``id_<object>``.
    """
    ids = set(C.identities)

    def label(f):
        return f"id_{C.objects[C.dom(f)]}" if f in ids else C.name(f)

    arrows = tuple(ArrowDecl(Name(C.name(f)), Name(C.objects[C.dom(f)]), Name(C.objects[C.cod(f)]))
                   for f in range(C.n_arrows) if f not in ids)
    comps = []
    for f in range(C.n_arrows):
        if f in ids:
            continue
        for g in C.outgoing(C.cod(f)):
            if g not in ids:
                comps.append(ComposeDecl(Name(C.name(g)), Name(C.name(f)), Name(label(C.comp[(g, f)]))))
    return CategoryDecl(Name(name), tuple(Name(o) for o in C.objects), arrows, tuple(comps))
