"""Functors, natural transformations and finite functor categories."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import caps
from .category import (
    ArrowId,
    ArrowRecord,
    FinCategory,
    LawReport,
    ObjectId,
    Violation,
)
from .errors import CapExceeded, MissingStructureError, PreconditionError, StructureError
from .universal import canonical_exponential, canonical_product, curry, mediating_arrow


@dataclass(frozen=True)
class Functor:
    source: FinCategory
    target: FinCategory
    object_map: tuple
    arrow_map: tuple

    def __post_init__(self):
        object.__setattr__(self, "object_map", tuple(self.object_map))
        object.__setattr__(self, "arrow_map", tuple(self.arrow_map))

    def obj(self, A: ObjectId) -> ObjectId:
        return self.object_map[A]

    def arr(self, f: ArrowId) -> ArrowId:
        return self.arrow_map[f]

    def __repr__(self):
        return f"Functor(object_map={self.object_map}, arrow_map={self.arrow_map})"


@dataclass(frozen=True)
class NaturalTransformation:
    """``components[A]: F(A) -> G(A)`` for every object A of the source."""

    F: Functor
    G: Functor
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def __getitem__(self, A: ObjectId) -> ArrowId:
        return self.components[A]


def _check_totality(F: Functor):
    C, D = F.source, F.target
    if len(F.object_map) != C.n_objects or len(F.arrow_map) != C.n_arrows:
        raise StructureError(
            f"functor maps are not total: {len(F.object_map)}/{C.n_objects} objects, "
            f"{len(F.arrow_map)}/{C.n_arrows} arrows")
    if any(not 0 <= X < D.n_objects for X in F.object_map):
        raise StructureError("functor object map leaves the target category")
    if any(not 0 <= f < D.n_arrows for f in F.arrow_map):
        raise StructureError("functor arrow map leaves the target category")


def validate_functor(F: Functor) -> LawReport:
    """Typing, identity preservation and ``F(g . f) = Fg . Ff``, exhaustively."""
    _check_totality(F)
    C, D = F.source, F.target
    om, am = F.object_map, F.arrow_map
    out = []
    for f, a in enumerate(C.arrows):
        Ff = am[f]
        if D.dom(Ff) != om[a.dom] or D.cod(Ff) != om[a.cod]:
            out.append(Violation((f,), "functor-typing", (Ff,)))
    for A in range(C.n_objects):
        if am[C.identity(A)] != D.identity(om[A]):
            out.append(Violation((C.identity(A),), "functor-identity", (am[C.identity(A)], D.identity(om[A]))))
    bad = {v.witness[0] for v in out if v.law == "functor-typing"}
    for (g, f), h in C.comp.items():
        if g in bad or f in bad:
            continue
        lhs, rhs = am[h], D.comp.get((am[g], am[f]))
        if lhs != rhs:
            out.append(Violation((g, f), "functor-composition", (lhs, rhs)))
    return LawReport(tuple(out))


def identity_functor(C: FinCategory) -> Functor:
    return Functor(C, C, tuple(range(C.n_objects)), tuple(range(C.n_arrows)))


def constant_functor(C: FinCategory, D: FinCategory, B: ObjectId) -> Functor:
    if not 0 <= B < D.n_objects:
        raise StructureError(f"object {B} outside the target category")
    return Functor(C, D, (B,) * C.n_objects, (D.identity(B),) * C.n_arrows)


def compose_functors(G: Functor, F: Functor) -> Functor:
    """``G . F``: apply F first."""
    if F.target is not G.source:
        raise StructureError("functors are not composable: target of F is not the source of G")
    return Functor(F.source, G.target,
                   tuple(G.object_map[X] for X in F.object_map),
                   tuple(G.arrow_map[f] for f in F.arrow_map))


def product_functor(C: FinCategory, Y: ObjectId, *, test_objects=None) -> Functor:
    """``- x Y``: X goes to the canonical product apex, f to ``f x id_Y``.

    The arrow map is the mediating arrow ``<f . chi1, chi2>``.
    """
    cones = []
    for X in range(C.n_objects):
        cone = canonical_product(C, X, Y, test_objects=test_objects)
        if cone is None:
            raise MissingStructureError(f"no product {C.objects[X]} x {C.objects[Y]}")
        cones.append(cone)
    arrows = []
    for f, a in enumerate(C.arrows):
        src, dst = cones[a.dom], cones[a.cod]
        arrows.append(mediating_arrow(C, dst, C.compose(f, src.chi1), src.chi2))
    return Functor(C, C, tuple(c.apex for c in cones), tuple(arrows))


def exponential_functor(C: FinCategory, Y: ObjectId, *, test_objects=None) -> Functor:
    """``(-)^Y``: X goes to the canonical ``X^Y``, f to ``curry(f . eval)``."""
    exps = []
    for X in range(C.n_objects):
        exp = canonical_exponential(C, Y, X, test_objects=test_objects)
        if exp is None:
            raise MissingStructureError(f"no exponential {C.objects[X]}^{C.objects[Y]}")
        exps.append(exp)
    arrows = []
    for f, a in enumerate(C.arrows):
        src, dst = exps[a.dom], exps[a.cod]
        h = C.compose(f, src.eval)
        arrows.append(curry(C, dst, src.exp_object, h, test_objects=test_objects))
    return Functor(C, C, tuple(e.exp_object for e in exps), tuple(arrows))


# -- natural transformations --------------------------------------------------

def _same_functor_pair(F, G):
    return F.source is G.source and F.target is G.target


def validate_natural_transformation(t: NaturalTransformation) -> LawReport:
    """Every square ``G f . t_A = t_B . F f`` must commute."""
    F, G = t.F, t.G
    if not _same_functor_pair(F, G):
        raise StructureError("natural transformation between functors with different source/target")
    C, D = F.source, F.target
    if len(t.components) != C.n_objects:
        raise StructureError(f"{len(t.components)} components for {C.n_objects} objects")
    for A, c in enumerate(t.components):
        if not 0 <= c < D.n_arrows or D.dom(c) != F.obj(A) or D.cod(c) != G.obj(A):
            raise StructureError(f"component at object {C.objects[A]!r} is not typed F(A) -> G(A)")
    out = []
    for f, a in enumerate(C.arrows):
        lhs = D.comp.get((G.arr(f), t[a.dom]))
        rhs = D.comp.get((t[a.cod], F.arr(f)))
        if lhs != rhs:
            out.append(Violation((f,), "naturality", (lhs, rhs)))
    return LawReport(tuple(out))


def identity_transformation(F: Functor) -> NaturalTransformation:
    D = F.target
    return NaturalTransformation(F, F, tuple(D.identity(X) for X in F.object_map))


def vertical_compose(t: NaturalTransformation, u: NaturalTransformation) -> NaturalTransformation:
    """``u . t`` for ``t: F -> G`` and ``u: G -> H``, componentwise."""
    if t.G != u.F:
        raise PreconditionError("middle functors differ: t ends where u does not start")
    D = t.F.target
    return NaturalTransformation(t.F, u.G, tuple(D.compose(u[A], t[A]) for A in range(len(t.components))))


def whisker_left(t: NaturalTransformation, K: Functor) -> NaturalTransformation:
    """``t K``: components ``t_{K X}`` for ``t: F -> G`` and K into F's source."""
    return NaturalTransformation(compose_functors(t.F, K), compose_functors(t.G, K),
                                 tuple(t[K.obj(X)] for X in range(K.source.n_objects)))


def whisker_right(K: Functor, t: NaturalTransformation) -> NaturalTransformation:
    """``K t``: components ``K(t_A)``."""
    return NaturalTransformation(compose_functors(K, t.F), compose_functors(K, t.G),
                                 tuple(K.arr(c) for c in t.components))


def enumerate_natural_transformations(F: Functor, G: Functor, *, component_filter=None) -> list:
    """All natural transformations F -> G, in lexicographic component order.

    Candidate components are pruned per arrow as soon as both ends of its
    naturality square are assigned.
    """
    if not _same_functor_pair(F, G):
        raise StructureError("functors do not share source and target")
    C, D = F.source, F.target
    n = C.n_objects
    options = []
    for A in range(n):
        cands = D.hom(F.obj(A), G.obj(A))
        if component_filter is not None:
            cands = [c for c in cands if component_filter(A, c)]
        options.append(cands)
    # arrows whose square can be checked once objects 0..k are assigned
    ready = [[] for _ in range(n)]
    for f, a in enumerate(C.arrows):
        ready[max(a.dom, a.cod)].append(f)
    found, chosen = [], [0] * n

    def extend(k):
        if k == n:
            found.append(NaturalTransformation(F, G, tuple(chosen)))
            return
        for c in options[k]:
            chosen[k] = c
            if all(D.comp.get((G.arr(f), chosen[C.dom(f)])) == D.comp.get((chosen[C.cod(f)], F.arr(f)))
                   for f in ready[k]):
                extend(k + 1)

    extend(0)
    return found


# -- functor enumeration and functor categories --------------------------------

def enumerate_functors(C: FinCategory, D: FinCategory, *, cap: Optional[int] = None) -> list:
    """All functors C -> D, ordered by (object map, arrow map).

    Identities are forced, candidate arrow images are restricted to the right
    hom-set and each composite is checked as soon as its factors are mapped.
    """
    cap = caps.resolve(cap, caps.FUNCTORS)
    ids = set(C.identities)
    free = [f for f in range(C.n_arrows) if f not in ids]
    position = {f: i for i, f in enumerate(free)}
    # composites checkable once free arrows up to index i are assigned
    checks = [[] for _ in free]
    for (g, f), h in C.comp.items():
        involved = [position[x] for x in (g, f, h) if x in position]
        if involved:
            checks[max(involved)].append((g, f, h))
    found = []

    for om in product(range(D.n_objects), repeat=C.n_objects):
        am = [None] * C.n_arrows
        for A in range(C.n_objects):
            am[C.identity(A)] = D.identity(om[A])
        # identity-only composites never involve a free arrow; check them once
        if any(am[h] != D.comp.get((am[g], am[f])) for (g, f), h in C.comp.items()
               if g in ids and f in ids):
            continue

        def extend(i):
            if i == len(free):
                if len(found) >= cap:
                    raise CapExceeded("functor count", len(found) + 1, cap)
                found.append(Functor(C, D, om, tuple(am)))
                return
            f = free[i]
            for Ff in D.hom(om[C.dom(f)], om[C.cod(f)]):
                am[f] = Ff
                if all(am[h] == D.comp.get((am[g], am[ff])) for g, ff, h in checks[i]):
                    extend(i + 1)
            am[f] = None

        extend(0)
    return found


@dataclass(frozen=True, eq=False)
class FunctorCategory(FinCategory):
    """``B^A``: functors as objects, natural transformations as arrows."""

    functors: tuple = ()
    transformations: tuple = ()


def functor_category(A: FinCategory, B: FinCategory, *, cap: Optional[int] = None) -> FunctorCategory:
    size = A.n_objects * A.n_arrows * B.n_objects * B.n_arrows
    limit = caps.resolve(cap, caps.FUNCTOR_CATEGORY_INPUT)
    if size > limit:
        raise CapExceeded("|objects|*|arrows| of the two inputs", size, limit)
    functors = enumerate_functors(A, B)
    arrows, nats, index, identities = [], [], {}, []
    for i, F in enumerate(functors):
        for j, G in enumerate(functors):
            for t in enumerate_natural_transformations(F, G):
                k = len(arrows)
                arrows.append(ArrowRecord(k, i, j, f"t{k}"))
                nats.append(t)
                index[(i, j, t.components)] = k
    for i, F in enumerate(functors):
        identities.append(index[(i, i, identity_transformation(F).components)])
    comp = {}
    for f, t in enumerate(nats):
        i = arrows[f].cod
        for g, u in enumerate(nats):
            if arrows[g].dom != i:
                continue
            v = vertical_compose(t, u)
            comp[(g, f)] = index[(arrows[f].dom, arrows[g].cod, v.components)]
    objects = tuple(f"F{i}" for i in range(len(functors)))
    return FunctorCategory(objects, tuple(arrows), tuple(identities), comp,
                           functors=tuple(functors), transformations=tuple(nats))
