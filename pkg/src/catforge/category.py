"""Finite categories as explicit composition tables.

Arrows run ``dom -> cod``.  An arrow ``f`` with ``dom(f) = A`` and
``cod(f) = B`` is written ``f: A -> B``, and the composite of
``f: A -> B`` with ``g: B -> C`` is ``g . f: A -> C``, stored in the table
under the key ``(g, f)`` (application order, as in ``g(f(x))``).

Some texts print the typing of an arrow as ``f: cod(f) -> dom(f)``; that
orientation contradicts every diagram drawn with it and is not supported.
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import (
    CompositionError,
    InconsistencyError,
    IncompleteTableError,
    PreconditionError,
    StructureError,
)

ObjectId = int
ArrowId = int


@dataclass(frozen=True)
class ArrowRecord:
    id: ArrowId
    dom: ObjectId
    cod: ObjectId
    name: str


@dataclass(frozen=True, order=True)
class Violation:
    """One failed law instance.

    ``witness`` holds the arrows (or objects) that exhibit the failure and
    ``detail`` the offending values, e.g. the two sides of an equation.
    """

    witness: tuple
    law: str
    detail: tuple = ()

    def __str__(self):
        s = f"{self.law} {self.witness}"
        return f"{s}: {self.detail}" if self.detail else s


@dataclass(frozen=True)
class LawReport:
    violations: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "violations", tuple(sorted(self.violations)))

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid

    def laws(self) -> set:
        return {v.law for v in self.violations}


@dataclass(frozen=True, eq=False)
class FinCategory:
    """A finite category.

    ``objects`` are display labels indexed by ``ObjectId``; ``arrows[i].id``
    must equal ``i``; ``identities[A]`` is the identity arrow of object A;
    ``comp[(g, f)]`` is ``g . f``.  ``comp`` may be any mapping, so large
    concrete categories can compute composites on demand.

    Instances are immutable and compare by identity.  Construction only
    checks index bounds; the category laws are checked by
    :func:`validate_category`.
    """

    objects: tuple
    arrows: tuple
    identities: tuple
    comp: Mapping = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "identities", tuple(self.identities))
        if isinstance(self.comp, dict):
            object.__setattr__(self, "comp", dict(self.comp))
        self._check_structure()

    def _check_structure(self):
        n, m = len(self.objects), len(self.arrows)
        for i, a in enumerate(self.arrows):
            if a.id != i:
                raise StructureError(f"arrow at position {i} carries id {a.id}")
            if not (0 <= a.dom < n and 0 <= a.cod < n):
                raise StructureError(f"arrow {a.name!r} has dom/cod outside 0..{n - 1}")
        if len(self.identities) != n:
            raise StructureError(f"{len(self.identities)} identities for {n} objects")
        for A, i in enumerate(self.identities):
            if not 0 <= i < m:
                raise StructureError(f"identity of object {A} is arrow {i}, outside 0..{m - 1}")
        if isinstance(self.comp, dict):
            for key, h in self.comp.items():
                g, f = key
                if not (0 <= g < m and 0 <= f < m and 0 <= h < m):
                    raise StructureError(f"composition entry {key} -> {h} references a missing arrow")

    # -- basic accessors -------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def dom(self, f: ArrowId) -> ObjectId:
        return self.arrows[f].dom

    def cod(self, f: ArrowId) -> ObjectId:
        return self.arrows[f].cod

    def identity(self, A: ObjectId) -> ArrowId:
        return self.identities[A]

    def name(self, f: ArrowId) -> str:
        return self.arrows[f].name

    def is_identity(self, f: ArrowId) -> bool:
        return self.identities[self.arrows[f].dom] == f

    def describe(self, f: ArrowId) -> str:
        a = self.arrows[f]
        return f"{a.name}: {self.objects[a.dom]} -> {self.objects[a.cod]}"

    @cached_property
    def _object_index(self):
        return {name: i for i, name in enumerate(self.objects)}

    @cached_property
    def _arrow_index(self):
        return {a.name: a.id for a in self.arrows}

    def object_named(self, name) -> ObjectId:
        return self._object_index[name]

    def arrow_named(self, name) -> ArrowId:
        return self._arrow_index[name]

    @cached_property
    def _homs(self):
        homs = {}
        for a in self.arrows:
            homs.setdefault((a.dom, a.cod), []).append(a.id)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def _outgoing(self):
        out = [[] for _ in self.objects]
        for a in self.arrows:
            out[a.dom].append(a.id)
        return tuple(tuple(v) for v in out)

    @cached_property
    def _incoming(self):
        inc = [[] for _ in self.objects]
        for a in self.arrows:
            inc[a.cod].append(a.id)
        return tuple(tuple(v) for v in inc)

    def hom(self, A: ObjectId, B: ObjectId) -> tuple:
        return self._homs.get((A, B), ())

    def outgoing(self, A: ObjectId) -> tuple:
        return self._outgoing[A]

    def incoming(self, B: ObjectId) -> tuple:
        return self._incoming[B]

    def compose(self, g: ArrowId, f: ArrowId) -> ArrowId:
        if self.arrows[f].cod != self.arrows[g].dom:
            raise CompositionError(g, f)
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise IncompleteTableError([(g, f)]) from None

    def compose_path(self, path: Iterable[ArrowId], start: Optional[ObjectId] = None) -> ArrowId:
        """Fold a path given in travel order (first arrow first)."""
        path = list(path)
        if not path:
            if start is None:
                raise StructureError("empty path needs a start object")
            return self.identities[start]
        acc = path[0]
        for g in path[1:]:
            acc = self.compose(g, acc)
        return acc

    @cached_property
    def _cache(self):
        # memo for derived structure (products, exponentials); values are
        # pure functions of the category so caching is unobservable
        return {}


def _check_object(C, A):
    if not 0 <= A < C.n_objects:
        raise StructureError(f"object {A} outside 0..{C.n_objects - 1}")


def _check_arrow(C, f):
    if not 0 <= f < C.n_arrows:
        raise StructureError(f"arrow {f} outside 0..{C.n_arrows - 1}")


def compose(C: FinCategory, g: ArrowId, f: ArrowId) -> ArrowId:
    _check_arrow(C, g)
    _check_arrow(C, f)
    return C.compose(g, f)


def hom_set(C: FinCategory, A: ObjectId, B: ObjectId) -> list:
    _check_object(C, A)
    _check_object(C, B)
    return list(C.hom(A, B))


def validate_category(C: FinCategory) -> LawReport:
    """Exhaustively check typing, identity and associativity laws."""
    arrows, ids, comp = C.arrows, C.identities, C.comp
    out = []
    for A, i in enumerate(ids):
        if arrows[i].dom != A or arrows[i].cod != A:
            out.append(Violation((i,), "identity-typing", (A,)))

    for key in comp:
        g, f = key
        if arrows[f].cod != arrows[g].dom:
            out.append(Violation((g, f), "composition-spurious"))

    for f in range(len(arrows)):
        for g in C.outgoing(arrows[f].cod):
            h = comp.get((g, f))
            if h is None:
                out.append(Violation((g, f), "composition-missing"))
            elif arrows[h].dom != arrows[f].dom or arrows[h].cod != arrows[g].cod:
                out.append(Violation((g, f), "composition-typing", (h,)))

    for f, a in enumerate(arrows):
        left = comp.get((ids[a.cod], f))
        if left is not None and left != f:
            out.append(Violation((f,), "left-identity", (ids[a.cod], left)))
        right = comp.get((f, ids[a.dom]))
        if right is not None and right != f:
            out.append(Violation((f,), "right-identity", (ids[a.dom], right)))

    for f, a in enumerate(arrows):
        for g in C.outgoing(a.cod):
            gf = comp.get((g, f))
            if gf is None:
                continue
            for h in C.outgoing(arrows[g].cod):
                hg = comp.get((h, g))
                if hg is None:
                    continue
                lhs = comp.get((h, gf))
                rhs = comp.get((hg, f))
                if lhs is None or rhs is None:
                    # only possible when gf or hg is mistyped; reported above
                    continue
                if lhs != rhs:
                    out.append(Violation((h, g, f), "associativity", (lhs, rhs)))
    return LawReport(tuple(out))


def is_isomorphism(C: FinCategory, i: ArrowId) -> Optional[ArrowId]:
    """Return the inverse of ``i``, or None when ``i`` is not invertible."""
    _check_arrow(C, i)
    A, B = C.dom(i), C.cod(i)
    found = [
        j for j in C.hom(B, A)
        if C.comp.get((j, i)) == C.identities[A] and C.comp.get((i, j)) == C.identities[B]
    ]
    if len(found) > 1:
        raise InconsistencyError(f"arrow {i} has {len(found)} distinct inverses {found}")
    return found[0] if found else None


def are_isomorphic(C: FinCategory, A: ObjectId, B: ObjectId) -> Optional[ArrowId]:
    """Some isomorphism A -> B, or None."""
    for i in C.hom(A, B):
        if is_isomorphism(C, i) is not None:
            return i
    return None


def find_initial(C: FinCategory) -> list:
    n = C.n_objects
    return [I for I in range(n) if all(len(C.hom(I, A)) == 1 for A in range(n))]


def find_terminal(C: FinCategory) -> list:
    n = C.n_objects
    return [T for T in range(n) if all(len(C.hom(A, T)) == 1 for A in range(n))]


def unique_iso_between_initials(C: FinCategory, I: ObjectId, I2: ObjectId) -> ArrowId:
    _check_object(C, I)
    _check_object(C, I2)
    initial = set(find_initial(C))
    for X in (I, I2):
        if X not in initial:
            raise PreconditionError(f"object {C.objects[X]!r} is not initial")
    there, back = C.hom(I, I2), C.hom(I2, I)
    if len(there) != 1 or len(back) != 1:
        raise InconsistencyError(f"{len(there)} arrows {I}->{I2} and {len(back)} back between initial objects")
    tau = there[0]
    if is_isomorphism(C, tau) != back[0]:
        raise InconsistencyError(f"the unique arrow {C.describe(tau)} is not invertible")
    return tau


def build_category(objects, arrows=(), composites=None, *, complete=True) -> FinCategory:
    """Build a category from names.

    ``arrows`` is an iterable of ``(name, dom, cod)``; identity arrows named
    ``id_<object>`` are created first, one per object.  ``composites`` maps
    ``(g, f)`` name pairs to the name of ``g . f``; entries involving an
    identity are filled in unless given explicitly.  With ``complete`` set,
    any composable non-identity pair left unbound raises
    :class:`IncompleteTableError` listing the missing name pairs.
    """
    objects = list(objects)
    obj_index = {}
    for i, o in enumerate(objects):
        if o in obj_index:
            raise StructureError(f"duplicate object {o!r}")
        obj_index[o] = i

    records, names = [], {}

    def add(name, dom, cod):
        if name in names:
            raise StructureError(f"duplicate arrow {name!r}")
        names[name] = len(records)
        records.append(ArrowRecord(len(records), dom, cod, name))

    for o in objects:
        add(f"id_{o}", obj_index[o], obj_index[o])
    for name, dom, cod in arrows:
        for o in (dom, cod):
            if o not in obj_index:
                raise StructureError(f"arrow {name!r} references unknown object {o!r}")
        add(name, obj_index[dom], obj_index[cod])

    comp = {}
    for (g, f), h in (composites or {}).items():
        for a in (g, f, h):
            if a not in names:
                raise StructureError(f"composite {g} . {f} = {h} references unknown arrow {a!r}")
        comp[(names[g], names[f])] = names[h]

    identities = list(range(len(objects)))
    missing = []
    for f in records:
        for g in records:
            if f.cod != g.dom or (g.id, f.id) in comp:
                continue
            if g.id == identities[g.dom]:
                comp[(g.id, f.id)] = f.id
            elif f.id == identities[f.dom]:
                comp[(g.id, f.id)] = g.id
            else:
                missing.append((g.name, f.name))
    if missing and complete:
        raise IncompleteTableError(missing)
    return FinCategory(tuple(objects), tuple(records), tuple(identities), comp)
