"""The category of finite sets and total functions.

Objects are :class:`FinSetObject` values and arrows every total function
between them, enumerated in lexicographic order of their mapping tables.
Composites are computed on demand (``g . f (a) = g(f(a))``) instead of being
tabulated, which keeps categories with tens of thousands of arrows cheap.
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import caps
from .category import (
    ArrowId,
    ArrowRecord,
    FinCategory,
    find_terminal,
    is_isomorphism,
)
from .errors import CapExceeded, StructureError


@dataclass(frozen=True)
class FinSetObject:
    name: str
    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise StructureError(f"set {self.name!r} has repeated elements")

    def __len__(self):
        return len(self.elements)

    def index(self, element) -> int:
        return self.elements.index(element)


def finite_set(name: str, size: int) -> FinSetObject:
    """A set of ``size`` elements labelled ``name.0``, ``name.1``, ..."""
    return FinSetObject(name, tuple(f"{name}.{i}" for i in range(size)))


def standard_sets(sizes, prefix="S") -> list:
    """One set per size, named ``S0``, ``S1``, ... after their sizes."""
    return [finite_set(f"{prefix}{n}", n) for n in sizes]


@dataclass(frozen=True)
class FinFunction:
    """A total function; ``mapping[i]`` is the index in ``cod`` of the image
    of ``dom.elements[i]``."""

    dom: FinSetObject
    cod: FinSetObject
    mapping: tuple

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))
        if len(self.mapping) != len(self.dom):
            raise StructureError(f"function {self.dom.name} -> {self.cod.name} is not total")
        if any(not 0 <= y < len(self.cod) for y in self.mapping):
            raise StructureError(f"function {self.dom.name} -> {self.cod.name} leaves its codomain")

    @classmethod
    def from_dict(cls, dom, cod, table):
        return cls(dom, cod, tuple(cod.index(table[a]) for a in dom.elements))

    @classmethod
    def identity(cls, A):
        return cls(A, A, tuple(range(len(A))))

    def __call__(self, element):
        return self.cod.elements[self.mapping[self.dom.index(element)]]

    def then(self, g: "FinFunction") -> "FinFunction":
        """``g . self``."""
        if g.dom != self.cod:
            raise StructureError(f"cannot compose {g.dom.name} after {self.cod.name}")
        return FinFunction(self.dom, g.cod, tuple(g.mapping[y] for y in self.mapping))

    def as_dict(self) -> dict:
        return {a: self.cod.elements[y] for a, y in zip(self.dom.elements, self.mapping)}

    @property
    def injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def surjective(self) -> bool:
        return set(self.mapping) == set(range(len(self.cod)))

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


# -- set-level constructions ------------------------------------------------

def cartesian_product(A: FinSetObject, B: FinSetObject):
    """``A x B`` as the set of pairs ``(a,b)`` with its two projections."""
    P = FinSetObject(f"{A.name}x{B.name}",
                     tuple(f"({a},{b})" for a in A.elements for b in B.elements))
    nb = len(B)
    chi1 = FinFunction(P, A, tuple(i // nb for i in range(len(P)))) if nb else FinFunction(P, A, ())
    chi2 = FinFunction(P, B, tuple(i % nb for i in range(len(P)))) if nb else FinFunction(P, B, ())
    return P, chi1, chi2


def function_space(A: FinSetObject, B: FinSetObject):
    """``B^A`` as the set of all functions A -> B.

    Returns ``(E, functions, evaluation)`` where ``functions[i]`` is the
    function named by ``E.elements[i]`` and ``evaluation`` is the map
    ``E x A -> B``, ``(phi, a) |-> phi(a)``, over :func:`cartesian_product`.
    """
    funcs = [FinFunction(A, B, m) for m in product(range(len(B)), repeat=len(A))]
    labels = tuple(
        "[" + ",".join(f"{a}:{B.elements[y]}" for a, y in zip(A.elements, f.mapping)) + "]"
        for f in funcs
    )
    E = FinSetObject(f"{B.name}^{A.name}", labels)
    P, _, _ = cartesian_product(E, A)
    na = len(A)
    evaluation = FinFunction(P, B, tuple(funcs[i // na].mapping[i % na] for i in range(len(P))))
    return E, funcs, evaluation


def disjoint_union(A: FinSetObject, B: FinSetObject):
    """``A + B`` with its two injections (tagged elements)."""
    S = FinSetObject(f"{A.name}+{B.name}",
                     tuple(f"inl({a})" for a in A.elements) + tuple(f"inr({b})" for b in B.elements))
    inl = FinFunction(A, S, tuple(range(len(A))))
    inr = FinFunction(B, S, tuple(len(A) + i for i in range(len(B))))
    return S, inl, inr


# -- the category -------------------------------------------------------------

class _FunctionComposition(Mapping):
    """Composition table computed from mapping tables on lookup."""

    def __init__(self, records, mappings, index, outgoing):
        self._records = records
        self._mappings = mappings
        self._index = index
        self._outgoing = outgoing

    def __getitem__(self, key):
        g, f = key
        rf, rg = self._records[f], self._records[g]
        if rf.cod != rg.dom:
            raise KeyError(key)
        mg = self._mappings[g]
        return self._index[(rf.dom, rg.cod, tuple(mg[y] for y in self._mappings[f]))]

    def __iter__(self):
        for rf in self._records:
            for g in self._outgoing[rf.cod]:
                yield (g, rf.id)

    def __len__(self):
        return sum(len(self._outgoing[r.cod]) for r in self._records)


@dataclass(frozen=True, eq=False)
class FinSetCategory(FinCategory):
    """A finite-set category that keeps each arrow's underlying function."""

    sets: tuple = ()
    functions: tuple = ()

    def arrow_of(self, fn: FinFunction) -> ArrowId:
        key = (self.sets.index(fn.dom), self.sets.index(fn.cod), fn.mapping)
        return self.comp._index[key]

    def object_of(self, A: FinSetObject) -> int:
        return self.sets.index(A)


def _arrow_name(A, B, m):
    if A is B and m == tuple(range(len(A))):
        return f"id_{A.name}"
    code = "".join(map(str, m)) if len(B) <= 10 else "_".join(map(str, m))
    return f"f_{A.name}_{B.name}_{code or 'e'}"


def _assemble(sets, families) -> FinSetCategory:
    """``families`` yields ``(i, j, mapping)`` triples in arrow order."""
    records, mappings, functions, index = [], [], [], {}
    for i, j, m in families:
        k = len(records)
        records.append(ArrowRecord(k, i, j, _arrow_name(sets[i], sets[j], m)))
        mappings.append(m)
        functions.append(FinFunction(sets[i], sets[j], m))
        index[(i, j, m)] = k
    outgoing = [[] for _ in sets]
    for r in records:
        outgoing[r.dom].append(r.id)
    identities = tuple(index[(i, i, tuple(range(len(A))))] for i, A in enumerate(sets))
    comp = _FunctionComposition(records, mappings, index, [tuple(o) for o in outgoing])
    return FinSetCategory(
        tuple(A.name for A in sets), tuple(records), identities, comp,
        sets=tuple(sets), functions=tuple(functions),
    )


def _check_names(sets):
    names = [A.name for A in sets]
    if len(set(names)) != len(names):
        raise StructureError("set names must be distinct")


def finset_category(sets, *, cap: Optional[int] = None) -> FinSetCategory:
    """Full subcategory of finite sets on ``sets``: every total function."""
    sets = list(sets)
    _check_names(sets)
    cap = caps.resolve(cap, caps.FINSET_ARROWS)
    total = sum(len(B) ** len(A) for A in sets for B in sets)
    if total > cap:
        raise CapExceeded("arrow count", total, cap)

    def families():
        for i, A in enumerate(sets):
            for j, B in enumerate(sets):
                for m in product(range(len(B)), repeat=len(A)):
                    yield i, j, m

    return _assemble(sets, families())


def finset_window(small, large=(), special=(), *, cap: Optional[int] = None) -> FinSetCategory:
    """A composition-closed, non-full category of finite sets.

    Every function out of a ``small`` set is an arrow.  Out of a ``large``
    set only its identity, the constant functions and the composites
    ``g . s`` are kept, where ``s`` is one of the ``special`` functions
    (each from a large set into a small one) and ``g`` any function out of
    ``cod(s)``.  Large sets can therefore carry projections or evaluation
    maps without tabulating every function out of them.

    Universal properties whose test objects are small sets are decided
    exactly in such a window, as the hom-sets out of small sets are full.
    """
    small, large = list(small), list(large)
    sets = small + large
    _check_names(sets)
    cap = caps.resolve(cap, caps.FINSET_ARROWS)
    ns = len(small)
    by_dom = {}
    for s in special:
        if s.dom not in large or s.cod not in small:
            raise StructureError(f"special function {s.dom.name} -> {s.cod.name} must run large -> small")
        by_dom.setdefault(sets.index(s.dom), []).append(s)

    total = sum(len(B) ** len(A) for A in small for B in sets)
    total += sum(sum(len(B) ** len(s.cod) for B in sets) for s in special)
    total += sum(len(B) + 1 for _ in large for B in sets)
    if total > cap:
        raise CapExceeded("arrow count", total, cap)

    def out_of_large(i, j):
        A, B = sets[i], sets[j]
        if not len(A):
            return [()]
        maps = {(y,) * len(A) for y in range(len(B))}
        if i == j:
            maps.add(tuple(range(len(A))))
        for s in by_dom.get(i, ()):
            for g in product(range(len(B)), repeat=len(s.cod)):
                maps.add(tuple(g[y] for y in s.mapping))
        return sorted(maps)

    def families():
        for i, A in enumerate(sets):
            for j, B in enumerate(sets):
                if i < ns:
                    for m in product(range(len(B)), repeat=len(A)):
                        yield i, j, m
                else:
                    for m in out_of_large(i, j):
                        yield i, j, m

    return _assemble(sets, families())


def function_space_window(base_sets, *, cap: Optional[int] = None):
    """Base sets together with every function space between them.

    Function spaces are large in the sense of :func:`finset_window`: only
    identities and constants leave them.  Points of every object and every
    arrow from a base set into a function space are present, so
    point-surjectivity of ``A -> B^A`` is decided exactly.

    Returns ``(category, exponentials)`` with ``exponentials[(A, B)]`` the
    ObjectId of ``B^A`` for base ObjectIds ``A`` and ``B``.
    """
    base = list(base_sets)
    spaces, exps = [], {}
    for a, A in enumerate(base):
        for b, B in enumerate(base):
            exps[(a, b)] = len(base) + len(spaces)
            spaces.append(function_space(A, B)[0])
    return finset_window(base, spaces, cap=cap), exps


@dataclass(frozen=True)
class CartesianWindow:
    """Base sets with their cartesian products and function spaces.

    ``products[(a, b)]`` is the pair-set cone over base objects a, b and
    ``exponentials[(a, b)]`` the function space ``b^a`` with evaluation,
    both as arrows of ``category``; ``small`` lists the objects out of
    which every function is present.

    Products are decided exactly with ``small`` as test objects.
    Exponentials need ``X x A`` in the window for each test object X, so
    they are decided with ``base`` as test objects.
    """

    category: FinSetCategory
    base: tuple
    small: tuple
    products: dict
    exponentials: dict


def cartesian_window(base_sets, *, cap: Optional[int] = None) -> CartesianWindow:
    from .universal import ExponentialData, ProductCone

    base = list(base_sets)
    pair_sets, cones = [], {}
    for A in base:
        for B in base:
            P, chi1, chi2 = cartesian_product(A, B)
            pair_sets.append(P)
            cones[(A.name, B.name)] = (P, chi1, chi2)
    spaces, evals, special, large = [], {}, [], []
    for A in base:
        for B in base:
            E, _, ev = function_space(A, B)
            EA, p1, p2 = cartesian_product(E, A)
            spaces.append(E)
            large.append(EA)
            special += [p1, p2, ev]
            evals[(A.name, B.name)] = (E, EA, p1, p2, ev)
    small = base + pair_sets + spaces
    W = finset_window(small, large, special, cap=cap)
    idx = {A.name: i for i, A in enumerate(base)}
    products = {
        (idx[a], idx[b]): ProductCone(W.object_of(P), W.arrow_of(c1), W.arrow_of(c2))
        for (a, b), (P, c1, c2) in cones.items()
    }
    exponentials = {
        (idx[a], idx[b]): ExponentialData(
            W.object_of(E), W.arrow_of(ev),
            ProductCone(W.object_of(EA), W.arrow_of(p1), W.arrow_of(p2)))
        for (a, b), (E, EA, p1, p2, ev) in evals.items()
    }
    return CartesianWindow(W, tuple(range(len(base))), tuple(range(len(small))), products, exponentials)


# -- classification (monomorphisms and friends) -------------------------------

@dataclass(frozen=True)
class ArrowClassification:
    mono: bool
    epi: bool
    iso: bool
    injective: bool
    surjective: bool
    bijective: bool

    def agrees(self) -> bool:
        return (self.mono == self.injective and self.epi == self.surjective
                and self.iso == self.bijective)


def is_mono(C: FinCategory, f: ArrowId) -> bool:
    """Left-cancellable: f . g = f . h implies g = h for every parallel pair."""
    A = C.dom(f)
    for X in range(C.n_objects):
        seen = set()
        for g in C.hom(X, A):
            fg = C.comp[(f, g)]
            if fg in seen:
                return False
            seen.add(fg)
    return True


def is_epi(C: FinCategory, f: ArrowId) -> bool:
    """Right-cancellable: g . f = h . f implies g = h."""
    B = C.cod(f)
    for Y in range(C.n_objects):
        seen = set()
        for g in C.hom(B, Y):
            gf = C.comp[(g, f)]
            if gf in seen:
                return False
            seen.add(gf)
    return True


def classify_arrow(C: FinCategory, f: ArrowId, underlying: Optional[FinFunction] = None):
    if underlying is None:
        underlying = C.functions[f]
    return ArrowClassification(
        mono=is_mono(C, f),
        epi=is_epi(C, f),
        iso=is_isomorphism(C, f) is not None,
        injective=underlying.injective,
        surjective=underlying.surjective,
        bijective=underlying.bijective,
    )


@dataclass(frozen=True)
class CorrespondenceReport:
    checked: int
    disagreements: tuple   # (ArrowId, ArrowClassification)
    counts: tuple = ()     # (flag, number of arrows with it set)

    @property
    def valid(self) -> bool:
        return not self.disagreements


def verify_correspondence_table(C: FinSetCategory) -> CorrespondenceReport:
    """Check mono = injective, epi = surjective, iso = bijective on every arrow."""
    bad = []
    tally = dict.fromkeys(("mono", "epi", "iso", "injective", "surjective", "bijective"), 0)
    for f in range(C.n_arrows):
        c = classify_arrow(C, f)
        for k in tally:
            tally[k] += getattr(c, k)
        if not c.agrees():
            bad.append((f, c))
    return CorrespondenceReport(C.n_arrows, tuple(bad), tuple(tally.items()))


@dataclass(frozen=True)
class SingletonReport:
    singletons: tuple
    isomorphisms: tuple   # ((S, T), ArrowId)
    terminal: tuple       # singletons that are terminal
    failures: tuple

    @property
    def valid(self) -> bool:
        return not self.failures


def singleton_isomorphism_check(C: FinSetCategory) -> SingletonReport:
    """Every pair of singletons is isomorphic and every singleton terminal."""
    singles = [i for i, A in enumerate(C.sets) if len(A) == 1]
    terminal = set(find_terminal(C))
    isos, failures = [], []
    for S in singles:
        if S not in terminal:
            failures.append(("not-terminal", S))
        for T in singles:
            arrows = C.hom(S, T)
            iso = next((i for i in arrows if is_isomorphism(C, i) is not None), None)
            if iso is None:
                failures.append(("not-isomorphic", S, T))
            else:
                isos.append(((S, T), iso))
    return SingletonReport(tuple(singles), tuple(isos),
                           tuple(s for s in singles if s in terminal), tuple(failures))
