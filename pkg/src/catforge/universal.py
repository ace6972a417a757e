"""Products, exponentials and cartesian closure, checked by enumeration.

A universal property is verified by counting: ``(apex, chi1, chi2)`` is a
product of A and B when, for every test object X, the map
``m |-> (chi1 . m, chi2 . m)`` is a bijection from hom(X, apex) onto
hom(X, A) x hom(X, B); likewise an exponential ``(E, eval)`` when
``m |-> eval . (m x id_A)`` is a bijection hom(X, E) -> hom(X x A, B).

Test objects default to every object of the category.  Passing a subset
checks the property relative to that full subcategory, which is how large
concrete categories are handled (see :func:`catforge.finset.finset_window`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import caps
from .category import ArrowId, FinCategory, ObjectId, find_terminal
from .errors import (
    CapExceeded,
    InconsistencyError,
    MissingStructureError,
    PreconditionError,
    StructureError,
)


@dataclass(frozen=True, order=True)
class ProductCone:
    apex: ObjectId
    chi1: ArrowId
    chi2: ArrowId


@dataclass(frozen=True)
class ExponentialData:
    exp_object: ObjectId
    eval: ArrowId
    product_cone: ProductCone


@dataclass(frozen=True)
class UniversalCheck:
    """Outcome of a universal-property check.

    On failure ``witness`` is ``(X, f, g)`` for products or ``(X, h)`` for
    exponentials and ``mediators`` lists the candidate arrows found for it
    (none, or more than one).
    """

    holds: bool
    witness: Optional[tuple] = None
    mediators: tuple = ()

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class CCCReport:
    terminal: Optional[ObjectId]
    product_table: dict = field(default_factory=dict)
    exp_table: dict = field(default_factory=dict)
    failures: tuple = ()

    @property
    def is_ccc(self) -> bool:
        return (self.terminal is not None
                and all(v is not None for v in self.product_table.values())
                and all(v is not None for v in self.exp_table.values()))


def _tests(C, test_objects):
    return tuple(range(C.n_objects)) if test_objects is None else tuple(test_objects)


def _check_cone(C, cone, A, B):
    P = cone.apex
    if not (C.dom(cone.chi1) == P and C.dom(cone.chi2) == P
            and C.cod(cone.chi1) == A and C.cod(cone.chi2) == B):
        raise StructureError(f"cone {cone} is not a cone over objects {A} and {B}")


def _pairing(C, cone, X):
    """``(chi1 . m, chi2 . m) -> [m, ...]`` over hom(X, apex); memoised."""
    key = ("pairing", cone, X)
    table = C._cache.get(key)
    if table is None:
        table = {}
        for m in C.hom(X, cone.apex):
            table.setdefault((C.comp[(cone.chi1, m)], C.comp[(cone.chi2, m)]), []).append(m)
        C._cache[key] = table
    return table


def verify_product(C: FinCategory, cone: ProductCone, A: ObjectId, B: ObjectId,
                   *, test_objects=None) -> UniversalCheck:
    _check_cone(C, cone, A, B)
    for X in _tests(C, test_objects):
        pairs = _pairing(C, cone, X)
        for f in C.hom(X, A):
            for g in C.hom(X, B):
                ms = pairs.get((f, g), ())
                if len(ms) != 1:
                    return UniversalCheck(False, (X, f, g), tuple(ms))
    return UniversalCheck(True)


def _product_search(C, A, B, test_objects, first_only, cap):
    tests = _tests(C, test_objects)
    cap = caps.resolve(cap, caps.SEARCH)
    work, found = 0, []
    for P in range(C.n_objects):
        # a product apex must have |hom(X, P)| = |hom(X, A)| * |hom(X, B)|
        if any(len(C.hom(X, P)) != len(C.hom(X, A)) * len(C.hom(X, B)) for X in tests):
            continue
        for chi1 in C.hom(P, A):
            for chi2 in C.hom(P, B):
                work += 1
                if work > cap:
                    raise CapExceeded("product candidates", work, cap)
                cone = ProductCone(P, chi1, chi2)
                if verify_product(C, cone, A, B, test_objects=tests):
                    found.append(cone)
                    if first_only:
                        return found
    return found


def find_products(C: FinCategory, A: ObjectId, B: ObjectId, *, test_objects=None,
                  cap: Optional[int] = None) -> list:
    """Every product cone over A and B, in lexicographic (apex, chi1, chi2) order."""
    return _product_search(C, A, B, test_objects, False, cap)


def canonical_product(C: FinCategory, A: ObjectId, B: ObjectId, *, test_objects=None,
                      cap: Optional[int] = None) -> Optional[ProductCone]:
    """The lexicographically least product cone, or None."""
    key = ("product", A, B, None if test_objects is None else tuple(test_objects))
    if key not in C._cache:
        found = _product_search(C, A, B, test_objects, True, cap)
        C._cache[key] = found[0] if found else None
    return C._cache[key]


def mediating_arrow(C: FinCategory, cone: ProductCone, f: ArrowId, g: ArrowId) -> ArrowId:
    """The unique ``<f, g>`` with ``chi1 . <f, g> = f`` and ``chi2 . <f, g> = g``."""
    X = C.dom(f)
    if C.dom(g) != X or C.cod(f) != C.cod(cone.chi1) or C.cod(g) != C.cod(cone.chi2):
        raise StructureError(f"arrows {f}, {g} do not form a cone over the legs of {cone}")
    ms = _pairing(C, cone, X).get((f, g), ())
    if len(ms) != 1:
        raise InconsistencyError(f"{len(ms)} mediating arrows for ({f}, {g}) through {cone}; "
                                 "the cone is not a verified product")
    return ms[0]


def product_arrow(C: FinCategory, src: ProductCone, dst: ProductCone, f: ArrowId, g: ArrowId) -> ArrowId:
    """``f x g = <f . chi1, g . chi2>`` from ``src``'s apex to ``dst``'s apex."""
    return mediating_arrow(C, dst, C.compose(f, src.chi1), C.compose(g, src.chi2))


def _require_product(C, X, A, test_objects):
    cone = canonical_product(C, X, A, test_objects=test_objects)
    if cone is None:
        raise MissingStructureError(
            f"no product of {C.objects[X]!r} and {C.objects[A]!r}; needed at test object {C.objects[X]!r}")
    return cone


def _currying(C, exp, X, A, cone_XA):
    """``eval . (m x id_A) -> [m, ...]`` over hom(X, E)."""
    key = ("currying", exp, X, cone_XA)
    table = C._cache.get(key)
    if table is None:
        table = {}
        idA = C.identity(A)
        for m in C.hom(X, exp.exp_object):
            mx = product_arrow(C, cone_XA, exp.product_cone, m, idA)
            table.setdefault(C.comp[(exp.eval, mx)], []).append(m)
        C._cache[key] = table
    return table


def _check_exp_typing(C, exp, A, B):
    cone = exp.product_cone
    _check_cone(C, cone, exp.exp_object, A)
    if C.dom(exp.eval) != cone.apex or C.cod(exp.eval) != B:
        raise StructureError(f"evaluation arrow {C.describe(exp.eval)} is not typed apex -> B")


def verify_exponential(C: FinCategory, exp: ExponentialData, A: ObjectId, B: ObjectId,
                       *, test_objects=None) -> UniversalCheck:
    """Every ``h: X x A -> B`` has exactly one curried ``m: X -> E``."""
    _check_exp_typing(C, exp, A, B)
    tests = _tests(C, test_objects)
    if not verify_product(C, exp.product_cone, exp.exp_object, A, test_objects=tests):
        raise PreconditionError(f"the product cone {exp.product_cone} of the exponential is not a product")
    for X in tests:
        cone_XA = _require_product(C, X, A, test_objects)
        table = _currying(C, exp, X, A, cone_XA)
        for h in C.hom(cone_XA.apex, B):
            ms = table.get(h, ())
            if len(ms) != 1:
                return UniversalCheck(False, (X, h), tuple(ms))
    return UniversalCheck(True)


def _exponential_search(C, A, B, test_objects, first_only, cap):
    tests = _tests(C, test_objects)
    cones = {X: _require_product(C, X, A, test_objects) for X in tests}
    cap = caps.resolve(cap, caps.SEARCH)
    work, found = 0, []
    for E in range(C.n_objects):
        if any(len(C.hom(X, E)) != len(C.hom(cones[X].apex, B)) for X in tests):
            continue
        cone = canonical_product(C, E, A, test_objects=test_objects)
        if cone is None:
            continue
        for ev in C.hom(cone.apex, B):
            work += 1
            if work > cap:
                raise CapExceeded("exponential candidates", work, cap)
            exp = ExponentialData(E, ev, cone)
            if verify_exponential(C, exp, A, B, test_objects=tests):
                found.append(exp)
                if first_only:
                    return found
    return found


def find_exponentials(C: FinCategory, A: ObjectId, B: ObjectId, *, test_objects=None,
                      cap: Optional[int] = None) -> list:
    """Every ``(E, eval)`` exhibiting ``B^A``, each over the canonical product E x A."""
    return _exponential_search(C, A, B, test_objects, False, cap)


def canonical_exponential(C: FinCategory, A: ObjectId, B: ObjectId, *, test_objects=None,
                          cap: Optional[int] = None) -> Optional[ExponentialData]:
    key = ("exponential", A, B, None if test_objects is None else tuple(test_objects))
    if key not in C._cache:
        found = _exponential_search(C, A, B, test_objects, True, cap)
        C._cache[key] = found[0] if found else None
    return C._cache[key]


def curry(C: FinCategory, exp: ExponentialData, X: ObjectId, h: ArrowId, *, test_objects=None) -> ArrowId:
    """The unique ``m: X -> E`` with ``eval . (m x id_A) = h`` for ``h: X x A -> B``."""
    A = C.cod(exp.product_cone.chi2)
    cone = _require_product(C, X, A, test_objects)
    if C.dom(h) != cone.apex:
        raise StructureError(f"arrow {h} does not start at the product of {C.objects[X]!r} and {C.objects[A]!r}")
    ms = _currying(C, exp, X, A, cone).get(h, ())
    if len(ms) != 1:
        raise InconsistencyError(f"{len(ms)} curried forms of arrow {h}")
    return ms[0]


def uncurry(C: FinCategory, exp: ExponentialData, m: ArrowId, *, test_objects=None) -> ArrowId:
    A = C.cod(exp.product_cone.chi2)
    cone = _require_product(C, C.dom(m), A, test_objects)
    return C.compose(exp.eval, product_arrow(C, cone, exp.product_cone, m, C.identity(A)))


def check_cartesian_closed(C: FinCategory, *, cap: Optional[int] = None) -> CCCReport:
    """Terminal object, all binary products and all exponentials."""
    failures = []
    terminals = find_terminal(C)
    terminal = terminals[0] if terminals else None
    if terminal is None:
        failures.append("no terminal object")
    n = C.n_objects
    products = {}
    for A in range(n):
        for B in range(n):
            products[(A, B)] = canonical_product(C, A, B, cap=cap)
            if products[(A, B)] is None:
                failures.append(f"no product {C.objects[A]} x {C.objects[B]}")
    exps = {}
    for A in range(n):
        missing = [X for X in range(n) if products[(X, A)] is None]
        for B in range(n):
            if missing:
                exps[(A, B)] = None
                failures.append(f"no exponential {C.objects[B]}^{C.objects[A]}: "
                                f"missing product {C.objects[missing[0]]} x {C.objects[A]}")
                continue
            exps[(A, B)] = canonical_exponential(C, A, B, cap=cap)
            if exps[(A, B)] is None:
                failures.append(f"no exponential {C.objects[B]}^{C.objects[A]}")
    return CCCReport(terminal, products, exps, tuple(failures))
