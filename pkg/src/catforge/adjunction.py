"""Adjoint situations ``<G, F, t, u>`` and their verification.

F: A -> B is the left adjoint, G: B -> A the right adjoint.  The unit runs
``t: Id_A -> G . F`` and the counit ``u: F . G -> Id_B``.  The triangle
identities are read componentwise as equalities with identity arrows:

    u_{FA} . F(t_A) = id_{FA}      for every object A of A
    G(u_B) . t_{GB} = id_{GB}      for every object B of B

Written with functors composed left to right, the unit is ``t: A -> FG``;
both spellings denote the same transformation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .category import FinCategory, LawReport, ObjectId, Violation, is_isomorphism
from .errors import InconsistencyError, PreconditionError, StructureError
from .functor import (
    Functor,
    NaturalTransformation,
    compose_functors,
    enumerate_natural_transformations,
    exponential_functor,
    identity_functor,
    identity_transformation,
    product_functor,
    validate_functor,
    validate_natural_transformation,
)
from .universal import canonical_exponential, canonical_product, curry


@dataclass(frozen=True)
class AdjointSituation:
    F: Functor
    G: Functor
    unit: NaturalTransformation
    counit: NaturalTransformation

    @property
    def A(self) -> FinCategory:
        return self.F.source

    @property
    def B(self) -> FinCategory:
        return self.F.target


def identity_adjunction(C: FinCategory) -> AdjointSituation:
    I = identity_functor(C)
    return AdjointSituation(I, I, identity_transformation(I), identity_transformation(I))


def _check_typing(S: AdjointSituation):
    F, G = S.F, S.G
    if G.source is not F.target or G.target is not F.source:
        raise StructureError("right adjoint does not run back between the categories of the left adjoint")
    if S.unit.F != identity_functor(S.A) or S.unit.G != compose_functors(G, F):
        raise StructureError("unit is not a transformation Id -> G.F")
    if S.counit.F != compose_functors(F, G) or S.counit.G != identity_functor(S.B):
        raise StructureError("counit is not a transformation F.G -> Id")


def _tagged(report, tag):
    return [Violation(v.witness, f"{tag}:{v.law}", v.detail) for v in report.violations]


def verify_adjoint_situation(S: AdjointSituation) -> LawReport:
    """Both triangle identities at every object, plus the laws of the four pieces.

    A triangle failure has witness ``(object,)`` and detail
    ``(object name, composite, expected identity)``.
    """
    _check_typing(S)
    A, B, F, G, t, u = S.A, S.B, S.F, S.G, S.unit, S.counit
    out = []
    out += _tagged(validate_functor(F), "left-adjoint")
    out += _tagged(validate_functor(G), "right-adjoint")
    out += _tagged(validate_natural_transformation(t), "unit")
    out += _tagged(validate_natural_transformation(u), "counit")
    for X in range(A.n_objects):
        lhs = B.comp.get((u[F.obj(X)], F.arr(t[X])))
        expected = B.identity(F.obj(X))
        if lhs != expected:
            out.append(Violation((X,), "left-triangle", (A.objects[X], lhs, expected)))
    for Z in range(B.n_objects):
        lhs = A.comp.get((G.arr(u[Z]), t[G.obj(Z)]))
        expected = A.identity(G.obj(Z))
        if lhs != expected:
            out.append(Violation((Z,), "right-triangle", (B.objects[Z], lhs, expected)))
    return LawReport(tuple(out))


def failing_objects(report: LawReport) -> list:
    """Names of objects at which a triangle identity fails."""
    return sorted({v.detail[0] for v in report.violations if v.law.endswith("-triangle")})


def _require_verified(*situations):
    for S in situations:
        report = verify_adjoint_situation(S)
        if not report.valid:
            raise PreconditionError(f"adjoint situation does not verify: {report.violations[0]}")


def _conjugate_condition(S, S2, v, B_obj, w):
    """``G(h . v_A) . t_A = w . G2(h) . t2_A`` for every A and ``h: F2 A -> B``."""
    Acat, Bcat = S.A, S.B
    G, G2 = S.G, S2.G
    for X in range(Acat.n_objects):
        for h in Bcat.hom(S2.F.obj(X), B_obj):
            lhs = Acat.compose(G.arr(Bcat.compose(h, v[X])), S.unit[X])
            rhs = Acat.compose(w, Acat.compose(G2.arr(h), S2.unit[X]))
            if lhs != rhs:
                return False
    return True


def induced_transformation(S: AdjointSituation, S2: AdjointSituation,
                           v: NaturalTransformation) -> NaturalTransformation:
    """The conjugate ``w: G2 -> G`` of ``v: F -> F2``.

    Computed as ``w_B = G(u2_B) . G(v_{G2 B}) . t_{G2 B}`` and then certified
    as the only natural transformation satisfying the conjugation equation.
    """
    if S.A is not S2.A or S.B is not S2.B:
        raise StructureError("adjoint situations live between different categories")
    if v.F != S.F or v.G != S2.F:
        raise StructureError("v must run from the first left adjoint to the second")
    _require_verified(S, S2)
    report = validate_natural_transformation(v)
    if not report.valid:
        raise PreconditionError(f"v is not natural: {report.violations[0]}")
    Acat = S.A
    G, G2 = S.G, S2.G
    comps = []
    for Z in range(S.B.n_objects):
        W = G2.obj(Z)
        comps.append(Acat.compose(G.arr(S2.counit[Z]), Acat.compose(G.arr(v[W]), S.unit[W])))
    w = NaturalTransformation(G2, G, tuple(comps))
    found = enumerate_natural_transformations(
        G2, G, component_filter=lambda Z, c: _conjugate_condition(S, S2, v, Z, c))
    if len(found) != 1 or found[0] != w:
        raise InconsistencyError(f"{len(found)} transformations satisfy the conjugation equation")
    return w


def check_adjoint_uniqueness(S: AdjointSituation, S2: AdjointSituation) -> NaturalTransformation:
    """A natural isomorphism ``G -> G2`` for two situations sharing F.

    Found by exhaustive search over transformations whose components are all
    isomorphisms; the least one in component order is returned.
    """
    if S.F != S2.F:
        raise PreconditionError("situations do not share the left adjoint")
    _require_verified(S, S2)
    Acat = S.A
    found = enumerate_natural_transformations(
        S.G, S2.G, component_filter=lambda Z, c: is_isomorphism(Acat, c) is not None)
    if not found:
        raise InconsistencyError("no natural isomorphism between right adjoints of the same functor")
    return found[0]


def compose_adjunctions(S1: AdjointSituation, S2: AdjointSituation) -> AdjointSituation:
    """``F2 . F1 -| G1 . G2`` for ``S1`` between A, B and ``S2`` between B, C."""
    if S1.B is not S2.A:
        raise StructureError("middle categories differ")
    F, G, t, u = S1.F, S1.G, S1.unit, S1.counit
    F2, G2, t2, u2 = S2.F, S2.G, S2.unit, S2.counit
    A, C = S1.A, S2.B
    FF, GG = compose_functors(F2, F), compose_functors(G, G2)
    unit = [A.compose(G.arr(t2[F.obj(X)]), t[X]) for X in range(A.n_objects)]
    counit = [C.compose(u2[Z], F2.arr(u[G2.obj(Z)])) for Z in range(C.n_objects)]
    return AdjointSituation(
        FF, GG,
        NaturalTransformation(identity_functor(A), compose_functors(GG, FF), tuple(unit)),
        NaturalTransformation(compose_functors(FF, GG), identity_functor(C), tuple(counit)),
    )


def product_exponential_adjunction(C: FinCategory, Y: ObjectId, *, test_objects=None) -> AdjointSituation:
    """``(- x Y) -| (-)^Y`` with unit ``curry(id_{X x Y})`` and counit ``eval``.

    Raises MissingStructureError when a needed product or exponential is
    absent, and InconsistencyError if the result fails to verify.
    """
    F = product_functor(C, Y, test_objects=test_objects)
    G = exponential_functor(C, Y, test_objects=test_objects)
    unit = []
    for X in range(C.n_objects):
        P = canonical_product(C, X, Y, test_objects=test_objects).apex
        exp = canonical_exponential(C, Y, P, test_objects=test_objects)
        unit.append(curry(C, exp, X, C.identity(P), test_objects=test_objects))
    counit = [canonical_exponential(C, Y, Z, test_objects=test_objects).eval
              for Z in range(C.n_objects)]
    S = AdjointSituation(
        F, G,
        NaturalTransformation(identity_functor(C), compose_functors(G, F), tuple(unit)),
        NaturalTransformation(compose_functors(F, G), identity_functor(C), tuple(counit)),
    )
    report = verify_adjoint_situation(S)
    if not report.valid:
        raise InconsistencyError(f"constructed adjunction fails: {report.violations[0]}")
    return S
