import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from catforge import (
    CapExceeded,
    PreconditionError,
    StructureError,
    build_category,
    is_isomorphism,
    validate_category,
)
from catforge.diagram import build_diagram, check_commutes, image_diagram
from catforge.functor import (
    Functor,
    NaturalTransformation,
    compose_functors,
    constant_functor,
    enumerate_functors,
    enumerate_natural_transformations,
    functor_category,
    identity_functor,
    identity_transformation,
    validate_functor,
    validate_natural_transformation,
    vertical_compose,
    whisker_left,
    whisker_right,
)
from catforge.zoo import arrow_category, isomorphic_pair, one_object, square, triangle
from strategies import categories

small = categories(max_objects=3, max_arrows=8)


def test_enumeration_counts():
    assert len(enumerate_functors(arrow_category(), triangle())) == triangle().n_arrows
    assert len(enumerate_functors(one_object(), triangle())) == 3
    # the walking isomorphism goes only to identities in a poset
    assert len(enumerate_functors(isomorphic_pair(), triangle())) == 3


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        enumerate_functors(arrow_category(), triangle(), cap=2)


def test_identity_and_constant_functors():
    C = triangle()
    assert validate_functor(identity_functor(C)).valid
    K = constant_functor(C, arrow_category(), 1)
    assert validate_functor(K).valid
    with pytest.raises(StructureError):
        constant_functor(C, arrow_category(), 5)


def test_mistyped_image_is_reported():
    C = triangle()
    am = list(range(C.n_arrows))
    am[C.arrow_named("h")] = C.arrow_named("f")
    report = validate_functor(Functor(C, C, tuple(range(3)), tuple(am)))
    typing = [v for v in report.violations if v.law == "functor-typing"]
    assert [v.witness for v in typing] == [(C.arrow_named("h"),)]


def test_identity_must_go_to_identity():
    M = build_category(["M"], [("s", "M", "M")], {("s", "s"): "id_M"})
    s = M.arrow_named("s")
    report = validate_functor(Functor(M, M, (0,), (s, s)))
    assert "functor-identity" in report.laws()


def test_composition_violation_names_the_pair():
    C, D = square(True), square(False)
    am = [None] * C.n_arrows
    for a in range(C.n_arrows):
        name = C.name(a)
        am[a] = D.arrow_named("gf" if name == "d" else name)
    report = validate_functor(Functor(C, D, tuple(range(4)), tuple(am)))
    v = [v for v in report.violations if v.law == "functor-composition"]
    assert len(v) == 1
    assert v[0].witness == (C.arrow_named("k"), C.arrow_named("h"))
    assert v[0].detail == (D.arrow_named("gf"), D.arrow_named("kh"))
    # so no functor fixes the objects of the commuting square into the broken one
    assert all(F.object_map != (0, 1, 2, 3) for F in enumerate_functors(C, D))


def test_non_total_functor():
    C = triangle()
    with pytest.raises(StructureError):
        validate_functor(Functor(C, C, (0, 1), tuple(range(C.n_arrows))))
    with pytest.raises(StructureError):
        validate_functor(Functor(C, C, (0, 1, 9), tuple(range(C.n_arrows))))


def test_compose_requires_matching_categories():
    with pytest.raises(StructureError):
        compose_functors(identity_functor(triangle()), identity_functor(triangle()))


def test_natural_transformations_into_constant():
    C = triangle()
    I = identity_functor(C)
    K = constant_functor(C, C, 2)
    found = enumerate_natural_transformations(I, K)
    assert len(found) == 1 and validate_natural_transformation(found[0]).valid
    assert enumerate_natural_transformations(K, I) == []


def test_unnatural_family():
    # a family between the two sides of a non-commuting square
    C, D = arrow_category(), square(False)
    F = Functor(C, D, (0, 1), (D.identity(0), D.identity(1), D.arrow_named("f")))
    G = Functor(C, D, (2, 3), (D.identity(2), D.identity(3), D.arrow_named("k")))
    t = NaturalTransformation(F, G, (D.arrow_named("h"), D.arrow_named("g")))
    report = validate_natural_transformation(t)
    assert [v.law for v in report.violations] == ["naturality"]
    assert report.violations[0].detail == (D.arrow_named("kh"), D.arrow_named("gf"))
    assert enumerate_natural_transformations(F, G) == []


def test_component_typing_checked():
    C = arrow_category()
    I, K = identity_functor(C), constant_functor(C, C, 1)
    assert validate_natural_transformation(NaturalTransformation(I, K, (C.arrow_named("f"), C.identity(1)))).valid
    with pytest.raises(StructureError):
        validate_natural_transformation(NaturalTransformation(I, K, (C.identity(0), C.identity(1))))


def test_vertical_composition_checks_middle():
    C = triangle()
    I = identity_functor(C)
    K = constant_functor(C, C, 2)
    t = enumerate_natural_transformations(I, K)[0]
    with pytest.raises(PreconditionError):
        vertical_compose(t, t)
    assert vertical_compose(identity_transformation(I), t) == t
    assert vertical_compose(t, identity_transformation(K)) == t


def test_functor_category():
    FC = functor_category(arrow_category(), triangle())
    assert validate_category(FC).valid
    assert FC.n_objects == triangle().n_arrows
    with pytest.raises(CapExceeded):
        functor_category(triangle(), triangle(), cap=10)


# -- properties ------------------------------------------------------------------

@settings(max_examples=25)
@given(small, small)
def test_enumerated_functors_validate(C, D):
    for F in enumerate_functors(C, D)[:30]:
        assert validate_functor(F).valid


@settings(max_examples=25)
@given(small, small, st.data())
def test_composites_of_functors_validate(C, D, data):
    Fs, Gs = enumerate_functors(C, D), enumerate_functors(D, C)
    assume(Fs and Gs)
    F, G = data.draw(st.sampled_from(Fs)), data.draw(st.sampled_from(Gs))
    GF = compose_functors(G, F)
    assert validate_functor(GF).valid
    assert GF.source is C and GF.target is C


@settings(max_examples=25)
@given(small, small, st.data())
def test_functors_preserve_isomorphisms(C, D, data):
    Fs = enumerate_functors(C, D)
    assume(Fs)
    F = data.draw(st.sampled_from(Fs))
    for f in range(C.n_arrows):
        g = is_isomorphism(C, f)
        if g is not None:
            assert is_isomorphism(D, F.arr(f)) == F.arr(g)


@settings(max_examples=25)
@given(small, small, st.data())
def test_functors_preserve_commutativity(C, D, data):
    Fs = enumerate_functors(C, D)
    assume(Fs)
    F = data.draw(st.sampled_from(Fs))
    pairs = [(g, f) for (g, f) in C.comp if C.dom(f) != C.cod(g)]
    assume(pairs)
    g, f = data.draw(st.sampled_from(sorted(pairs)))
    nodes = {"x": C.dom(f), "y": C.cod(f), "z": C.cod(g)}
    Dg = build_diagram(C, nodes, [("x", "y", f), ("y", "z", g), ("x", "z", C.comp[(g, f)])])
    assert check_commutes(Dg).commutes
    assert check_commutes(image_diagram(Dg, F)).commutes


@settings(max_examples=25)
@given(small, small, st.data())
def test_transformations_compose(C, D, data):
    Fs = enumerate_functors(C, D)
    assume(Fs)
    F, G, H = (data.draw(st.sampled_from(Fs)) for _ in range(3))
    ts, us = enumerate_natural_transformations(F, G), enumerate_natural_transformations(G, H)
    assume(ts and us)
    t, u = data.draw(st.sampled_from(ts)), data.draw(st.sampled_from(us))
    v = vertical_compose(t, u)
    assert validate_natural_transformation(v).valid
    assert v in enumerate_natural_transformations(F, H)


@settings(max_examples=25)
@given(small, small, st.data())
def test_whiskering_is_natural(C, D, data):
    Fs, Ks, Ls = enumerate_functors(C, D), enumerate_functors(D, D), enumerate_functors(D, C)
    assume(Fs and Ks and Ls)
    F, G = data.draw(st.sampled_from(Fs)), data.draw(st.sampled_from(Fs))
    ts = enumerate_natural_transformations(F, G)
    assume(ts)
    t = data.draw(st.sampled_from(ts))
    K, L = data.draw(st.sampled_from(Ks)), data.draw(st.sampled_from(Ls))
    assert validate_natural_transformation(whisker_right(K, t)).valid
    assert validate_natural_transformation(whisker_left(t, L)).valid
