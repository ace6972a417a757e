import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catforge import (
    CompositionError,
    IncompleteTableError,
    InconsistencyError,
    PreconditionError,
    StructureError,
    are_isomorphic,
    build_category,
    compose,
    find_initial,
    find_terminal,
    hom_set,
    is_isomorphism,
    unique_iso_between_initials,
    validate_category,
)
from catforge.category import ArrowRecord, FinCategory
from catforge.randomcat import mutate_composition, random_category, with_composite
from catforge.zoo import (
    arrow_category,
    chain,
    chain4,
    discrete,
    isomorphic_pair,
    one_object,
    powerset_lattice,
    square,
    triangle,
)
from strategies import categories

ZOO = [one_object(), discrete(), arrow_category(), triangle(), chain4(), square(), square(False),
       isomorphic_pair(), chain(4), powerset_lattice("abc")]


@pytest.mark.parametrize("C", ZOO, ids=lambda C: "-".join(C.objects))
def test_zoo_is_valid(C):
    assert validate_category(C).valid


def test_triangle_composite():
    C = triangle()
    f, g, h = (C.arrow_named(n) for n in "fgh")
    assert compose(C, g, f) == h
    assert C.compose_path([f, g]) == h
    assert list(hom_set(C, C.object_named("A"), C.object_named("C"))) == [h]


def test_compose_rejects_mismatched_arrows():
    C = triangle()
    with pytest.raises(CompositionError):
        compose(C, C.arrow_named("f"), C.arrow_named("g"))


def test_compose_rejects_unknown_arrow():
    with pytest.raises(StructureError):
        compose(triangle(), 99, 0)


def test_incomplete_table_lists_missing_pairs():
    with pytest.raises(IncompleteTableError) as e:
        build_category(["A", "B", "C"], [("f", "A", "B"), ("g", "B", "C"), ("h", "A", "C")])
    assert ("g", "f") in e.value.missing


def test_duplicate_names_rejected():
    with pytest.raises(StructureError):
        build_category(["A", "A"])
    with pytest.raises(StructureError):
        build_category(["A"], [("f", "A", "A"), ("f", "A", "A")])


def test_structure_bounds_checked():
    with pytest.raises(StructureError):
        FinCategory(("A",), (ArrowRecord(0, 0, 1, "x"),), (0,), {})
    with pytest.raises(StructureError):
        FinCategory(("A",), (ArrowRecord(0, 0, 0, "x"),), (0,), {(0, 0): 5})


def test_broken_identity_is_reported_with_witness():
    C = triangle()
    f = C.arrow_named("f")
    idB = C.identity(C.object_named("B"))
    bad = with_composite(C, (idB, f), C.arrow_named("h"))
    report = validate_category(bad)
    assert not report.valid
    assert any(v.witness[:2] == (idB, f) or f in v.witness for v in report.violations)


def test_non_associative_table_detected():
    C = build_category(["M"], [("a", "M", "M"), ("b", "M", "M")],
                       {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"})
    report = validate_category(C)
    assert "associativity" in report.laws()
    v = next(v for v in report.violations if v.law == "associativity")
    h, g, f = v.witness
    lhs, rhs = v.detail
    assert C.comp[(h, C.comp[(g, f)])] == lhs and C.comp[(C.comp[(h, g)], f)] == rhs
    assert lhs != rhs


def test_isomorphisms():
    C = isomorphic_pair()
    p, q = C.arrow_named("p"), C.arrow_named("q")
    assert is_isomorphism(C, p) == q
    assert is_isomorphism(C, q) == p
    assert are_isomorphic(C, 0, 1) == p
    assert is_isomorphism(triangle(), triangle().arrow_named("f")) is None
    assert are_isomorphic(arrow_category(), 0, 1) is None


def test_initial_and_terminal_in_zoo():
    C = triangle()
    assert find_initial(C) == [C.object_named("A")]
    assert find_terminal(C) == [C.object_named("C")]
    assert find_initial(discrete()) == []
    L = powerset_lattice("ab")
    assert [L.objects[X] for X in find_initial(L)] == ["0"]
    assert [L.objects[X] for X in find_terminal(L)] == ["ab"]


def test_unique_iso_between_initials():
    C = isomorphic_pair()
    tau = unique_iso_between_initials(C, 0, 1)
    assert tau == C.arrow_named("p")
    assert unique_iso_between_initials(C, 0, 0) == C.identity(0)
    with pytest.raises(PreconditionError):
        unique_iso_between_initials(triangle(), 0, 1)


def test_unique_iso_detects_non_invertible_arrow():
    # both objects have exactly one arrow to everything, but q.p is not the identity
    C = build_category(["P", "Q"], [("p", "P", "Q"), ("q", "Q", "P"), ("e", "P", "P"), ("e2", "Q", "Q")],
                       {("q", "p"): "e", ("p", "q"): "e2", ("e", "e"): "e", ("e2", "e2"): "e2",
                        ("p", "e"): "p", ("e2", "p"): "p", ("q", "e2"): "q", ("e", "q"): "q"})
    assert find_initial(C) == []
    with pytest.raises(PreconditionError):
        unique_iso_between_initials(C, 0, 1)


def test_inverse_uniqueness_guard():
    C = isomorphic_pair()
    # two different inverses cannot occur in a lawful category; force one
    bad = FinCategory(C.objects, C.arrows + (ArrowRecord(4, 1, 0, "q2"),), C.identities,
                      {**C.comp, (4, 2): 0, (2, 4): 1})
    with pytest.raises(InconsistencyError):
        is_isomorphism(bad, C.arrow_named("p"))


# -- properties ------------------------------------------------------------------

@given(categories())
def test_random_categories_are_valid(C):
    assert C.n_objects <= 5 and C.n_arrows <= 20
    assert validate_category(C).valid


@given(categories())
def test_hom_sets_partition_arrows(C):
    seen = sorted(f for A in range(C.n_objects) for B in range(C.n_objects) for f in C.hom(A, B))
    assert seen == list(range(C.n_arrows))


@given(categories(), st.data())
def test_identities_are_neutral(C, data):
    f = data.draw(st.integers(0, C.n_arrows - 1))
    assert compose(C, f, C.identity(C.dom(f))) == f
    assert compose(C, C.identity(C.cod(f)), f) == f


@given(categories(), st.data())
def test_inverse_is_symmetric(C, data):
    f = data.draw(st.integers(0, C.n_arrows - 1))
    g = is_isomorphism(C, f)
    if g is not None:
        assert is_isomorphism(C, g) == f


@given(categories(), st.integers(0, 2**32 - 1))
def test_mutation_is_detected(C, seed):
    bad, key, old, new = mutate_composition(C, random.Random(seed))
    report = validate_category(bad)
    assert not report.valid
    # the rebound entry itself is named: as a mistyped composite or as a broken identity law
    assert any(v.witness == key or (v.law.endswith("identity") and v.witness[0] in key)
               for v in report.violations)


@given(categories(initial_objects=2))
def test_initial_objects_are_uniquely_isomorphic(C):
    initial = find_initial(C)
    assert len(initial) >= 2
    for I in initial:
        for J in initial:
            tau = unique_iso_between_initials(C, I, J)
            assert C.hom(I, J) == (tau,) and len(C.hom(J, I)) == 1


def test_random_category_is_reproducible():
    a = random_category(random.Random(7))
    b = random_category(random.Random(7))
    assert a.arrows == b.arrows and dict(a.comp) == dict(b.comp)
