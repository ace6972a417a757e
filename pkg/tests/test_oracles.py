"""Library results against frozen values from the independent oracles."""
import pytest

import oracles as o
from catforge.finset import finset_category, standard_sets, verify_correspondence_table
from catforge.foundations import (
    cantor_obstruction,
    check_universe_axioms,
    cumulative_hierarchy,
    surjection_count,
)
from catforge.finset import finite_set
from catforge.functor import enumerate_functors, enumerate_natural_transformations, functor_category
from catforge.universal import find_products
from catforge.zoo import arrow_category, chain

# Frozen from tests/oracles.py; test_frozen_values_match_oracles guards drift.
FROZEN = {
    "classification_0123": (60, 24, 18, 10),
    "surjections": [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 1, 2, 0, 0], [0, 1, 6, 6, 0], [0, 1, 14, 36, 24]],
    "lawvere_phis_0123": 20304,
    "point_surjection_pairs_0123": [(1, 1), (2, 1), (3, 1)],
    "monotone": [[1, 2, 3, 4], [1, 3, 6, 10], [1, 4, 10, 20], [1, 5, 15, 35]],
    "product_cones_012": {(0, 0): 1, (0, 1): 1, (0, 2): 1, (1, 0): 1, (1, 1): 1,
                          (1, 2): 2, (2, 0): 1, (2, 1): 2, (2, 2): 0},
    "arrow_squares_01": (3, 6),
    "universe": {
        "V3": (False, True, False, True),
        "V4": (False, True, False, True),
        "empty": (True, True, True, True),
        "V1": (False, True, False, True),
    },
}


def test_frozen_values_match_oracles():
    assert o.classification_counts([0, 1, 2, 3]) == FROZEN["classification_0123"]
    assert [[o.surjections(n, k) for k in range(5)] for n in range(5)] == FROZEN["surjections"]
    assert [[o.surjections_formula(n, k) for k in range(5)] for n in range(5)] == FROZEN["surjections"]
    assert o.lawvere_phi_count(range(4)) == FROZEN["lawvere_phis_0123"]
    assert o.point_surjection_pairs(range(4)) == FROZEN["point_surjection_pairs_0123"]
    assert [[o.monotone_maps(n, m) for m in range(1, 5)] for n in range(1, 5)] == FROZEN["monotone"]
    assert {(a, b): o.product_cone_count(a, b, [0, 1, 2])
            for a in range(3) for b in range(3)} == FROZEN["product_cones_012"]
    assert o.commuting_squares([0, 1]) == FROZEN["arrow_squares_01"]
    for key, k in (("V3", 3), ("V4", 4), ("V1", 1)):
        assert tuple(o.universe_axioms(o.hierarchy(k)).values()) == FROZEN["universe"][key]
    assert tuple(o.universe_axioms([]).values()) == FROZEN["universe"]["empty"]


def test_cone_formula_matches_brute_force():
    for a in range(3):
        for b in range(3):
            assert o.count_cones_by_brute_force(a, b, a * b) == o.product_cone_count(a, b, [a * b])


def test_classification_counts():
    C = finset_category(standard_sets(range(4)))
    report = verify_correspondence_table(C)
    tally = dict(report.counts)
    n, mono, epi, iso = FROZEN["classification_0123"]
    assert report.checked == n
    assert (tally["mono"], tally["epi"], tally["iso"]) == (mono, epi, iso)
    assert (tally["injective"], tally["surjective"], tally["bijective"]) == (mono, epi, iso)


def test_surjection_count():
    for n, row in enumerate(FROZEN["surjections"]):
        assert [surjection_count(n, k) for k in range(5)] == row


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 5) for m in range(1, 5)])
def test_functors_between_chains_are_monotone_maps(n, m):
    assert len(enumerate_functors(chain(n), chain(m))) == FROZEN["monotone"][n - 1][m - 1]


def test_product_cone_counts():
    C = finset_category(standard_sets(range(3)))
    for (a, b), k in FROZEN["product_cones_012"].items():
        assert len(find_products(C, a, b)) == k


def test_arrow_category_into_finset():
    C = finset_category(standard_sets([0, 1]))
    functors = enumerate_functors(arrow_category(), C)
    n_functors, n_transformations = FROZEN["arrow_squares_01"]
    assert len(functors) == n_functors
    total = sum(len(enumerate_natural_transformations(F, G)) for F in functors for G in functors)
    assert total == n_transformations
    assert functor_category(arrow_category(), C).n_arrows == n_transformations


def test_cantor_counts():
    for a in range(4):
        for b in range(4):
            r = cantor_obstruction(finite_set("A", a), finite_set("B", b))
            assert r.expected == surjection_count(a, b ** a)
            assert ((a, b) in FROZEN["point_surjection_pairs_0123"]) == (not r.impossible)
            if r.found is not None:
                assert r.found == r.expected


def test_universe_flags():
    def flags(U):
        r = check_universe_axioms(U)
        return (r.pairing.holds, r.transitivity.holds, r.power_set.holds, r.indexed_union.holds)

    assert flags(cumulative_hierarchy(3)) == FROZEN["universe"]["V3"]
    assert flags(cumulative_hierarchy(4)) == FROZEN["universe"]["V4"]
    assert flags(cumulative_hierarchy(1)) == FROZEN["universe"]["V1"]
    assert flags([]) == FROZEN["universe"]["empty"]


def test_hierarchy_sizes_match_tower():
    for k in range(5):
        assert len(cumulative_hierarchy(k)) == o.tower(k)
