# %% [markdown]
# Lawvere's fixed-point argument on finite sets, and finite "universes".

# %%
from catforge.finset import finite_set, function_space_window, standard_sets
from catforge.foundations import (
    HFSet,
    cantor_obstruction,
    check_universe_axioms,
    lawvere_fixed_point_check,
    sets_of_rank_at_most,
)

W, exps = function_space_window(standard_sets(range(4)))
report = lawvere_fixed_point_check(W, exps, terminal=1)
print(report.checked, "arrows A -> B^A examined")
print("point-surjective (|A|, |B|):", sorted({(a, b) for a, b, _ in report.point_surjections}))
print("violations:", len(report.violations))

# %% Only |B| = 1 admits a point-surjection, so every endomorphism of B has a
# fixed point there.  For |B| = 2 counting rules it out, and search agrees.
for a in range(4):
    r = cantor_obstruction(finite_set("A", a), finite_set("B", 2))
    print(a, r.exponent_size, r.expected, r.found)

# %% Hereditarily finite sets and the universe axioms.
V2 = sets_of_rank_at_most(2)
print([str(x) for x in V2])
u = check_universe_axioms(V2)
for name, res in u.axioms().items():
    print(f"{name:14s} {res.holds} {[str(w) for w in res.witness or ()]}")

print(check_universe_axioms([]).is_universe)
print(check_universe_axioms([HFSet.parse("{}")]).pairing.witness)
