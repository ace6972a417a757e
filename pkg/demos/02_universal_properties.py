# %% [markdown]
# Products, exponentials and currying, decided by exhaustive search.

# %%
from catforge.finset import cartesian_window, finset_category, standard_sets
from catforge.universal import (
    canonical_product,
    check_cartesian_closed,
    curry,
    uncurry,
    verify_exponential,
    verify_product,
)
from catforge.zoo import powerset_lattice

# %% Sets {0,1} with all functions: terminal object, products and exponentials.
small = finset_category(standard_sets([0, 1]))
print("cartesian closed:", check_cartesian_closed(small).is_ccc)

# With a 2-element set the category has no S2 x S2, so it is not closed.
report = check_cartesian_closed(finset_category(standard_sets([0, 1, 2])))
print(report.is_ccc, report.failures[:2])

# %% A window adds the pair sets and function spaces it needs.
cw = cartesian_window(standard_sets([0, 1, 2]))
W = cw.category
print(W.n_objects, "objects,", W.n_arrows, "arrows")
S1, S2 = 1, 2
cone = cw.products[(S2, S2)]
print("S2 x S2 is", W.objects[cone.apex], verify_product(W, cone, S2, S2, test_objects=cw.small).holds)
exp = cw.exponentials[(S2, S2)]
print("S2^S2 is", W.objects[exp.exp_object], verify_exponential(W, exp, S2, S2, test_objects=cw.base).holds)

# %% Currying is a bijection hom(X x A, B) -> hom(X, B^A).
P = canonical_product(W, S1, S2, test_objects=cw.base)
for h in W.hom(P.apex, S2)[:4]:
    m = curry(W, exp, S1, h, test_objects=cw.base)
    print(W.describe(h), "->", W.describe(m), uncurry(W, exp, m, test_objects=cw.base) == h)

# %% A Boolean lattice is cartesian closed as a poset: meets and implications.
print("powerset lattice:", check_cartesian_closed(powerset_lattice("abc")).is_ccc)
