# %% [markdown]
# Finite categories as composition tables.
#
# A category here is a finite table: objects, typed arrows, and an entry
# ``g . f`` for every composable pair.  The checker walks the whole table.

# %%
from catforge import find_initial, find_terminal, validate_category
from catforge.finset import finset_category, standard_sets, verify_correspondence_table
from catforge.randomcat import with_composite
from catforge.zoo import triangle

T = triangle()
print(T.objects, [T.describe(f) for f in range(T.n_arrows)])
print("laws hold:", validate_category(T).valid)

# %% Break one entry: claim id_B . f = h.  The report names the offending pair.
f, h = T.arrow_named("f"), T.arrow_named("h")
bad = with_composite(T, (T.identity(1), f), h)
for v in validate_category(bad).violations:
    print(v)

# %% Sets of size 0..3 with every function between them.
Sets = finset_category(standard_sets(range(4)))
print(Sets.n_arrows, "functions")
print("initial:", [Sets.objects[i] for i in find_initial(Sets)])
print("terminal:", [Sets.objects[i] for i in find_terminal(Sets)])
for A in range(4):
    print(" ".join(f"{len(Sets.hom(A, B)):3d}" for B in range(4)))

# %% Monomorphisms are the injections, epimorphisms the surjections.
report = verify_correspondence_table(Sets)
print(dict(report.counts), "disagreements:", len(report.disagreements))
