# %% [markdown]
# The adjunction (- x Y) -| (-)^Y among sets of size at most 2.

# %%
from catforge.adjunction import (
    AdjointSituation,
    compose_adjunctions,
    failing_objects,
    product_exponential_adjunction,
    verify_adjoint_situation,
)
from catforge.finset import finset_category, standard_sets
from catforge.functor import NaturalTransformation
from catforge.errors import MissingStructureError

Sets = finset_category(standard_sets(range(3)))
S = product_exponential_adjunction(Sets, 1)
print("F:", [Sets.objects[x] for x in S.F.object_map])
print("G:", [Sets.objects[x] for x in S.G.object_map])
print("triangle identities hold:", verify_adjoint_situation(S).valid)

# %% Swap one unit component for another arrow of the same type.
X = 2
c = S.unit.components[X]
other = next(a for a in Sets.hom(Sets.dom(c), Sets.cod(c)) if a != c)
comps = list(S.unit.components)
comps[X] = other
bad = AdjointSituation(S.F, S.G, NaturalTransformation(S.unit.F, S.unit.G, tuple(comps)), S.counit)
report = verify_adjoint_situation(bad)
print("fails at:", failing_objects(report))

# %% Adjunctions compose.
print("composite verifies:", verify_adjoint_situation(compose_adjunctions(S, S)).valid)

# %% For Y = S2 the product S2 x S2 would be needed and is missing.
try:
    product_exponential_adjunction(Sets, 2)
except MissingStructureError as e:
    print("Y = S2:", e)
