import random

from hypothesis import strategies as st

from catforge.randomcat import random_category


@st.composite
def categories(draw, max_objects=5, max_arrows=20, initial_objects=0):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_category(random.Random(seed), max_objects, max_arrows, initial_objects=initial_objects)


@st.composite
def arrows_of(draw, C):
    return draw(st.integers(0, C.n_arrows - 1))
