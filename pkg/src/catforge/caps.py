import os
from contextlib import contextmanager

ENV_VAR = "CATFORGE_CAP"

FINSET_ARROWS = 100_000
SEARCH = 2_000_000
FUNCTORS = 100_000
FUNCTOR_CATEGORY_INPUT = 400
UNIVERSE_RANK = 4


_override = None


@contextmanager
def override(value):
    """Use ``value`` for every cap not given explicitly, within the block."""
    global _override
    saved, _override = _override, value
    try:
        yield
    finally:
        _override = saved


def resolve(explicit, default):
    """Pick the explicit cap, else an active override, else the environment, else the default."""
    if explicit is not None:
        return int(explicit)
    if _override is not None:
        return int(_override)
    env = os.environ.get(ENV_VAR)
    if env:
        return int(env)
    return default
