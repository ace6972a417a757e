"""Random valid finite categories and law-breaking table mutations.

Categories are generated concretely: objects are small sets, arrows are a
composition-closed family of functions between them, so every law holds by
construction and the generator does not depend on the validator it feeds.
"""
from __future__ import annotations

import random

from .category import ArrowRecord, FinCategory


def _close(arrows, max_arrows):
    """Close a set of (dom, cod, mapping) triples under composition."""
    known = set(arrows)
    if len(known) > max_arrows:
        return None
    frontier = list(arrows)
    while frontier:
        new = []
        for a in frontier:
            for b in list(known):
                for f, g in ((a, b), (b, a)):
                    if f[1] != g[0]:
                        continue
                    h = (f[0], g[1], tuple(g[2][x] for x in f[2]))
                    if h not in known:
                        known.add(h)
                        new.append(h)
                        if len(known) > max_arrows:
                            return None
        frontier = new
    return known


def random_category(rng=None, max_objects=5, max_arrows=20, *, initial_objects=0,
                    min_objects=2, attempts=12) -> FinCategory:
    """A random valid category with at most ``max_objects``/``max_arrows``.

    ``initial_objects`` extra empty sets are added together with the empty
    function from each of them to every object, making each one initial.
    Arrow indices are shuffled so identities are not always first.
    """
    rng = rng or random.Random()
    n_plain = rng.randint(min_objects, max(min_objects, max_objects - initial_objects))
    sizes = [rng.randint(1, 3) for _ in range(n_plain)] + [0] * initial_objects
    n = len(sizes)
    arrows = {(A, A, tuple(range(sizes[A]))) for A in range(n)}
    for I in range(n_plain, n):
        for A in range(n):
            arrows.add((I, A, ()))
    if len(arrows) > max_arrows:
        raise ValueError("too many initial objects for the arrow budget")

    for _ in range(rng.randint(0, attempts)):
        A, B = rng.randrange(n_plain), rng.randrange(n_plain)
        gen = (A, B, tuple(rng.randrange(sizes[B]) for _ in range(sizes[A])))
        closed = _close(arrows | {gen}, max_arrows)
        if closed is not None:
            arrows = closed

    order = sorted(arrows)
    rng.shuffle(order)
    index = {a: i for i, a in enumerate(order)}
    records = [ArrowRecord(i, A, B, f"a{i}") for i, (A, B, _) in enumerate(order)]
    identities = [index[(A, A, tuple(range(sizes[A])))] for A in range(n)]
    comp = {}
    for f in order:
        for g in order:
            if f[1] == g[0]:
                comp[(index[g], index[f])] = index[(f[0], g[1], tuple(g[2][x] for x in f[2]))]
    objects = [f"X{i}" if sizes[i] else f"E{i}" for i in range(n)]
    return FinCategory(tuple(objects), tuple(records), tuple(identities), comp)


def with_composite(C: FinCategory, key, value) -> FinCategory:
    comp = dict(C.comp)
    comp[key] = value
    return FinCategory(C.objects, C.arrows, C.identities, comp)


def mutate_composition(C: FinCategory, rng=None):
    """Rebind one composition entry so that some law provably breaks.

    Either an entry with an identity factor is moved off its forced value
    (an identity law fails), or an entry is pointed at an arrow of the
    wrong type (a typing law fails).  Rebinding a non-identity entry inside
    its own hom-set is not used: it can yield another valid category.
    Returns ``(mutated, key, old, new)``.
    """
    rng = rng or random.Random()
    keys = sorted(C.comp)
    while True:
        g, f = key = rng.choice(keys)
        old = C.comp[key]
        if C.is_identity(g) or C.is_identity(f):
            choices = [a for a in range(C.n_arrows) if a != old]
        else:
            choices = [a for a in range(C.n_arrows)
                       if (C.dom(a), C.cod(a)) != (C.dom(f), C.cod(g))]
        if choices:
            new = rng.choice(choices)
            return with_composite(C, key, new), key, old, new
