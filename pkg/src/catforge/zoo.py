"""Small named categories used throughout the tests and demos."""
from __future__ import annotations

from itertools import product

from .category import build_category


def one_object(name="A"):
    return build_category([name])


def discrete(*names):
    return build_category(names or ["A", "B"])


def arrow_category(a="A", b="B", f="f"):
    """Two objects and a single non-identity arrow between them."""
    return build_category([a, b], [(f, a, b)])


def triangle():
    """A, B, C with f: A -> B, g: B -> C and h: A -> C, where g . f = h."""
    return build_category(
        ["A", "B", "C"],
        [("f", "A", "B"), ("g", "B", "C"), ("h", "A", "C")],
        {("g", "f"): "h"},
    )


def chain4():
    """A -> B -> C -> D with every composite named (f, g, h, gf, hg, hgf)."""
    return build_category(
        ["A", "B", "C", "D"],
        [
            ("f", "A", "B"), ("g", "B", "C"), ("h", "C", "D"),
            ("gf", "A", "C"), ("hg", "B", "D"), ("hgf", "A", "D"),
        ],
        {
            ("g", "f"): "gf", ("h", "g"): "hg",
            ("h", "gf"): "hgf", ("hg", "f"): "hgf",
        },
    )


def square(commuting=True):
    """f: A -> B, g: B -> D, h: A -> C, k: C -> D.

    When ``commuting`` is false the two composites A -> D are distinct
    arrows ``gf`` and ``kh``.
    """
    arrows = [("f", "A", "B"), ("g", "B", "D"), ("h", "A", "C"), ("k", "C", "D")]
    if commuting:
        arrows.append(("d", "A", "D"))
        table = {("g", "f"): "d", ("k", "h"): "d"}
    else:
        arrows += [("gf", "A", "D"), ("kh", "A", "D")]
        table = {("g", "f"): "gf", ("k", "h"): "kh"}
    return build_category(["A", "B", "C", "D"], arrows, table)


def isomorphic_pair():
    """P and Q with mutually inverse p: P -> Q and q: Q -> P."""
    return build_category(
        ["P", "Q"],
        [("p", "P", "Q"), ("q", "Q", "P")],
        {("q", "p"): "id_P", ("p", "q"): "id_Q"},
    )


def poset_category(elements, leq):
    """Thin category of a preorder; ``leq(a, b)`` gives the arrow a -> b."""
    elements = list(elements)
    names = [str(e) for e in elements]
    arrows, index = [], {}
    for (i, a), (j, b) in product(enumerate(elements), repeat=2):
        if i != j and leq(a, b):
            name = f"{names[i]}<={names[j]}"
            arrows.append((name, names[i], names[j]))
            index[(i, j)] = name
    for i in range(len(elements)):
        index[(i, i)] = f"id_{names[i]}"
    table = {}
    for (i, j), f in index.items():
        for (j2, k), g in index.items():
            if j2 == j and i != j and j != k:
                table[(g, f)] = index[(i, k)]
    return build_category(names, arrows, table)


def powerset_lattice(universe="ab"):
    """Subsets of ``universe`` ordered by inclusion; a finite Heyting algebra."""
    subsets = []
    for bits in product([0, 1], repeat=len(universe)):
        subsets.append("".join(u for u, b in zip(universe, bits) if b) or "0")

    def leq(a, b):
        return a == "0" or set(a) <= set(b)

    return poset_category(subsets, leq)


def chain(n):
    return poset_category([f"c{i}" for i in range(n)], lambda a, b: int(a[1:]) <= int(b[1:]))
