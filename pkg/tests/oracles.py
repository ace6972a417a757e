"""Independent oracles.  Nothing here imports catforge.

Functions are tuples of images; hereditarily finite sets use the Ackermann
coding (n codes the set of codes of its set bits).
"""
from itertools import combinations, permutations, product
from math import comb, factorial


def functions(a, b):
    return list(product(range(b), repeat=a))


def then(f, g):
    return tuple(g[x] for x in f)


def is_mono(f, a, b, sizes):
    for x in sizes:
        for g, h in product(functions(x, a), repeat=2):
            if g != h and then(g, f) == then(h, f):
                return False
    return True


def is_epi(f, a, b, sizes):
    for y in sizes:
        for g, h in product(functions(b, y), repeat=2):
            if g != h and then(f, g) == then(f, h):
                return False
    return True


def is_bijective(f, a, b):
    return a == b and len(set(f)) == b


def classification_counts(sizes):
    """(arrows, mono, epi, iso) over all functions between the given sizes."""
    n = mono = epi = iso = 0
    for a in sizes:
        for b in sizes:
            for f in functions(a, b):
                n += 1
                mono += is_mono(f, a, b, sizes)
                epi += is_epi(f, a, b, sizes)
                iso += is_bijective(f, a, b)
    return n, mono, epi, iso


def finset_arrow_count(sizes):
    return sum(b ** a for a in sizes for b in sizes)


def product_cone_count(a, b, sizes):
    """Product cones over sets of sizes a, b whose apex is among ``sizes``.

    A cone (P, p1, p2) is a product exactly when x -> (p1 x, p2 x) is a
    bijection P -> A x B, so each apex of size ab carries (ab)! cones.
    """
    return sum(factorial(a * b) for p in sizes if p == a * b)


def count_cones_by_brute_force(a, b, p):
    count = 0
    for p1 in functions(p, a):
        for p2 in functions(p, b):
            pairs = list(zip(p1, p2))
            if len(set(pairs)) == p and p == a * b:
                count += 1
    return count


def surjections(n, k):
    return sum(1 for f in functions(n, k) if set(f) == set(range(k)))


def surjections_formula(n, k):
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))


def lawvere_phi_count(sizes):
    """Arrows ``A -> B^A`` over all pairs of the given sizes."""
    return sum((b ** a) ** a for a in sizes for b in sizes)


def point_surjection_pairs(sizes):
    """Pairs (a, b) admitting a surjection from an a-set onto the b^a-set."""
    return sorted((a, b) for a in sizes for b in sizes
                  if any(set(f) == set(range(b ** a)) for f in functions(a, b ** a)))


def monotone_maps(n, m):
    """Functors between the chains 0 < ... < n-1 and 0 < ... < m-1."""
    return sum(1 for f in product(range(m), repeat=n) if all(f[i] <= f[i + 1] for i in range(n - 1)))


def commuting_squares(sizes):
    """Natural transformations between functors out of the arrow category.

    Such a functor picks a function u: A -> B; a transformation from u to
    v: C -> D is a pair (s: A -> C, t: B -> D) with v . s = t . u.
    """
    arrows = [(a, b, f) for a in sizes for b in sizes for f in functions(a, b)]
    total = 0
    for a, b, u in arrows:
        for c, d, v in arrows:
            for s in functions(a, c):
                for t in functions(b, d):
                    total += then(s, v) == then(u, t)
    return len(arrows), total


# -- hereditarily finite sets by Ackermann coding -------------------------------

def members(n):
    return [i for i in range(n.bit_length()) if n >> i & 1]


def code(elements):
    return sum(1 << e for e in set(elements))


def rank(n):
    return 0 if n == 0 else 1 + max(rank(m) for m in members(n))


def tower(k):
    t = 0
    for _ in range(k):
        t = 1 << t
    return t


def hierarchy(k):
    """Codes of V_k, the sets of rank below k: exactly 0 .. 2^^k - 1."""
    return list(range(tower(k)))


def powerset_code(n):
    ms = members(n)
    return code(code(s) for r in range(len(ms) + 1) for s in combinations(ms, r))


def universe_axioms(U):
    """Which of pairing, transitivity, power set, indexed union hold on U."""
    S = set(U)
    pairing = all(code([x, y]) in S for x in U for y in U)
    transitive = all(m in S for x in U for m in members(x))
    power = all(powerset_code(x) in S for x in U)
    union = True
    for I in U:
        k = len(members(I))
        for fam in product(U, repeat=k):
            u = 0
            for x in fam:
                u |= x
            if u not in S:
                union = False
    return {"pairing": pairing, "transitivity": transitive, "power_set": power, "indexed_union": union}


def permutation_count(n):
    return len(list(permutations(range(n))))
