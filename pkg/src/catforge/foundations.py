"""Lawvere's fixed-point property and universe axioms on hereditarily finite sets.

A point of X is an arrow ``1 -> X`` out of a terminal object.  An arrow
``phi: A -> B^A`` is point-surjective when every point of ``B^A`` factors
through it.  Lawvere's theorem says that if such a phi exists then every
endomorphism of B has a fixed point; in finite sets this is Cantor's
diagonal argument in counting form.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Optional

from . import caps
from .category import FinCategory, ObjectId, find_terminal
from .errors import CapExceeded, MissingStructureError, PreconditionError, StructureError
from .finset import FinSetObject, finite_set, finset_window, function_space


# -- Lawvere ------------------------------------------------------------------

def _terminal(C, terminal):
    if terminal is not None:
        return terminal
    found = find_terminal(C)
    if not found:
        raise MissingStructureError("category has no terminal object, so no points")
    return found[0]


def _exp_object(e):
    return e if isinstance(e, int) else e.exp_object


def points(C: FinCategory, X: ObjectId, *, terminal: Optional[ObjectId] = None) -> list:
    return C.hom(_terminal(C, terminal), X)


def check_point_surjective(C: FinCategory, phi, *, terminal: Optional[ObjectId] = None,
                           exponential=None) -> bool:
    """Does every point ``q: 1 -> cod(phi)`` equal ``phi . p`` for a point p of dom(phi)?

    ``exponential`` (an ObjectId or ExponentialData) makes the typing
    ``phi: A -> B^A`` explicit and is checked against phi's codomain.
    """
    if not 0 <= phi < C.n_arrows:
        raise StructureError(f"arrow {phi} is out of range")
    if exponential is not None and C.cod(phi) != _exp_object(exponential):
        raise StructureError(f"{C.describe(phi)} does not land in the given exponential")
    T = _terminal(C, terminal)
    reached = {C.comp[(phi, p)] for p in C.hom(T, C.dom(phi))}
    return all(q in reached for q in C.hom(T, C.cod(phi)))


@dataclass(frozen=True)
class FixedPointReport:
    point_surjections: tuple            # (A, B, phi)
    fixed_points: dict                  # (phi, g) -> point b with g . b = b
    violations: tuple                   # (A, B, phi, g) with no fixed point
    checked: int = 0                    # arrows phi examined

    @property
    def valid(self) -> bool:
        return not self.violations


def lawvere_fixed_point_check(C: FinCategory, exponentials=None, *,
                              terminal: Optional[ObjectId] = None) -> FixedPointReport:
    """Sweep every ``phi: A -> B^A`` and every ``g: B -> B``.

    ``exponentials`` maps ``(A, B)`` to the object ``B^A`` (an ObjectId or
    ExponentialData).  Without it the category must verify as cartesian
    closed and its exponential table is used.
    """
    if exponentials is None:
        from .universal import check_cartesian_closed
        report = check_cartesian_closed(C)
        if not report.is_ccc:
            raise PreconditionError(f"not cartesian closed: {report.failures[0]}")
        exponentials = report.exp_table
    T = _terminal(C, terminal)
    surj, fixed, bad, checked = [], {}, [], 0
    for (A, B) in sorted(exponentials):
        E = _exp_object(exponentials[(A, B)])
        for phi in C.hom(A, E):
            checked += 1
            if not check_point_surjective(C, phi, terminal=T):
                continue
            surj.append((A, B, phi))
            for g in C.hom(B, B):
                b = next((b for b in C.hom(T, B) if C.comp[(g, b)] == b), None)
                if b is None:
                    bad.append((A, B, phi, g))
                else:
                    fixed[(phi, g)] = b
    return FixedPointReport(tuple(surj), fixed, tuple(bad), checked)


def surjection_count(n: int, k: int) -> int:
    """Number of surjections from an n-set onto a k-set."""
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))


@dataclass(frozen=True)
class CantorReport:
    size_a: int
    size_b: int
    exponent_size: int                  # |B|^|A|
    impossible: bool                    # no point-surjection A -> B^A can exist
    expected: int                       # surjections A -> B^A by counting
    found: Optional[int]                # point-surjective arrows found by search
    agrees: bool


def cantor_obstruction(A: FinSetObject, B: FinSetObject, *, cap: Optional[int] = None) -> CantorReport:
    """Counting bound against exhaustive search for ``phi: A -> B^A``.

    Points of a finite set are its elements, so a point-surjection is a
    surjection and exists exactly when ``|B|^|A| <= |A|`` and the
    exponential is nonempty or A is empty.  The search is skipped (``found``
    is None) when the window holding ``A -> B^A`` would exceed the caps.
    """
    a, b = len(A), len(B)
    e = b ** a
    expected = surjection_count(a, e)
    found = None
    if e ** a <= caps.resolve(cap, caps.SEARCH):
        # only arrows out of A and out of the point need to be complete
        a_set, b_set = FinSetObject("A", A.elements), FinSetObject("B", B.elements)
        E = function_space(a_set, b_set)[0]
        try:
            W = finset_window([a_set, finite_set("One", 1)], [b_set, E], cap=cap)
        except CapExceeded:
            W = None
        if W is not None:
            found = sum(check_point_surjective(W, phi, terminal=1, exponential=3) for phi in W.hom(0, 3))
    impossible = expected == 0
    agrees = found is None or (found == expected and (found == 0) == impossible)
    return CantorReport(a, b, e, impossible, expected, found, agrees)


# -- hereditarily finite sets -----------------------------------------------------

class HFSetSyntaxError(ValueError):
    def __init__(self, message, column):
        self.column = column
        super().__init__(f"{message} at column {column}")


@dataclass(frozen=True)
class HFSet:
    """A hereditarily finite set; equality is extensional."""

    children: frozenset = frozenset()

    @cached_property
    def rank(self) -> int:
        return 1 + max(c.rank for c in self.children) if self.children else 0

    @cached_property
    def key(self) -> tuple:
        """Canonical sort key: rank, then the sorted keys of the children."""
        return (self.rank, tuple(sorted(c.key for c in self.children)))

    def sorted_children(self) -> list:
        return sorted(self.children, key=lambda c: c.key)

    def __lt__(self, other):
        return self.key < other.key

    def __str__(self):
        return "{" + ",".join(str(c) for c in self.sorted_children()) + "}"

    __repr__ = __str__

    def __contains__(self, x):
        return x in self.children

    def __len__(self):
        return len(self.children)

    def __iter__(self):
        return iter(self.sorted_children())

    @classmethod
    def of(cls, *xs) -> "HFSet":
        return cls(frozenset(xs))

    def power_set(self) -> "HFSet":
        kids = self.sorted_children()
        return HFSet(frozenset(HFSet(frozenset(s)) for r in range(len(kids) + 1)
                               for s in combinations(kids, r)))

    def union(self) -> "HFSet":
        return HFSet(frozenset(y for x in self.children for y in x.children))

    @classmethod
    def parse(cls, text: str) -> "HFSet":
        """Read nested-brace notation such as ``{{},{{}}}``."""
        pos = 0

        def skip():
            nonlocal pos
            while pos < len(text) and text[pos].isspace():
                pos += 1

        def one():
            nonlocal pos
            skip()
            if pos >= len(text) or text[pos] != "{":
                raise HFSetSyntaxError("expected '{'", pos + 1)
            pos += 1
            kids = []
            skip()
            if pos < len(text) and text[pos] == "}":
                pos += 1
                return cls()
            while True:
                kids.append(one())
                skip()
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                elif pos < len(text) and text[pos] == "}":
                    pos += 1
                    return cls(frozenset(kids))
                else:
                    raise HFSetSyntaxError("expected ',' or '}'", pos + 1)

        result = one()
        skip()
        if pos != len(text):
            raise HFSetSyntaxError("trailing input", pos + 1)
        return result


EMPTY = HFSet()


def von_neumann(n: int) -> HFSet:
    x = EMPTY
    for _ in range(n):
        x = HFSet(x.children | {x})
    return x


def cumulative_hierarchy(n: int) -> list:
    """``V_n``, the HF sets of rank below n, in canonical order."""
    level = EMPTY
    for _ in range(n):
        level = level.power_set()
    return level.sorted_children()


def sets_of_rank_at_most(r: int) -> list:
    return cumulative_hierarchy(r + 1)


# -- universe axioms ---------------------------------------------------------------

@dataclass(frozen=True)
class AxiomResult:
    holds: bool
    witness: Optional[tuple] = None     # HF sets showing the failure

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class UniverseReport:
    pairing: AxiomResult
    transitivity: AxiomResult
    power_set: AxiomResult
    indexed_union: AxiomResult
    size: int = 0

    def axioms(self) -> dict:
        return {"pairing": self.pairing, "transitivity": self.transitivity,
                "power_set": self.power_set, "indexed_union": self.indexed_union}

    @property
    def is_universe(self) -> bool:
        return all(self.axioms().values())


def _pairing(U, members):
    for i, x in enumerate(U):
        for y in U[i:]:
            if HFSet.of(x, y) not in members:
                return AxiomResult(False, (x, y))
    return AxiomResult(True)


def _transitivity(U, members):
    for x in U:
        for y in x:
            if y not in members:
                return AxiomResult(False, (x, y))
    return AxiomResult(True)


def _power_set(U, members):
    for x in U:
        if x.power_set() not in members:
            return AxiomResult(False, (x,))
    return AxiomResult(True)


def _indexed_union(U, members):
    """Every family ``a |-> x_a`` over the elements of some ``I`` in U.

    Families are explored by the set of unions they reach: after assigning j
    indices only the union so far matters, so the search keeps the first
    family reaching each partial union.  Witness: ``(I, x_1, ..., x_k)``.
    """
    for I in U:
        k = len(I)
        if k == 0:
            if EMPTY not in members:
                return AxiomResult(False, (I,))
            continue
        frontier = {EMPTY: ()}
        for _ in range(k):
            nxt = {}
            for acc, fam in frontier.items():
                for x in U:
                    u = HFSet(acc.children | x.children)
                    if u not in nxt:
                        nxt[u] = fam + (x,)
            frontier = nxt
        for u in sorted(frontier, key=lambda s: s.key):
            if u not in members:
                return AxiomResult(False, (I,) + frontier[u])
    return AxiomResult(True)


def check_universe_axioms(U, *, rank_cap: Optional[int] = None) -> UniverseReport:
    """Evaluate the four closure axioms on a finite collection of HF sets.

    Elements are examined in canonical order, so each witness is the first
    failure in that order.  Elements above the rank cap are refused.
    """
    cap = caps.resolve(rank_cap, caps.UNIVERSE_RANK)
    members = frozenset(U)
    ordered = sorted(members, key=lambda s: s.key)
    for x in ordered:
        if x.rank > cap:
            raise CapExceeded("element rank", x.rank, cap)
    return UniverseReport(
        pairing=_pairing(ordered, members),
        transitivity=_transitivity(ordered, members),
        power_set=_power_set(ordered, members),
        indexed_union=_indexed_union(ordered, members),
        size=len(members),
    )
