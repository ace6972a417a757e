"""Diagrams over a finite category and path-independence checking."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Optional

from .category import ArrowId, FinCategory
from .errors import CycleError, StructureError


class EdgeTypingError(StructureError):
    def __init__(self, index, edge, message):
        self.index = index
        self.edge = edge
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Diagram:
    category: FinCategory
    nodes: tuple   # (node id, ObjectId)
    edges: tuple   # (source node, target node, ArrowId)

    @property
    def labels(self) -> dict:
        return dict(self.nodes)

    def node_ids(self) -> list:
        return [n for n, _ in self.nodes]


@dataclass(frozen=True)
class Conflict:
    source: Hashable
    target: Hashable
    path1: tuple   # edge indices in travel order
    path2: tuple
    composite1: ArrowId
    composite2: ArrowId


@dataclass(frozen=True)
class CommutativityReport:
    conflicts: tuple = ()

    @property
    def commutes(self) -> bool:
        return not self.conflicts

    def __bool__(self):
        return self.commutes


def build_diagram(C: FinCategory, nodes, edges) -> Diagram:
    """Validate labels and edge typing.

    ``nodes`` is a mapping or an iterable of ``(node id, ObjectId)``;
    ``edges`` an iterable of ``(source node, target node, ArrowId)``.
    """
    nodes = tuple(nodes.items()) if hasattr(nodes, "items") else tuple(tuple(n) for n in nodes)
    labels = {}
    for node, obj in nodes:
        if node in labels:
            raise StructureError(f"duplicate node {node!r}")
        if not 0 <= obj < C.n_objects:
            raise StructureError(f"node {node!r} labelled by unknown object {obj}")
        labels[node] = obj
    edges = tuple(tuple(e) for e in edges)
    for i, (s, t, f) in enumerate(edges):
        if s not in labels or t not in labels:
            raise EdgeTypingError(i, (s, t, f), f"edge {i} joins unknown nodes {s!r} -> {t!r}")
        if not 0 <= f < C.n_arrows:
            raise EdgeTypingError(i, (s, t, f), f"edge {i} labelled by unknown arrow {f}")
        if C.dom(f) != labels[s] or C.cod(f) != labels[t]:
            raise EdgeTypingError(
                i, (s, t, f),
                f"edge {i} {s!r} -> {t!r} is labelled {C.describe(f)} but joins "
                f"{C.objects[labels[s]]} -> {C.objects[labels[t]]}",
            )
    return Diagram(C, nodes, edges)


def _live_edges(D: Diagram):
    # identity self-loops never change a composite
    C = D.category
    return [(i, s, t, f) for i, (s, t, f) in enumerate(D.edges)
            if not (s == t and C.is_identity(f))]


def _has_cycle(D: Diagram) -> bool:
    succ = {n: [] for n in D.node_ids()}
    for _, s, t, _ in _live_edges(D):
        succ[s].append(t)
    state = {}

    def visit(n):
        state[n] = 1
        for m in succ[n]:
            if state.get(m) == 1 or (m not in state and visit(m)):
                return True
        state[n] = 2
        return False

    return any(n not in state and visit(n) for n in succ)


def _paths_from(D: Diagram, src, max_length: Optional[int]):
    """Map each reachable node to its list of (edge path, composite)."""
    if max_length is None:
        if _has_cycle(D):
            raise CycleError("diagram has a directed cycle; pass max_length to bound paths")
        max_length = len(D.edges)
    C = D.category
    succ = {}
    for i, s, t, f in _live_edges(D):
        succ.setdefault(s, []).append((i, t, f))
    found = {src: [((), C.identity(D.labels[src]))]}
    stack = [(src, (), C.identity(D.labels[src]))]
    while stack:
        node, path, acc = stack.pop()
        if len(path) >= max_length:
            continue
        for i, t, f in succ.get(node, ()):
            step = (path + (i,), C.compose(f, acc))
            found.setdefault(t, []).append(step)
            stack.append((t,) + step)
    for paths in found.values():
        paths.sort(key=lambda p: (len(p[0]), p[0]))
    return found


def enumerate_paths(D: Diagram, src, dst, max_length: Optional[int] = None) -> list:
    """Every directed path src -> dst as ``(edge indices, composite arrow)``.

    The empty path at ``src == dst`` contributes the identity.  Paths are
    ordered by length, then by edge indices.
    """
    for n in (src, dst):
        if n not in D.labels:
            raise StructureError(f"unknown node {n!r}")
    return _paths_from(D, src, max_length).get(dst, [])


def enumerate_path_composites(D: Diagram, src, dst, max_length: Optional[int] = None) -> list:
    return [c for _, c in enumerate_paths(D, src, dst, max_length)]


def check_commutes(D: Diagram, max_length: Optional[int] = None) -> CommutativityReport:
    """A diagram commutes when all paths between each node pair agree.

    Each disagreeing pair yields one conflict: its shortest path against the
    shortest path with a different composite.
    """
    conflicts = []
    for src in D.node_ids():
        for dst, paths in _paths_from(D, src, max_length).items():
            first, c0 = paths[0]
            for path, c in paths[1:]:
                if c != c0:
                    conflicts.append(Conflict(src, dst, first, path, c0, c))
                    break
    conflicts.sort(key=lambda k: (str(k.source), str(k.target)))
    return CommutativityReport(tuple(conflicts))


def image_diagram(D: Diagram, F) -> Diagram:
    """Push a diagram forward along a functor."""
    nodes = [(n, F.object_map[o]) for n, o in D.nodes]
    edges = [(s, t, F.arrow_map[f]) for s, t, f in D.edges]
    return build_diagram(F.target, nodes, edges)


def describe_path(D: Diagram, path) -> str:
    C = D.category
    if not path:
        return "(empty path)"
    return " ; ".join(C.name(D.edges[i][2]) for i in path)
