"""Weak order, rotations, the permutree lattice and refinement projections."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import (
    Decoration,
    EdgeCut,
    Permutree,
    as_decoration,
    require_valid,
    symmetree,
    tree_from_cuts,
)
from .correspond import p_symbol
from .errors import DecorationMismatch, NotAnEdge, NotARefinement
from .words import Perm, identity, inversions, reverse

__all__ = [
    "weak_leq",
    "weak_meet",
    "weak_join",
    "weak_up_covers",
    "rotate",
    "RotationGraph",
    "rotation_graph",
    "tree_leq",
    "lattice_meet",
    "lattice_join",
    "fiber_interval",
    "class_min",
    "class_max",
    "refine_project",
    "extremes",
]


# weak order on permutations -------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _inv(perm: Perm) -> frozenset:
    return inversions(perm)


def weak_leq(s: Sequence[int], t: Sequence[int]) -> bool:
    """``s <= t`` in the weak order: inclusion of inversion sets."""
    return _inv(tuple(s)) <= _inv(tuple(t))


def _from_inversions(n: int, inv: set) -> Perm:
    earlier = [0] * (n + 1)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if x == y:
                continue
            a, b = min(x, y), max(x, y)
            flipped = (a, b) in inv
            # y comes before x?
            if (y > x) == flipped:
                earlier[x] += 1
    word = [0] * n
    for x in range(1, n + 1):
        word[earlier[x]] = x
    return tuple(word)


def weak_join(s: Sequence[int], t: Sequence[int]) -> Perm:
    """Join: the transitive closure of the union of inversion sets."""
    n = len(s)
    inv = set(_inv(tuple(s))) | set(_inv(tuple(t)))
    changed = True
    while changed:
        changed = False
        for a, b in list(inv):
            for c in range(b + 1, n + 1):
                if (b, c) in inv and (a, c) not in inv:
                    inv.add((a, c))
                    changed = True
    return _from_inversions(n, inv)


def weak_meet(s: Sequence[int], t: Sequence[int]) -> Perm:
    """Meet, through the anti-automorphism that reverses words."""
    return reverse(weak_join(reverse(s), reverse(t)))


def weak_up_covers(perm: Sequence[int]) -> list[tuple[Perm, tuple[int, int]]]:
    """Upper covers: swap an adjacent ascent; returns ``(cover, (i, j))`` with ``i < j`` the values."""
    perm = tuple(perm)
    out = []
    for k in range(len(perm) - 1):
        if perm[k] < perm[k + 1]:
            out.append((perm[:k] + (perm[k + 1], perm[k]) + perm[k + 2 :], (perm[k], perm[k + 1])))
    return out


# rotations -------------------------------------------------------------------


def _edge_cut_of(t: Permutree, child: int, parent: int) -> EdgeCut:
    return t.edge_cut(child, parent)


def rotate(t: Permutree, edge: tuple[int, int]) -> Permutree:
    """Rotate the internal edge ``edge = (i, j)`` of ``t`` (oriented ``i -> j``).

    For ``i < j`` the rotation is increasing.  The new tree is rebuilt from
    the cut set of ``t`` with the cut of the rotated edge replaced: the lower
    vertex hands its only or right descendant subtree to ``j``, and ``j``
    hands its only or left ancestor subtree to ``i``.
    """
    i, j = edge
    if (i, j) not in t.edges:
        raise NotAnEdge(f"{i}->{j} is not an edge of the tree")
    if i > j:
        n = t.n
        mirrored = symmetree(t, "horizontal")
        turned = rotate(mirrored, (n + 1 - i, n + 1 - j))
        return symmetree(turned, "horizontal")
    d = t.decoration
    lower_children = t.children_of(i)
    moved_down = t.subtree(i, lower_children[-1])  # only or right descendant subtree of i
    upper_parents = t.parents_of(j)
    moved_up = t.subtree(j, upper_parents[0])  # only or left ancestor subtree of j
    old = t.edge_cut(i, j)
    new_source = (old.sink - moved_up) | moved_down
    new_cut = EdgeCut(frozenset(new_source), frozenset(range(1, t.n + 1)) - new_source)
    cuts = [c for c in t.cuts if c != old] + [new_cut]
    rotated = tree_from_cuts(d, cuts)
    require_valid(rotated)
    return rotated


# lattice ---------------------------------------------------------------------


def _greedy_extension(t: Permutree, smallest: bool) -> Perm:
    n = t.n
    waiting = [0] * (n + 1)
    ups = [[] for _ in range(n + 1)]
    for child, parent in t.edges:
        waiting[parent] += 1
        ups[child].append(parent)
    ready = {v for v in range(1, n + 1) if waiting[v] == 0}
    word = []
    while ready:
        v = min(ready) if smallest else max(ready)
        ready.remove(v)
        word.append(v)
        for w in ups[v]:
            waiting[w] -= 1
            if waiting[w] == 0:
                ready.add(w)
    return tuple(word)


def class_min(t: Permutree) -> Perm:
    """Weak-order minimum of the fiber: take the smallest available label at each step."""
    return _greedy_extension(t, smallest=True)


def class_max(t: Permutree) -> Perm:
    return _greedy_extension(t, smallest=False)


def fiber_interval(t: Permutree) -> tuple[Perm, Perm]:
    require_valid(t)
    return class_min(t), class_max(t)


def _same_decoration(t1: Permutree, t2: Permutree) -> None:
    if t1.decoration != t2.decoration:
        raise DecorationMismatch(f"{t1.decoration.word} != {t2.decoration.word}")


def tree_leq(t1: Permutree, t2: Permutree) -> bool:
    """Lattice order: compare the class minima in the weak order."""
    _same_decoration(t1, t2)
    return weak_leq(class_min(t1), class_min(t2))


def lattice_meet(t1: Permutree, t2: Permutree) -> Permutree:
    _same_decoration(t1, t2)
    return p_symbol(weak_meet(class_min(t1), class_min(t2)), t1.decoration)


def lattice_join(t1: Permutree, t2: Permutree) -> Permutree:
    _same_decoration(t1, t2)
    return p_symbol(weak_join(class_max(t1), class_max(t2)), t1.decoration)


def extremes(d) -> tuple[Permutree, Permutree]:
    d = as_decoration(d)
    return p_symbol(identity(len(d)), d), p_symbol(reverse(identity(len(d))), d)


def refine_project(t: Permutree, d2) -> Permutree:
    """Insert a linear extension of ``t`` with the coarser decoration ``d2``."""
    d2 = as_decoration(d2)
    if not t.decoration.refines(d2):
        raise NotARefinement(f"{t.decoration.word} does not refine {d2.word}")
    return p_symbol(class_min(t), d2)


@dataclass(frozen=True)
class RotationGraph:
    decoration: Decoration
    nodes: tuple[Permutree, ...]
    arcs: tuple[tuple[int, int, tuple[int, int]], ...]  # (source index, target index, edge)

    def index(self) -> dict[Permutree, int]:
        return {t: k for k, t in enumerate(self.nodes)}

    def sources(self) -> list[int]:
        targets = {b for _, b, _ in self.arcs}
        return [k for k in range(len(self.nodes)) if k not in targets]

    def sinks(self) -> list[int]:
        origins = {a for a, _, _ in self.arcs}
        return [k for k in range(len(self.nodes)) if k not in origins]

    def to_networkx(self):
        import networkx as nx

        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.nodes)))
        for a, b, edge in self.arcs:
            graph.add_edge(a, b, edge=edge)
        return graph


def rotation_graph(d) -> RotationGraph:
    """All ``d``-permutrees with an arc for every increasing rotation."""
    from .enumeration import enumerate_permutrees

    d = as_decoration(d)
    nodes = tuple(enumerate_permutrees(d))
    where = {t: k for k, t in enumerate(nodes)}
    arcs = []
    for k, t in enumerate(nodes):
        for edge in t.increasing_edges():
            arcs.append((k, where[rotate(t, edge)], edge))
    return RotationGraph(d, nodes, tuple(sorted(arcs)))
