"""Exact permutreehedron geometry.

Every computation here is integral or rational.  Vertices come from the
subtree-size formula, facets from edge cuts, faces from intersecting facet
vertex sets.  No convex-hull library is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from typing import Iterable, Optional, Sequence

from . import _exact
from .core import Decoration, Permutree, as_decoration, require_valid
from .correspond import linear_extensions
from .enumeration import enumerate_permutrees
from .errors import NotARefinement
from .lattice import refine_project

__all__ = [
    "LatticePoint",
    "Cone",
    "Polytope",
    "vertex",
    "building_blocks",
    "facet_rhs",
    "polytope",
    "braid_cone",
    "incidence_cone",
    "cone_contains",
    "fan_check",
    "FanReport",
    "edge_step",
    "rotation_factor",
    "face_counts",
    "skeleton",
    "parallel_facets",
    "parallel_facet_formula",
    "isometry_group_order",
    "isometry_formula",
    "block_transpositions_preserve",
    "common_vertices",
    "matriochka_holds",
    "none_blocks",
    "is_blockwise_product",
]

LatticePoint = tuple[int, ...]


# vertices and facets ------------------------------------------------------------


def vertex(t: Permutree) -> LatticePoint:
    """The point ``a(T)``.

    Each coordinate is one plus the size of everything hanging below the
    node (whole components, so a lower node with two parents brings its
    other ancestors along), plus ``left * right`` over the child subtrees
    when the node has two children, minus the same product over the parent
    subtrees when it has two parents.
    """
    require_valid(t)
    d = t.decoration
    coords = []
    for i in range(1, t.n + 1):
        below = t.child_subtrees(i)
        value = 1 + sum(len(s) for s in below)
        if d.down(i):
            left, right = below
            value += len(left) * len(right)
        if d.up(i):
            left, right = t.parent_subtrees(i)
            value -= len(left) * len(right)
        coords.append(value)
    return tuple(coords)


def facet_rhs(block: Iterable[int]) -> int:
    return comb(len(frozenset(block)) + 1, 2)


def building_blocks(d, max_n: Optional[int] = None) -> frozenset:
    """Sources of every edge cut of every ``d``-permutree."""
    d = as_decoration(d)
    return frozenset(cut.source for t in enumerate_permutrees(d, max_n) for cut in t.cuts)


@dataclass(frozen=True)
class Polytope:
    decoration: Decoration
    vertices: dict  # Permutree -> LatticePoint
    facets: dict  # frozenset block -> right-hand side

    @property
    def dimension(self) -> int:
        return max(len(self.decoration) - 1, 0)

    def satisfies(self, point: Sequence[int]) -> bool:
        n = len(self.decoration)
        if sum(point) != comb(n + 1, 2):
            return False
        return all(sum(point[i - 1] for i in block) >= rhs for block, rhs in self.facets.items())

    def tight(self, point: Sequence[int]) -> frozenset:
        return frozenset(b for b, rhs in self.facets.items() if sum(point[i - 1] for i in b) == rhs)

    def to_dict(self) -> dict:
        order = sorted(self.vertices)
        ids = {t: k for k, t in enumerate(order)}
        return {
            "decoration": self.decoration.word,
            "vertices": [{"tree": ids[t], "coords": list(self.vertices[t])} for t in order],
            "facets": [
                {"block": sorted(b), "rhs": rhs}
                for b, rhs in sorted(self.facets.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
            ],
            "edges": [[ids[a], ids[b]] for a, b in skeleton(self.decoration)],
        }


@lru_cache(maxsize=64)
def _polytope(word: str) -> Polytope:
    d = Decoration(word)
    trees = enumerate_permutrees(d, max_n=len(word))
    vertices = {t: vertex(t) for t in trees}
    blocks = {cut.source for t in trees for cut in t.cuts}
    return Polytope(d, vertices, {b: facet_rhs(b) for b in blocks})


def polytope(d, max_n: Optional[int] = None) -> Polytope:
    d = as_decoration(d)
    enumerate_permutrees(d, max_n)  # size guard
    return _polytope(d.word)


# cones -------------------------------------------------------------------------


@dataclass(frozen=True)
class Cone:
    rays: tuple[tuple[int, ...], ...]
    kind: str  # "incidence" or "braid"


def _cut_ray(n: int, source: frozenset) -> tuple[int, ...]:
    # scaled so that the coordinates stay integral; points away from the source
    i_size, j_size = len(source), n - len(source)
    return tuple(-j_size if k in source else i_size for k in range(1, n + 1))


def braid_cone(t: Permutree) -> Cone:
    return Cone(tuple(sorted(_cut_ray(t.n, c.source) for c in t.cuts)), "braid")


def incidence_cone(t: Permutree) -> Cone:
    rays = []
    for child, parent in t.edges:
        ray = [0] * t.n
        ray[child - 1], ray[parent - 1] = 1, -1
        rays.append(tuple(ray))
    return Cone(tuple(sorted(rays)), "incidence")


def cone_contains(t: Permutree, point: Sequence[int]) -> bool:
    """Membership in the braid cone: ``x_child <= x_parent`` along every edge."""
    return all(point[c - 1] <= point[p - 1] for c, p in t.edges)


def _chain_rays(perm: Sequence[int]) -> list[tuple[int, ...]]:
    n = len(perm)
    return [_cut_ray(n, frozenset(perm[:k])) for k in range(1, n)]


@dataclass
class FanReport:
    decoration: str
    chambers: int
    covering: bool
    simplicial: bool
    refines: Optional[bool] = None
    problems: list = None

    @property
    def ok(self) -> bool:
        return self.covering and self.simplicial and self.refines is not False


def fan_check(d, coarser=None, max_n: Optional[int] = None) -> FanReport:
    """Check completeness and simpliciality of the braid cones, and refinement against ``coarser``."""
    from .words import all_permutations

    d = as_decoration(d)
    n = len(d)
    trees = enumerate_permutrees(d, max_n)
    problems = []
    covering = True
    for perm in all_permutations(n):
        rays = _chain_rays(perm)
        holders = [t for t in trees if all(cone_contains(t, r) for r in rays)]
        if len(holders) != 1:
            covering = False
            problems.append(f"chain cone of {perm} lies in {len(holders)} cones")
    simplicial = True
    for t in trees:
        rays = braid_cone(t).rays
        if len(rays) != max(n - 1, 0) or (rays and _exact.rank(rays) != n - 1):
            simplicial = False
            problems.append(f"cone of {t} is not simplicial")
    refines = None
    if coarser is not None:
        coarser = as_decoration(coarser)
        if not d.refines(coarser):
            raise NotARefinement(f"{d.word} does not refine {coarser.word}")
        refines = True
        covered_rays: dict = {}
        for t in trees:
            image = refine_project(t, coarser)
            if not all(cone_contains(image, r) for r in braid_cone(t).rays):
                refines = False
                problems.append(f"cone of {t} escapes the cone of {image}")
            covered_rays.setdefault(image, set()).update(braid_cone(t).rays)
        for image, rays in covered_rays.items():
            if not set(braid_cone(image).rays) <= rays:
                refines = False
                problems.append(f"rays of {image} missing from its refining cones")
    return FanReport(d.word, len(trees), covering, simplicial, refines, problems)


# edges and faces -------------------------------------------------------------------


def rotation_factor(t: Permutree, edge: tuple[int, int]) -> int:
    """``(l + 1)(r + 1)``: ``l`` sums the left subtrees of the lower end, ``r`` the right subtrees of the upper end."""
    i, j = edge
    lo, hi = min(i, j), max(i, j)
    d = t.decoration
    left = 0
    if d.down(lo):
        left += len(t.child_subtrees(lo)[0])
    if d.up(lo):
        left += len(t.parent_subtrees(lo)[0])
    right = 0
    if d.down(hi):
        right += len(t.child_subtrees(hi)[1])
    if d.up(hi):
        right += len(t.parent_subtrees(hi)[1])
    return (left + 1) * (right + 1)


def edge_step(t: Permutree, rotated: Permutree) -> tuple[int, ...]:
    return tuple(b - a for a, b in zip(vertex(t), vertex(rotated)))


@lru_cache(maxsize=32)
def _faces(word: str) -> dict:
    """Faces as frozensets of vertex indices, mapped to their dimension."""
    poly = _polytope(word)
    trees = sorted(poly.vertices)
    points = [poly.vertices[t] for t in trees]
    facet_sets = []
    for block in poly.facets:
        members = frozenset(k for k, p in enumerate(points) if sum(p[i - 1] for i in block) == poly.facets[block])
        facet_sets.append(members)
    everything = frozenset(range(len(points)))
    faces = {everything}
    frontier = [everything]
    while frontier:
        nxt = []
        for face in frontier:
            for facet in facet_sets:
                meet = face & facet
                if meet and meet not in faces:
                    faces.add(meet)
                    nxt.append(meet)
        frontier = nxt
    return {f: _exact.affine_dimension([points[k] for k in sorted(f)]) for f in faces}


def face_counts(d) -> tuple[int, ...]:
    """Face numbers ``(f_0, ..., f_{n-1})`` from vertex-facet incidences, the polytope itself last."""
    d = as_decoration(d)
    polytope(d)
    dims = _faces(d.word)
    top = max(dims.values())
    return tuple(sum(1 for v in dims.values() if v == k) for k in range(top + 1))


def skeleton(d) -> list[tuple[Permutree, Permutree]]:
    """Edges of the polytope, oriented by the linear functional with weights ``n + 1 - 2i``."""
    d = as_decoration(d)
    poly = polytope(d)
    trees = sorted(poly.vertices)
    n = len(d)
    weights = [n + 1 - 2 * i for i in range(1, n + 1)]
    out = []
    for face, dim in _faces(d.word).items():
        if dim != 1 or len(face) != 2:
            continue
        a, b = (trees[k] for k in sorted(face))
        value = lambda t: sum(w * x for w, x in zip(weights, poly.vertices[t]))  # noqa: E731
        out.append((a, b) if value(a) < value(b) else (b, a))
    return sorted(out)


# parallel facets ---------------------------------------------------------------------


def none_blocks(d: Decoration) -> list[int]:
    """Sizes of the maximal runs of NONE letters."""
    sizes, run = [], 0
    for ch in d.word:
        if ch == "o":
            run += 1
        elif run:
            sizes.append(run)
            run = 0
    if run:
        sizes.append(run)
    return sizes


def parallel_facets(d, max_n: Optional[int] = None) -> list[tuple[frozenset, frozenset]]:
    """Pairs of complementary building blocks."""
    d = as_decoration(d)
    full = frozenset(range(1, len(d) + 1))
    blocks = building_blocks(d, max_n)
    pairs = {tuple(sorted((b, full - b), key=lambda s: (min(s), len(s)))) for b in blocks if full - b in blocks}
    return sorted(pairs, key=lambda p: (sorted(p[0]), sorted(p[1])))


def parallel_facet_formula(d) -> int:
    """Closed form over the NONE runs between consecutive non-NONE letters (end letters count as non-NONE)."""
    d = as_decoration(d)
    n = len(d)
    if n < 2:
        return 0
    word = "d" + d.word[1:-1] + "d"
    marks = [k for k, ch in enumerate(word) if ch != "o"]
    return sum(2 ** (b - a) - 1 for a, b in zip(marks, marks[1:]))


# isometries --------------------------------------------------------------------------


def _normalized_none_ends(d: Decoration) -> Decoration:
    if len(d) < 2:
        return Decoration("o" * len(d))
    return Decoration("o" + d.word[1:-1] + "o")


def isometry_formula(d) -> int:
    d = _normalized_none_ends(as_decoration(d))
    order = 1
    for size in none_blocks(d):
        order *= factorial(size)
    all_none = set(d.word) <= {"o"}
    order *= 1 + (d == d.reversed()) - all_none
    order *= 1 + (d in (d.flipped(), d.reversed().flipped()))
    return order


def _vertex_set(d: Decoration) -> frozenset:
    return frozenset(_polytope(d.word).vertices.values())


def isometry_group_order(d, max_n: Optional[int] = None) -> int:
    """Count coordinate permutations, optionally composed with ``x -> n + 1 - x``, that keep the vertex set."""
    d = as_decoration(d)
    polytope(d, max_n)
    n = len(d)
    points = _vertex_set(d)
    found = 0
    for sigma in permutations(range(n)):
        moved = [tuple(p[s] for s in sigma) for p in points]
        if all(m in points for m in moved):
            found += 1
        if all(tuple(n + 1 - x for x in m) in points for m in moved):
            found += 1
    return found


def block_transpositions_preserve(d) -> bool:
    """Swapping two adjacent coordinates inside a NONE run maps vertices to vertices."""
    d = _normalized_none_ends(as_decoration(d))
    points = _vertex_set(d)
    for i in range(len(d) - 1):
        if d.word[i] == "o" and d.word[i + 1] == "o":
            for p in points:
                q = list(p)
                q[i], q[i + 1] = q[i + 1], q[i]
                if tuple(q) not in points:
                    return False
    return True


# refinements ---------------------------------------------------------------------------


def matriochka_holds(fine, coarse) -> bool:
    fine, coarse = as_decoration(fine), as_decoration(coarse)
    if not fine.refines(coarse):
        raise NotARefinement(f"{fine.word} does not refine {coarse.word}")
    small, big = polytope(fine), polytope(coarse)
    return set(big.facets) <= set(small.facets) and all(big.satisfies(p) for p in small.vertices.values())


def common_vertices(d1, d2) -> list[tuple[Permutree, Permutree]]:
    """Trees ``T`` whose projection ``T'`` to the coarser decoration sits at the same point."""
    d1, d2 = as_decoration(d1), as_decoration(d2)
    if not d1.refines(d2):
        raise NotARefinement(f"{d1.word} does not refine {d2.word}")
    out = []
    for t in enumerate_permutrees(d1):
        image = refine_project(t, d2)
        if vertex(t) == vertex(image):
            out.append((t, image))
    return out


def common_vertex_witnesses(t: Permutree, image: Permutree) -> dict[str, bool]:
    """The equivalent conditions for a common vertex, each computed on its own."""
    fiber = [s for s in enumerate_permutrees(t.decoration) if refine_project(s, image.decoration) == image]
    return {
        "same_point": vertex(t) == vertex(image),
        "same_cone": braid_cone(t).rays == braid_cone(image).rays,
        "singleton_fiber": fiber == [t],
        "same_extensions": set(linear_extensions(t)) == set(linear_extensions(image)),
    }


# singletons on both ends ---------------------------------------------------------------


def _blocks_of(d: Decoration) -> list[tuple[int, ...]]:
    """Maximal NONE runs, with every other label on its own."""
    out: list[list[int]] = []
    for i, ch in enumerate(d.word, start=1):
        if ch == "o" and out and d.word[out[-1][-1] - 1] == "o":
            out[-1].append(i)
        else:
            out.append([i])
    return [tuple(b) for b in out]


def is_blockwise_product(perm: Sequence[int], d) -> bool:
    """Whether ``perm`` lists the blocks of ``d`` in increasing order, each block in any order."""
    d = _normalized_none_ends(as_decoration(d))
    k = 0
    for block in _blocks_of(d):
        if sorted(perm[k : k + len(block)]) != list(block):
            return False
        k += len(block)
    return True
