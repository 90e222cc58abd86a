"""Schröder permutrees as faces of the permutreehedron."""

from __future__ import annotations

from dataclasses import dataclass

from .. import _exact
from ..core import Permutree, as_decoration
from ..enumeration import enumerate_permutrees
from ..errors import InvalidTree
from ..geometry import LatticePoint, _faces, facet_rhs, polytope, vertex
from .insertion import schroder_permutrees
from .model import SchroderPermutree, contract, from_permutree, validate_schroder


@dataclass(frozen=True)
class Face:
    tree: SchroderPermutree
    blocks: frozenset  # sources of the cuts: the facets containing the face
    trees: tuple[Permutree, ...]  # permutrees refining the tree
    vertices: tuple[LatticePoint, ...]

    @property
    def dimension(self) -> int:
        return _exact.affine_dimension(self.vertices)


def refines(fine, coarse: SchroderPermutree) -> bool:
    """Whether ``coarse`` is a contraction of ``fine``: its cuts are among those of ``fine``."""
    if isinstance(fine, Permutree):
        fine = from_permutree(fine)
    return fine.decoration == coarse.decoration and set(coarse.cuts) <= set(fine.cuts)


def face_of(s: SchroderPermutree) -> Face:
    problems = validate_schroder(s)
    if problems:
        raise InvalidTree("; ".join(problems))
    trees = tuple(t for t in enumerate_permutrees(s.decoration) if refines(from_permutree(t), s))
    blocks = frozenset(c.source for c in s.cuts)
    return Face(s, blocks, trees, tuple(sorted(vertex(t) for t in trees)))


def tight_vertices(s: SchroderPermutree) -> tuple[LatticePoint, ...]:
    """Vertices of the polytope lying on every facet hyperplane named by a cut of ``s``."""
    poly = polytope(s.decoration)
    blocks = [c.source for c in s.cuts]
    points = [p for p in poly.vertices.values() if all(sum(p[i - 1] for i in b) == facet_rhs(b) for b in blocks)]
    return tuple(sorted(points))


def contraction_closure(s: SchroderPermutree) -> frozenset:
    seen = {s}
    stack = [s]
    while stack:
        cur = stack.pop()
        for edge in cur.edges:
            nxt = contract(cur, edge)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return frozenset(seen)


def face_lattice_report(d) -> dict[str, bool]:
    """Compare Schröder permutrees under refinement with the geometric face lattice."""
    d = as_decoration(d)
    poly = polytope(d)
    ordered = sorted(poly.vertices)
    index = {poly.vertices[t]: k for k, t in enumerate(ordered)}
    geometric = _faces(d.word)
    trees = schroder_permutrees(d)
    faces = {s: face_of(s) for s in trees}
    as_sets = {s: frozenset(index[p] for p in f.vertices) for s, f in faces.items()}
    n = len(d)
    report = {
        "double inclusion": all(f.vertices == tight_vertices(s) for s, f in faces.items()),
        "bijection": len(set(as_sets.values())) == len(trees) and set(as_sets.values()) == set(geometric),
        "dimension": all(geometric.get(as_sets[s]) == n - 1 - len(s.edges) for s in trees),
    }
    closures = {s: contraction_closure(s) for s in trees}
    report["order"] = all(
        (s2 in closures[s]) == (as_sets[s] <= as_sets[s2]) for s in trees for s2 in trees
    )
    return report


__all__ = ["Face", "refines", "face_of", "tight_vertices", "contraction_closure", "face_lattice_report"]
