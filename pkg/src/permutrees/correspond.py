"""Insertion of decorated permutations, fibers, congruence and arc diagrams."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from ._sweep import sweep
from .core import (
    Decoration,
    LeveledPermutree,
    Permutree,
    as_decoration,
    parse_decoration,
    require_valid,
)
from .errors import DecorationMismatch, InvalidInput
from .words import Perm, check_permutation, format_permutation, inverse, parse_permutation

__all__ = [
    "DecoratedPermutation",
    "parse_decorated",
    "insert",
    "p_symbol",
    "read_leveled",
    "linear_extensions",
    "congruent",
    "rewriting_class",
    "is_class_extreme",
    "class_extreme_by_patterns",
    "Arc",
    "ArcDiagram",
    "arc_diagram",
    "tree_arcs",
    "arc_avoids_walls",
    "is_singleton",
    "is_singleton_structural",
]


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation with a decoration attached to its values or to its positions."""

    perm: Perm
    decoration: Decoration
    attachment: str = "values"

    def __post_init__(self):
        object.__setattr__(self, "perm", check_permutation(self.perm))
        object.__setattr__(self, "decoration", as_decoration(self.decoration))
        if len(self.decoration) != len(self.perm):
            raise InvalidInput("decoration and permutation lengths differ")
        if self.attachment not in ("values", "positions"):
            raise InvalidInput(f"unknown attachment {self.attachment!r}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def value_decoration(self) -> Decoration:
        if self.attachment == "values":
            return self.decoration
        word = [""] * self.n
        for position, value in enumerate(self.perm):
            word[value - 1] = self.decoration.word[position]
        return Decoration("".join(word))

    @property
    def position_decoration(self) -> Decoration:
        if self.attachment == "positions":
            return self.decoration
        return Decoration("".join(self.decoration.word[v - 1] for v in self.perm))

    def normalized(self) -> "DecoratedPermutation":
        return DecoratedPermutation(self.perm, self.value_decoration, "values")

    def __str__(self) -> str:
        return f"{format_permutation(self.perm)}@{self.attachment}:{self.decoration.word}"


def parse_decorated(text: str) -> DecoratedPermutation:
    """Read ``"2751346@values:odubodu"``; the attachment defaults to values.

    >>> parse_decorated("213@positions:odo").value_decoration.word
    'doo'
    """
    if "@" not in text:
        raise InvalidInput("expected perm@attachment:decoration")
    perm_text, rest = text.split("@", 1)
    attachment, _, word = rest.rpartition(":")
    return DecoratedPermutation(parse_permutation(perm_text), parse_decoration(word), attachment or "values")


def _coerce(p, decoration=None) -> tuple[Perm, Decoration]:
    if isinstance(p, DecoratedPermutation):
        return p.perm, p.value_decoration
    if decoration is None:
        raise InvalidInput("a plain permutation needs a decoration")
    perm, d = check_permutation(p), as_decoration(decoration)
    if len(perm) != len(d):
        raise InvalidInput("decoration and permutation lengths differ")
    return perm, d


def insert(p, decoration=None) -> LeveledPermutree:
    """Insert a decorated permutation; the level of ``p[i]`` is ``i + 1``."""
    perm, d = _coerce(p, decoration)
    return LeveledPermutree(_insert_tree(perm, d.word), inverse(perm))


@lru_cache(maxsize=1 << 18)
def _insert_tree(perm: Perm, word: str) -> Permutree:
    d = Decoration(word)
    nodes = sweep(d, [(v,) for v in perm])
    n = len(perm)
    parents: list = [None] * n
    children: list = [None] * n
    for node in nodes:
        v = node.block[0]
        parents[v - 1] = tuple(None if k is None else nodes[k].block[0] for k in node.parents)
        children[v - 1] = tuple(None if k is None else nodes[k].block[0] for k in node.children)
    return Permutree(d, tuple(parents), tuple(children))


def p_symbol(p, decoration=None) -> Permutree:
    """The permutree obtained by inserting ``p`` and forgetting the levels."""
    perm, d = _coerce(p, decoration)
    return _insert_tree(perm, d.word)


def read_leveled(lt: LeveledPermutree) -> DecoratedPermutation:
    """Inverse of :func:`insert`: read labels by level, keep the vertex decorations."""
    return DecoratedPermutation(lt.reading(), lt.tree.decoration, "values")


def linear_extensions(t: Permutree) -> list[Perm]:
    """All orderings of the labels with every child before its parents, lexicographically."""
    require_valid(t)
    return list(_extensions(t))


def _extensions(t: Permutree) -> Iterator[Perm]:
    n = t.n
    waiting = [0] * (n + 1)
    for child, parent in t.edges:
        waiting[parent] += 1
    ups = [[] for _ in range(n + 1)]
    for child, parent in t.edges:
        ups[child].append(parent)
    prefix: list[int] = []

    def grow():
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if waiting[v] == 0:
                waiting[v] = -1
                for w in ups[v]:
                    waiting[w] -= 1
                prefix.append(v)
                yield from grow()
                prefix.pop()
                for w in ups[v]:
                    waiting[w] += 1
                waiting[v] = 0

    yield from grow()


def _rewrites(perm: Perm, d: Decoration) -> Iterator[Perm]:
    """Permutations one rewriting step away: swap adjacent ``a c`` given a witness ``b``."""
    n = len(perm)
    for i in range(n - 1):
        x, y = perm[i], perm[i + 1]
        lo, hi = min(x, y), max(x, y)
        if hi - lo < 2:
            continue
        later = perm[i + 2 :]
        earlier = perm[:i]
        if any(lo < b < hi and d.down(b) for b in later) or any(
            lo < b < hi and d.up(b) for b in earlier
        ):
            yield perm[:i] + (y, x) + perm[i + 2 :]


def rewriting_class(p, decoration=None) -> frozenset:
    """Congruence class of ``p`` as the closure under the two rewriting rules (BFS)."""
    perm, d = _coerce(p, decoration)
    seen = {perm}
    queue = deque([perm])
    while queue:
        current = queue.popleft()
        for other in _rewrites(current, d):
            if other not in seen:
                seen.add(other)
                queue.append(other)
    return frozenset(seen)


def congruent(a, b, decoration=None, method: str = "p_symbol") -> bool:
    """Whether two decorated permutations lie in the same congruence class.

    ``method="rewriting"`` uses the closure under the rewriting rules instead of
    comparing insertion results.
    """
    pa, da = _coerce(a, decoration)
    pb, db = _coerce(b, decoration)
    if da != db or len(pa) != len(pb):
        raise DecorationMismatch("congruence needs the same decoration and size")
    if method == "p_symbol":
        return p_symbol(pa, da) == p_symbol(pb, da)
    if method == "rewriting":
        return pb in rewriting_class(pa, da)
    raise InvalidInput(f"unknown method {method!r}")


def has_pattern(perm: Sequence[int], d: Decoration, shape: str) -> bool:
    """Search for an adjacent pair ``x y`` at positions ``i, i+1`` with a witness.

    ``shape`` is one of ``ac-b``, ``ca-b`` (witness later, two children) and
    ``b-ac``, ``b-ca`` (witness earlier, two parents).  Here ``a < b < c``.
    """
    ascending = shape in ("ac-b", "b-ac")
    witness_later = shape.endswith("-b")
    n = len(perm)
    for i in range(n - 1):
        x, y = perm[i], perm[i + 1]
        if (x < y) != ascending:
            continue
        lo, hi = min(x, y), max(x, y)
        if witness_later:
            if any(lo < b < hi and d.down(b) for b in perm[i + 2 :]):
                return True
        else:
            if any(lo < b < hi and d.up(b) for b in perm[:i]):
                return True
    return False


def class_extreme_by_patterns(perm: Sequence[int], d: Decoration, which: str) -> bool:
    """Pattern test for weak-order extremality inside a congruence class.

    The minimum of a class has no adjacent descent that could be rewritten into
    an ascent, so it avoids ``ca-b`` and ``b-ca``; the maximum avoids ``ac-b``
    and ``b-ac``.
    """
    if which == "min":
        return not has_pattern(perm, d, "ca-b") and not has_pattern(perm, d, "b-ca")
    if which == "max":
        return not has_pattern(perm, d, "ac-b") and not has_pattern(perm, d, "b-ac")
    raise InvalidInput(f"which must be 'min' or 'max', got {which!r}")


def is_class_extreme(p, which: str, decoration=None) -> bool:
    perm, d = _coerce(p, decoration)
    return class_extreme_by_patterns(perm, d, which)


@dataclass(frozen=True, order=True)
class Arc:
    left: int
    right: int
    above: frozenset  # intermediate values lying above the arc

    def below(self) -> frozenset:
        return frozenset(range(self.left + 1, self.right)) - self.above


@dataclass(frozen=True)
class ArcDiagram:
    arcs: frozenset

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs, key=lambda a: (a.left, a.right, sorted(a.above)))

    def is_noncrossing(self) -> bool:
        """No shared endpoints on the same side and no two arcs cross."""
        arcs = self.sorted_arcs()
        lefts = [a.left for a in arcs]
        rights = [a.right for a in arcs]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            return False
        for a in arcs:
            for b in arcs:
                if a is b:
                    continue
                # on the common open span the two arcs must keep a consistent vertical order
                lo, hi = max(a.left, b.left), min(a.right, b.right)
                if lo >= hi:
                    continue
                sides = set()
                for k in range(lo, hi + 1):
                    interior_a = a.left < k < a.right
                    interior_b = b.left < k < b.right
                    if interior_a and k == b.left or interior_a and k == b.right:
                        sides.add("b_under_a" if k not in a.above else "b_over_a")
                    if interior_b and k == a.left or interior_b and k == a.right:
                        sides.add("b_over_a" if k not in b.above else "b_under_a")
                    if interior_a and interior_b:
                        ka, kb = k in a.above, k in b.above
                        if ka and not kb:
                            sides.add("b_over_a")
                        elif kb and not ka:
                            sides.add("b_under_a")
                if len(sides) > 1:
                    return False
        return True


def arc_diagram(perm: Sequence[int], kind: str) -> ArcDiagram:
    """Arc diagram of the ascents (``asc``) or descents (``desc``) of ``perm``.

    Points are the values on a line.  Each ascent or descent gives an arc
    between its two values; a value in between lies above the arc exactly when
    it occurs later in ``perm`` than the pair, as when the drawing of the
    permutation table is flattened downwards.
    """
    perm = tuple(perm)
    position = inverse(perm)
    arcs = set()
    for i in range(len(perm) - 1):
        x, y = perm[i], perm[i + 1]
        if (kind == "asc") != (x < y):
            continue
        lo, hi = min(x, y), max(x, y)
        above = frozenset(k for k in range(lo + 1, hi) if position[k - 1] > i + 1)
        arcs.add(Arc(lo, hi, above))
    if kind not in ("asc", "desc"):
        raise InvalidInput(f"kind must be 'asc' or 'desc', got {kind!r}")
    return ArcDiagram(frozenset(arcs))


def arc_avoids_walls(arc: Arc, d: Decoration) -> bool:
    """An arc must pass above values with two children and below values with two parents."""
    for k in range(arc.left + 1, arc.right):
        if k in arc.above:
            if d.down(k):
                return False
        elif d.up(k):
            return False
    return True


def tree_arcs(t: Permutree) -> tuple[ArcDiagram, ArcDiagram]:
    """Arcs of the increasing and of the decreasing edges of ``t``.

    An intermediate label lies below the arc of an edge exactly when it sits on
    the source side of that edge's cut.
    """
    up_arcs, down_arcs = set(), set()
    for a, b in t.edges:
        cut = t.edge_cut(a, b)
        lo, hi = min(a, b), max(a, b)
        above = frozenset(k for k in range(lo + 1, hi) if k not in cut.source)
        (up_arcs if a < b else down_arcs).add(Arc(lo, hi, above))
    return ArcDiagram(frozenset(up_arcs)), ArcDiagram(frozenset(down_arcs))


def is_singleton(p, decoration=None) -> bool:
    """Whether ``p`` is alone in its congruence class."""
    perm, d = _coerce(p, decoration)
    tree = p_symbol(perm, d)
    count = 0
    for _ in _extensions(tree):
        count += 1
        if count > 1:
            return False
    return True


def is_singleton_structural(perm: Sequence[int], d: Decoration) -> bool:
    """Singleton test without insertion.

    Every value with two children must see all earlier values on one side of
    it, and every value with two parents must see all later values on one side.
    """
    perm = tuple(perm)
    for i, j in enumerate(perm):
        if d.down(j):
            before = perm[:i]
            if not (all(x < j for x in before) or all(x > j for x in before)):
                return False
        if d.up(j):
            after = perm[i + 1 :]
            if not (all(x < j for x in after) or all(x > j for x in after)):
                return False
    return True
