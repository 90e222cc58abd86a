"""Decorations, permutrees, edge cuts and the two reflections.

A decoration is a word over ``o d u b``.  The letter of a label fixes how many
parents and children the vertex carries:

====  =======  ========
word  parents  children
====  =======  ========
o     1        1
d     1        2
u     2        1
b     2        2
====  =======  ========

A permutree stores, for every label, its parent slots and child slots ordered
left to right.  A slot holds the neighbouring label or ``None`` for a boundary
stub.  Internal edges point from child to parent.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .errors import EmptyInput, InvalidInput, InvalidTree, UnknownLetter

__all__ = [
    "Letter",
    "Decoration",
    "parse_decoration",
    "format_decoration",
    "boundary_normalize",
    "Permutree",
    "LeveledPermutree",
    "EdgeCut",
    "validate",
    "edge_cuts",
    "symmetree",
    "tree_from_edges",
    "tree_from_cuts",
]


class Letter(enum.Enum):
    NONE = "o"
    DOWN = "d"
    UP = "u"
    BOTH = "b"

    @property
    def two_children(self) -> bool:
        return self in (Letter.DOWN, Letter.BOTH)

    @property
    def two_parents(self) -> bool:
        return self in (Letter.UP, Letter.BOTH)

    def flipped(self) -> "Letter":
        return _FLIP[self]

    def refines(self, other: "Letter") -> bool:
        """Letterwise refinement ``o ≼ d, u ≼ b``."""
        if self == other or self == Letter.NONE or other == Letter.BOTH:
            return True
        return False


_FLIP = {
    Letter.NONE: Letter.NONE,
    Letter.DOWN: Letter.UP,
    Letter.UP: Letter.DOWN,
    Letter.BOTH: Letter.BOTH,
}

DEFAULT_ALIASES: Mapping[str, Letter] = {letter.value: letter for letter in Letter}


@dataclass(frozen=True)
class Decoration:
    """A word over ``odub``; positions are the labels ``1..n``."""

    word: str

    def __post_init__(self):
        if not isinstance(self.word, str):
            raise InvalidInput("decoration word must be a string")
        for index, char in enumerate(self.word):
            if char not in "odub":
                raise UnknownLetter(char, index)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return (Letter(c) for c in self.word)

    def __str__(self) -> str:
        return self.word

    def __add__(self, other: "Decoration") -> "Decoration":
        return Decoration(self.word + other.word)

    @property
    def n(self) -> int:
        return len(self.word)

    def letter(self, label: int) -> Letter:
        return Letter(self.word[label - 1])

    @cached_property
    def _down(self) -> tuple[bool, ...]:
        return (False,) + tuple(c in "db" for c in self.word) + (False,)

    @cached_property
    def _up(self) -> tuple[bool, ...]:
        return (False,) + tuple(c in "ub" for c in self.word) + (False,)

    def down(self, label: int) -> bool:
        """True when ``label`` has two children (letters ``d`` and ``b``)."""
        return self._down[label]

    def up(self, label: int) -> bool:
        """True when ``label`` has two parents (letters ``u`` and ``b``)."""
        return self._up[label]

    @cached_property
    def down_labels(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.word, start=1) if c in "db")

    @cached_property
    def up_labels(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.word, start=1) if c in "ub")

    def refines(self, other: "Decoration") -> bool:
        if len(self) != len(other):
            return False
        return all(a.refines(b) for a, b in zip(self, other))

    def reversed(self) -> "Decoration":
        return Decoration(self.word[::-1])

    def flipped(self) -> "Decoration":
        return Decoration("".join(Letter(c).flipped().value for c in self.word))

    def restrict(self, labels: Iterable[int]) -> "Decoration":
        """Sub-word on the given labels, in increasing label order."""
        return Decoration("".join(self.word[i - 1] for i in sorted(labels)))


def parse_decoration(text: str, aliases: Optional[Mapping[str, Letter]] = None) -> Decoration:
    """Parse a decoration word.

    >>> parse_decoration("odub").word
    'odub'
    >>> [l.name for l in parse_decoration("odub")]
    ['NONE', 'DOWN', 'UP', 'BOTH']
    """
    if text is None or len(text) == 0:
        raise EmptyInput("empty decoration")
    table = DEFAULT_ALIASES if aliases is None else aliases
    letters = []
    for index, char in enumerate(text):
        if char not in table:
            raise UnknownLetter(char, index)
        letters.append(table[char].value)
    return Decoration("".join(letters))


def format_decoration(d: Decoration) -> str:
    return d.word


def as_decoration(d) -> Decoration:
    if isinstance(d, Decoration):
        return d
    return parse_decoration(d)


def boundary_normalize(d: Decoration) -> Decoration:
    """Force the first and last letters to ``o``; they never change the trees' lattice.

    >>> boundary_normalize(Decoration("budo")).word
    'oudo'
    """
    d = as_decoration(d)
    word = d.word
    if len(word) == 1:
        return Decoration("o")
    return Decoration("o" + word[1:-1] + "o")


class EdgeCut(NamedTuple):
    source: frozenset
    sink: frozenset

    def __str__(self) -> str:
        left = ",".join(map(str, sorted(self.source)))
        right = ",".join(map(str, sorted(self.sink)))
        return f"({left}||{right})"


Slot = Optional[int]


def _slot_key(slot: Slot) -> int:
    return 0 if slot is None else slot


@dataclass(frozen=True)
class Permutree:
    """Oriented tree on labels ``1..n`` with ordered parent and child slots.

    ``parents[v-1]`` and ``children[v-1]`` hold the slots of label ``v``.
    Instances are not validated on construction; call :func:`validate`.
    """

    decoration: Decoration
    parents: tuple[tuple[Slot, ...], ...]
    children: tuple[tuple[Slot, ...], ...]

    @property
    def n(self) -> int:
        return len(self.decoration)

    def parents_of(self, v: int) -> tuple[Slot, ...]:
        return self.parents[v - 1]

    def children_of(self, v: int) -> tuple[Slot, ...]:
        return self.children[v - 1]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Internal edges ``(child, parent)`` sorted."""
        found = set()
        for v in range(1, self.n + 1):
            for p in self.parents[v - 1]:
                if p is not None:
                    found.add((v, p))
            for c in self.children[v - 1]:
                if c is not None:
                    found.add((c, v))
        return tuple(sorted(found))

    @cached_property
    def _adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {v: tuple(ws) for v, ws in adj.items()}

    def component(self, start: Optional[int], removed: Iterable[int] = ()) -> frozenset:
        """Labels reachable from ``start`` avoiding the ``removed`` labels."""
        if start is None:
            return frozenset()
        blocked = set(removed)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self._adjacency[v]:
                if w not in seen and w not in blocked:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    def subtree(self, v: int, neighbour: Optional[int]) -> frozenset:
        """Labels of the component of ``T - v`` through ``neighbour`` (empty for a stub)."""
        return self.component(neighbour, removed=(v,))

    def child_subtrees(self, v: int) -> tuple[frozenset, ...]:
        return tuple(self.subtree(v, c) for c in self.children[v - 1])

    def parent_subtrees(self, v: int) -> tuple[frozenset, ...]:
        return tuple(self.subtree(v, p) for p in self.parents[v - 1])

    @cached_property
    def _below(self) -> tuple[frozenset, ...]:
        memo: dict[int, frozenset] = {}

        def down(v: int) -> frozenset:
            if v not in memo:
                acc = set()
                for c in self.children[v - 1]:
                    if c is not None:
                        acc.add(c)
                        acc |= down(c)
                memo[v] = frozenset(acc)
            return memo[v]

        return tuple(down(v) for v in range(1, self.n + 1))

    def descendants(self, v: int) -> frozenset:
        return self._below[v - 1]

    def ancestors(self, v: int) -> frozenset:
        return frozenset(w for w in range(1, self.n + 1) if v in self._below[w - 1])

    def is_below(self, a: int, b: int) -> bool:
        """``a`` is a strict descendant of ``b``."""
        return a in self._below[b - 1]

    def edge_cut(self, child: int, parent: int) -> EdgeCut:
        source = self.component(child, removed=(parent,))
        sink = frozenset(range(1, self.n + 1)) - source
        return EdgeCut(source, sink)

    @cached_property
    def cuts(self) -> tuple[EdgeCut, ...]:
        return tuple(self.edge_cut(a, b) for a, b in self.edges)

    @cached_property
    def key(self) -> tuple:
        """Canonical total-order key: vertices by label, slots left to right."""
        return (
            self.decoration.word,
            tuple(tuple(_slot_key(s) for s in slots) for slots in self.parents),
            tuple(tuple(_slot_key(s) for s in slots) for slots in self.children),
        )

    def __lt__(self, other: "Permutree") -> bool:
        return self.key < other.key

    def bottom_stubs(self) -> int:
        return sum(s is None for slots in self.children for s in slots)

    def top_stubs(self) -> int:
        return sum(s is None for slots in self.parents for s in slots)

    def increasing_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((a, b) for a, b in self.edges if a < b)

    def decreasing_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((a, b) for a, b in self.edges if a > b)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "decoration": self.decoration.word,
            "vertices": [
                {
                    "label": v,
                    "parents": list(self.parents[v - 1]),
                    "children": list(self.children[v - 1]),
                }
                for v in range(1, self.n + 1)
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Permutree":
        try:
            decoration = parse_decoration(data["decoration"])
            n = int(data["n"])
            vertices = sorted(data["vertices"], key=lambda x: x["label"])
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed permutree data: {exc}") from exc
        if n != len(decoration) or [x["label"] for x in vertices] != list(range(1, n + 1)):
            raise InvalidInput("labels must be exactly 1..n")
        parents = tuple(tuple(x["parents"]) for x in vertices)
        children = tuple(tuple(x["children"]) for x in vertices)
        return cls(decoration, parents, children)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Permutree":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        parts = []
        for v in range(1, self.n + 1):
            ps = ",".join("." if s is None else str(s) for s in self.parents[v - 1])
            cs = ",".join("." if s is None else str(s) for s in self.children[v - 1])
            parts.append(f"{v}[{cs}>{ps}]")
        return f"{self.decoration.word}:" + " ".join(parts)


@dataclass(frozen=True)
class LeveledPermutree:
    """A permutree together with a linear extension, ``level[v-1]`` for label ``v``."""

    tree: Permutree
    level: tuple[int, ...]

    def reading(self) -> tuple[int, ...]:
        """Labels sorted by level: the linear extension as a permutation."""
        order = [0] * len(self.level)
        for v, lev in enumerate(self.level, start=1):
            order[lev - 1] = v
        return tuple(order)

    def is_consistent(self) -> bool:
        if sorted(self.level) != list(range(1, self.tree.n + 1)):
            return False
        return all(self.level[a - 1] < self.level[b - 1] for a, b in self.tree.edges)


def _arity_ok(t: Permutree, v: int) -> list[str]:
    letter = t.decoration.letter(v)
    issues = []
    want_parents = 2 if letter.two_parents else 1
    want_children = 2 if letter.two_children else 1
    if len(t.parents[v - 1]) != want_parents:
        issues.append(f"vertex {v}: expected {want_parents} parent slots, got {len(t.parents[v - 1])}")
    if len(t.children[v - 1]) != want_children:
        issues.append(f"vertex {v}: expected {want_children} child slots, got {len(t.children[v - 1])}")
    return issues


def validate(t: Permutree) -> list[str]:
    """Return a list of violated conditions; empty means ``t`` is a valid permutree."""
    n = t.n
    labels = set(range(1, n + 1))
    report: list[str] = []
    if len(t.parents) != n or len(t.children) != n:
        return [f"expected slot lists for {n} vertices"]
    for v in range(1, n + 1):
        report.extend(_arity_ok(t, v))
        for s in t.parents[v - 1] + t.children[v - 1]:
            if s is not None and s not in labels:
                report.append(f"vertex {v}: slot refers to unknown label {s}")
            if s == v:
                report.append(f"vertex {v}: loop")
    if report:
        return report
    # every internal edge must be recorded at both ends, exactly once
    for v in range(1, n + 1):
        for p in t.parents[v - 1]:
            if p is not None and t.children[p - 1].count(v) != 1:
                report.append(f"edge {v}->{p}: missing or repeated in children of {p}")
        for c in t.children[v - 1]:
            if c is not None and t.parents[c - 1].count(v) != 1:
                report.append(f"edge {c}->{v}: missing or repeated in parents of {c}")
    if report:
        return report
    if len(t.edges) != n - 1:
        report.append(f"tree must have {n - 1} internal edges, found {len(t.edges)}")
    if t.component(1) != frozenset(labels):
        report.append("underlying graph is not connected")
    if report:
        return report
    for v in range(1, n + 1):
        letter = t.decoration.letter(v)
        if letter.two_children:
            left, right = t.child_subtrees(v)
            for w in sorted(left):
                if w >= v:
                    report.append(f"vertex {v}: left descendant label {w} >= {v}")
            for w in sorted(right):
                if w <= v:
                    report.append(f"vertex {v}: right descendant label {w} <= {v}")
        if letter.two_parents:
            left, right = t.parent_subtrees(v)
            for w in sorted(left):
                if w >= v:
                    report.append(f"vertex {v}: left ancestor label {w} >= {v}")
            for w in sorted(right):
                if w <= v:
                    report.append(f"vertex {v}: right ancestor label {w} <= {v}")
    return report


def require_valid(t: Permutree) -> Permutree:
    problems = validate(t)
    if problems:
        raise InvalidTree("; ".join(problems))
    return t


def edge_cuts(t: Permutree) -> set[EdgeCut]:
    """One cut per internal edge: the source side is the component of the child."""
    require_valid(t)
    cuts = set(t.cuts)
    assert len(cuts) == t.n - 1
    return cuts


def _place(v: int, neighbours: Sequence[int], two: bool) -> tuple[Slot, ...]:
    """Fill one or two slots of ``v``; with two slots a smaller label goes left."""
    if not two:
        if len(neighbours) > 1:
            raise InvalidTree(f"vertex {v}: too many neighbours on a single slot")
        return (neighbours[0] if neighbours else None,)
    left = [w for w in neighbours if w < v]
    right = [w for w in neighbours if w > v]
    if len(left) > 1 or len(right) > 1:
        raise InvalidTree(f"vertex {v}: two neighbours compete for one slot")
    return (left[0] if left else None, right[0] if right else None)


def tree_from_edges(decoration: Decoration, edges: Iterable[tuple[int, int]]) -> Permutree:
    """Build a permutree from its internal edges ``(child, parent)``.

    Two-slot vertices receive a neighbour on the side of its label, which is
    the only placement compatible with the left/right label condition.
    """
    n = len(decoration)
    ups: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    downs: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for child, parent in edges:
        ups[child].append(parent)
        downs[parent].append(child)
    parents = tuple(_place(v, ups[v], decoration.up(v)) for v in range(1, n + 1))
    children = tuple(_place(v, downs[v], decoration.down(v)) for v in range(1, n + 1))
    return Permutree(decoration, parents, children)


def tree_from_cuts(decoration: Decoration, cuts: Iterable[EdgeCut]) -> Permutree:
    """Rebuild the tree whose edge cuts are ``cuts``.

    Two labels are adjacent exactly when a single cut separates them, and the
    edge points from the source side to the sink side.
    """
    n = len(decoration)
    cuts = list(cuts)
    edges = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            separating = [c for c in cuts if (a in c.source) != (b in c.source)]
            if len(separating) == 1:
                cut = separating[0]
                edges.append((a, b) if a in cut.source else (b, a))
    return tree_from_edges(decoration, edges)


def _mirror(slot: Slot, n: int) -> Slot:
    return None if slot is None else n + 1 - slot


def symmetree(t: Permutree, axis: str) -> Permutree:
    """Reflect a permutree.

    ``horizontal`` relabels ``i -> n+1-i`` and swaps left and right slots;
    ``vertical`` swaps parents and children and exchanges ``d`` with ``u``.
    """
    require_valid(t)
    n = t.n
    if axis == "horizontal":
        parents = tuple(
            tuple(_mirror(s, n) for s in reversed(t.parents[n - v])) for v in range(1, n + 1)
        )
        children = tuple(
            tuple(_mirror(s, n) for s in reversed(t.children[n - v])) for v in range(1, n + 1)
        )
        return Permutree(t.decoration.reversed(), parents, children)
    if axis == "vertical":
        return Permutree(t.decoration.flipped(), t.children, t.parents)
    raise InvalidInput(f"unknown axis {axis!r}")
