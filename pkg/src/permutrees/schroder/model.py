"""Schröder permutrees: trees whose nodes carry blocks of labels.

Slots follow the permutree convention.  A node has one child slot per gap
between its two-children labels (with sentinels ``0`` and ``n + 1``) and one
parent slot per gap between its two-parents labels.  Empty gaps hold stubs.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from ..core import Decoration, EdgeCut, Permutree, as_decoration
from ..errors import InvalidTree, NotAnEdge

Block = tuple[int, ...]
Slot = Optional[int]  # index of a neighbouring node, or None for a stub


def down_part(d: Decoration, block: Iterable[int]) -> tuple[int, ...]:
    return tuple(x for x in sorted(block) if d.down(x))


def up_part(d: Decoration, block: Iterable[int]) -> tuple[int, ...]:
    return tuple(x for x in sorted(block) if d.up(x))


def gap_index(walls: Sequence[int], labels: Iterable[int]) -> Optional[int]:
    """Index of the gap between walls holding every label, or ``None`` if they straddle a wall."""
    spots = {bisect_left(walls, x) for x in labels}
    if any(x in walls for x in labels) or len(spots) != 1:
        return None
    return spots.pop()


@dataclass(frozen=True)
class SchroderPermutree:
    decoration: Decoration
    blocks: tuple[Block, ...]  # sorted blocks, ordered by smallest label
    parents: tuple[tuple[Slot, ...], ...]
    children: tuple[tuple[Slot, ...], ...]

    @property
    def n(self) -> int:
        return len(self.decoration)

    def node_of(self, label: int) -> int:
        return self._owner[label]

    @cached_property
    def _owner(self) -> dict[int, int]:
        return {x: k for k, b in enumerate(self.blocks) for x in b}

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """``(child node, parent node)`` pairs."""
        out = set()
        for k, slots in enumerate(self.parents):
            for p in slots:
                if p is not None:
                    out.add((k, p))
        return tuple(sorted(out))

    def neighbours(self, k: int) -> list[int]:
        return [s for s in self.parents[k] + self.children[k] if s is not None]

    def component(self, start: int, removed: int) -> frozenset:
        """Labels reachable from node ``start`` without passing through node ``removed``."""
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self.neighbours(v):
                if w != removed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(x for v in seen for x in self.blocks[v])

    def labels_of(self, nodes: Iterable[int]) -> frozenset:
        return frozenset(x for v in nodes for x in self.blocks[v])

    def edge_cut(self, child: int, parent: int) -> EdgeCut:
        source = self.component(child, parent)
        return EdgeCut(source, frozenset(range(1, self.n + 1)) - source)

    @cached_property
    def cuts(self) -> tuple[EdgeCut, ...]:
        return tuple(sorted((self.edge_cut(c, p) for c, p in self.edges), key=lambda c: sorted(c.source)))

    @cached_property
    def _below(self) -> tuple[frozenset, ...]:
        memo: dict[int, frozenset] = {}

        def down(v: int) -> frozenset:
            if v not in memo:
                acc = set()
                for c in self.children[v]:
                    if c is not None:
                        acc.add(c)
                        acc |= down(c)
                memo[v] = frozenset(acc)
            return memo[v]

        return tuple(down(v) for v in range(len(self.blocks)))

    def node_below(self, a: int, b: int) -> bool:
        """Whether node ``a`` is a strict descendant of node ``b``."""
        return a in self._below[b]

    def relation(self, i: int, j: int) -> str:
        """``"same"``, ``"below"`` (i under j), ``"above"`` or ``"incomparable"`` for two labels."""
        a, b = self.node_of(i), self.node_of(j)
        if a == b:
            return "same"
        if self.node_below(a, b):
            return "below"
        if self.node_below(b, a):
            return "above"
        return "incomparable"

    @property
    def is_permutree(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def key(self) -> tuple:
        slots = lambda rows: tuple(tuple(-1 if x is None else x for x in row) for row in rows)  # noqa: E731
        return (self.decoration.word, self.blocks, slots(self.parents), slots(self.children))

    def __lt__(self, other: "SchroderPermutree") -> bool:
        return self.key() < other.key()

    def to_dict(self) -> dict:
        name = lambda s: None if s is None else list(self.blocks[s])  # noqa: E731
        return {
            "n": self.n,
            "decoration": self.decoration.word,
            "vertices": [
                {
                    "label": list(b),
                    "parents": [name(s) for s in self.parents[k]],
                    "children": [name(s) for s in self.children[k]],
                }
                for k, b in enumerate(self.blocks)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> "SchroderPermutree":
        d = as_decoration(data["decoration"])
        rows = sorted(data["vertices"], key=lambda v: min(v["label"]))
        blocks = tuple(tuple(sorted(v["label"])) for v in rows)
        index = {b: k for k, b in enumerate(blocks)}
        look = lambda s: None if s is None else index[tuple(sorted(s))]  # noqa: E731
        return cls(
            d,
            blocks,
            tuple(tuple(look(s) for s in v["parents"]) for v in rows),
            tuple(tuple(look(s) for s in v["children"]) for v in rows),
        )

    @classmethod
    def from_json(cls, text: str) -> "SchroderPermutree":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        def show(s):
            return "." if s is None else "".join(map(str, self.blocks[s]))

        parts = []
        for k, b in enumerate(self.blocks):
            below = ",".join(show(s) for s in self.children[k])
            above = ",".join(show(s) for s in self.parents[k])
            parts.append(f"{''.join(map(str, b))}[{below}>{above}]")
        return f"{self.decoration.word}:" + " ".join(parts)


# validation ------------------------------------------------------------------------------


def validate_schroder(s: SchroderPermutree) -> list[str]:
    """Every violated condition, one string per problem."""
    problems = []
    d, n = s.decoration, s.n
    seen: list[int] = sorted(x for b in s.blocks for x in b)
    if seen != list(range(1, n + 1)):
        problems.append(f"blocks do not partition 1..{n}")
        return problems
    if any(not b for b in s.blocks):
        problems.append("empty block")
    count = len(s.blocks)
    for k, b in enumerate(s.blocks):
        if len(s.children[k]) != len(down_part(d, b)) + 1:
            problems.append(f"node {b}: {len(s.children[k])} child slots, expected {len(down_part(d, b)) + 1}")
        if len(s.parents[k]) != len(up_part(d, b)) + 1:
            problems.append(f"node {b}: {len(s.parents[k])} parent slots, expected {len(up_part(d, b)) + 1}")
        for slot in s.children[k] + s.parents[k]:
            if slot is not None and not 0 <= slot < count:
                problems.append(f"node {b}: slot points to missing node {slot}")
    if problems:
        return problems
    for k in range(count):
        for c in s.children[k]:
            if c is not None and s.parents[c].count(k) != 1:
                problems.append(f"edge {s.blocks[c]}->{s.blocks[k]} not recorded on both ends")
        for p in s.parents[k]:
            if p is not None and s.children[p].count(k) != 1:
                problems.append(f"edge {s.blocks[k]}->{s.blocks[p]} not recorded on both ends")
    if problems:
        return problems
    if len(s.edges) != count - 1:
        problems.append(f"{len(s.edges)} edges for {count} nodes")
    if count and len(s.component(0, -1)) != n:
        problems.append("not connected")
    if problems:
        return problems
    for k, b in enumerate(s.blocks):
        for side, slots, walls in (
            ("descendant", s.children[k], down_part(d, b)),
            ("ancestor", s.parents[k], up_part(d, b)),
        ):
            bounds = (0,) + walls + (n + 1,)
            for g, slot in enumerate(slots):
                if slot is None:
                    continue
                labels = s.component(slot, k)
                lo, hi = bounds[g], bounds[g + 1]
                bad = sorted(x for x in labels if not lo < x < hi)
                if bad:
                    problems.append(f"node {b}: {side} subtree {g} holds {bad} outside ({lo},{hi})")
    return problems


def require_valid_schroder(s: SchroderPermutree) -> SchroderPermutree:
    problems = validate_schroder(s)
    if problems:
        raise InvalidTree("; ".join(problems))
    return s


# constructors ----------------------------------------------------------------------------


def from_edges(decoration, blocks: Iterable[Iterable[int]], edges: Iterable[tuple[Block, Block]]) -> SchroderPermutree:
    """Build a tree from its blocks and ``(child block, parent block)`` edges.

    Each neighbour goes into the slot whose gap contains the labels of its
    side of the tree.
    """
    d = as_decoration(decoration)
    blocks = tuple(sorted((tuple(sorted(b)) for b in blocks), key=min))
    index = {b: k for k, b in enumerate(blocks)}
    ups: dict[int, list[int]] = {k: [] for k in range(len(blocks))}
    downs: dict[int, list[int]] = {k: [] for k in range(len(blocks))}
    for child, parent in edges:
        c, p = index[tuple(sorted(child))], index[tuple(sorted(parent))]
        ups[c].append(p)
        downs[p].append(c)

    # component labels need adjacency only
    adjacency = {k: ups[k] + downs[k] for k in ups}

    def side(start: int, removed: int) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if w != removed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return {x for v in seen for x in blocks[v]}

    parents, children = [], []
    for k, b in enumerate(blocks):
        for store, neigh, walls in ((children, downs[k], down_part(d, b)), (parents, ups[k], up_part(d, b))):
            slots: list[Slot] = [None] * (len(walls) + 1)
            for w in neigh:
                g = gap_index(walls, side(w, k))
                if g is None or slots[g] is not None:
                    raise InvalidTree(f"cannot place neighbour {blocks[w]} of node {b}")
                slots[g] = w
            store.append(tuple(slots))
    return require_valid_schroder(SchroderPermutree(d, blocks, tuple(parents), tuple(children)))


def from_permutree(t: Permutree) -> SchroderPermutree:
    """Singleton blocks, same slots."""
    idx = lambda s: None if s is None else s - 1  # noqa: E731
    return SchroderPermutree(
        t.decoration,
        tuple((v,) for v in range(1, t.n + 1)),
        tuple(tuple(idx(s) for s in t.parents_of(v)) for v in range(1, t.n + 1)),
        tuple(tuple(idx(s) for s in t.children_of(v)) for v in range(1, t.n + 1)),
    )


def to_permutree(s: SchroderPermutree) -> Permutree:
    if not s.is_permutree:
        raise InvalidTree("some block has more than one label")
    lab = lambda k: None if k is None else s.blocks[k][0]  # noqa: E731
    return Permutree(
        s.decoration,
        tuple(tuple(lab(k) for k in slots) for slots in s.parents),
        tuple(tuple(lab(k) for k in slots) for slots in s.children),
    )


def single_block(decoration) -> SchroderPermutree:
    d = as_decoration(decoration)
    n = len(d)
    return SchroderPermutree(
        d,
        (tuple(range(1, n + 1)),),
        ((None,) * (len(d.up_labels) + 1),),
        ((None,) * (len(d.down_labels) + 1),),
    )


def contract(s: SchroderPermutree, edge: tuple) -> SchroderPermutree:
    """Merge the two ends of an edge given as ``(child block, parent block)`` or node indices."""
    child, parent = edge
    if not isinstance(child, int):
        child, parent = s.blocks.index(tuple(sorted(child))), s.blocks.index(tuple(sorted(parent)))
    if (child, parent) not in s.edges:
        raise NotAnEdge(f"{edge} is not an edge")
    merged = tuple(sorted(s.blocks[child] + s.blocks[parent]))
    rename = lambda k: merged if k in (child, parent) else s.blocks[k]  # noqa: E731
    blocks = [b for k, b in enumerate(s.blocks) if k not in (child, parent)] + [merged]
    edges = [(rename(c), rename(p)) for c, p in s.edges if (c, p) != (child, parent)]
    return from_edges(s.decoration, blocks, edges)


def is_increasing_contraction(s: SchroderPermutree, edge: tuple[int, int]) -> Optional[bool]:
    """``True`` if the lower block is entirely smaller, ``False`` if entirely larger, else ``None``."""
    child, parent = edge
    lo, hi = s.blocks[child], s.blocks[parent]
    if max(lo) < min(hi):
        return True
    if max(hi) < min(lo):
        return False
    return None
