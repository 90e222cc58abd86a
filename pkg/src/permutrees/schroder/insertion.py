"""Ordered partitions, their insertion into Schröder permutrees, and the rewriting congruence."""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, NamedTuple, Optional

from .._sweep import sweep
from ..core import Decoration, as_decoration
from ..errors import DecorationMismatch, InvalidInput
from .model import SchroderPermutree

Parts = tuple[tuple[int, ...], ...]


class OrderedPartition(NamedTuple):
    """Parts listed bottom to top; ``word`` decorates values (``None`` when undecorated)."""

    parts: Parts
    word: Optional[str] = None

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)

    def position(self) -> dict[int, int]:
        """Value to index of its part."""
        return {x: k for k, part in enumerate(self.parts) for x in part}

    def decorated(self, d) -> "OrderedPartition":
        d = as_decoration(d)
        if len(d) != self.n:
            raise InvalidInput(f"decoration {d.word} does not fit size {self.n}")
        return OrderedPartition(self.parts, d.word)

    def __str__(self) -> str:
        sep = "" if self.n < 10 else ","
        body = "|".join(sep.join(map(str, p)) for p in self.parts)
        return body if self.word is None else f"{body}@{self.word}"


def ordered_partition(parts: Iterable[Iterable[int]], word=None) -> OrderedPartition:
    parts = tuple(tuple(sorted(p)) for p in parts)
    values = sorted(x for p in parts for x in p)
    if any(not p for p in parts):
        raise InvalidInput("empty part")
    if values != list(range(1, len(values) + 1)):
        raise InvalidInput(f"parts do not cover 1..{len(values)} exactly once")
    if word is not None:
        word = as_decoration(word).word
        if len(word) != len(values):
            raise InvalidInput("decoration length differs from the number of values")
    return OrderedPartition(parts, word)


def parse_partition(text: str) -> OrderedPartition:
    """Read ``"125|37|46"`` or ``"125|37|46@doodoou"``; commas separate values above 9."""
    text = text.strip()
    word = None
    if "@" in text:
        text, word = text.split("@", 1)
    if not text:
        raise InvalidInput("empty ordered partition")
    parts = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        try:
            parts.append([int(x) for x in chunk.split(",")] if "," in chunk else [int(c) for c in chunk])
        except ValueError as exc:
            raise InvalidInput(f"cannot read part {chunk!r}") from exc
    return ordered_partition(parts, word)


def _as_partition(x) -> OrderedPartition:
    if isinstance(x, OrderedPartition):
        return x
    if isinstance(x, str):
        return parse_partition(x)
    return ordered_partition(x)


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in _set_partitions(rest):
        for k in range(len(smaller)):
            yield smaller[:k] + [[first] + smaller[k]] + smaller[k + 1 :]
        yield [[first]] + smaller


@lru_cache(maxsize=16)
def _all_parts(n: int) -> tuple[Parts, ...]:
    out = set()
    for blocks in _set_partitions(list(range(1, n + 1))):
        blocks = [tuple(sorted(b)) for b in blocks]
        for order in permutations(blocks):
            out.add(tuple(order))
    return tuple(sorted(out))


def all_ordered_partitions(n: int) -> list[Parts]:
    """Every ordered partition of ``1..n`` (the Fubini number of them), sorted."""
    return list(_all_parts(n))


# insertion -----------------------------------------------------------------------------


def _resolve(lam, decoration) -> tuple[Parts, Decoration]:
    lam = _as_partition(lam)
    word = decoration if decoration is not None else lam.word
    if word is None:
        raise InvalidInput("no decoration given")
    d = as_decoration(word)
    if len(d) != lam.n:
        raise InvalidInput(f"decoration {d.word} does not fit size {lam.n}")
    return lam.parts, d


def insert_partition(lam, decoration=None) -> tuple[SchroderPermutree, tuple[int, ...]]:
    """Sweep the partition table; returns the tree and the level of each node."""
    parts, d = _resolve(lam, decoration)
    return _insert(parts, d.word)


@lru_cache(maxsize=1 << 16)
def _insert(parts: Parts, word: str) -> tuple[SchroderPermutree, tuple[int, ...]]:
    d = as_decoration(word)
    swept = sweep(d, parts)
    order = sorted(range(len(swept)), key=lambda k: swept[k].block[0])
    renumber = {old: new for new, old in enumerate(order)}
    move = lambda s: None if s is None else renumber[s]  # noqa: E731
    tree = SchroderPermutree(
        d,
        tuple(tuple(swept[k].block) for k in order),
        tuple(tuple(move(s) for s in swept[k].parents) for k in order),
        tuple(tuple(move(s) for s in swept[k].children) for k in order),
    )
    return tree, tuple(swept[k].level for k in order)


def p_star(lam, decoration=None) -> SchroderPermutree:
    """The Schröder permutree of a decorated ordered partition, levels forgotten."""
    return insert_partition(lam, decoration)[0]


def schroder_permutrees(d) -> list[SchroderPermutree]:
    """Every Schröder permutree of a decoration, found as insertion images."""
    d = as_decoration(d)
    return sorted({_insert(parts, d.word)[0] for parts in _all_parts(len(d))})


def fibers(d) -> dict[SchroderPermutree, list[Parts]]:
    d = as_decoration(d)
    out: dict[SchroderPermutree, list[Parts]] = {}
    for parts in _all_parts(len(d)):
        out.setdefault(_insert(parts, d.word)[0], []).append(parts)
    return out


def fiber_by_levels(s: SchroderPermutree) -> list[Parts]:
    """Partitions mapping to ``s``: node orders compatible with the tree, then merges of incomparable nodes."""
    n = s.n
    out = []
    for parts in _all_parts(n):
        where = {x: k for k, p in enumerate(parts) for x in p}
        ok = all(len({where[x] for x in b}) == 1 for b in s.blocks)
        ok = ok and all(where[s.blocks[c][0]] < where[s.blocks[p][0]] for c, p in s.edges)
        if ok:
            out.append(parts)
    return out


def canonical_partition(s: SchroderPermutree) -> Parts:
    """One part per node, nodes taken in the topological order that prefers small labels."""
    waiting = [0] * len(s.blocks)
    for _, p in s.edges:
        waiting[p] += 1
    ready = sorted(k for k, w in enumerate(waiting) if w == 0)
    out = []
    while ready:
        k = ready.pop(0)
        out.append(s.blocks[k])
        for c, p in s.edges:
            if c == k:
                waiting[p] -= 1
                if waiting[p] == 0:
                    ready.append(p)
        ready.sort()
    return tuple(out)


# rewriting congruence ----------------------------------------------------------------


def _rewrites(parts: Parts, d: Decoration) -> Iterator[Parts]:
    def separated(a: tuple, c: tuple, before: Parts, after: Parts) -> bool:
        if not max(a) < min(c):
            return False
        low, high = max(a), min(c)
        if any(low < b < high and d.up(b) for part in before for b in part):
            return True
        return any(low < b < high and d.down(b) for part in after for b in part)

    k = len(parts)
    for i in range(k):
        before, after = parts[:i], parts[i + 2 :]
        if i + 1 < k:
            x, y = parts[i], parts[i + 1]
            for a, c in ((x, y), (y, x)):
                if separated(a, c, before, after):
                    merged = tuple(sorted(x + y))
                    yield before + (merged,) + after
                    yield before + (y, x) + after
        # split a part into a << c, either order
        part, after1 = parts[i], parts[i + 1 :]
        for cut in range(1, len(part)):
            a, c = part[:cut], part[cut:]
            if separated(a, c, before, after1):
                yield before + (a, c) + after1
                yield before + (c, a) + after1


def rewriting_class(lam, decoration=None) -> frozenset:
    """Closure of a partition under the merge/split/swap rules, as a set of part tuples."""
    parts, d = _resolve(lam, decoration)
    seen = {parts}
    queue = deque([parts])
    while queue:
        cur = queue.popleft()
        for nxt in _rewrites(cur, d):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def schroder_congruent(lam, lam2, decoration=None, method: str = "p_star") -> bool:
    a, b = _as_partition(lam), _as_partition(lam2)
    if decoration is None:
        if a.word is not None and b.word is not None and a.word != b.word:
            raise DecorationMismatch(f"{a.word} != {b.word}")
        decoration = a.word or b.word
    if a.n != b.n:
        raise DecorationMismatch("partitions of different sizes")
    if method == "p_star":
        return p_star(a, decoration) == p_star(b, decoration)
    if method == "rewriting":
        return b.parts in rewriting_class(a, decoration)
    raise InvalidInput(f"unknown method {method!r}")


def decorated_partitions(n: int) -> Iterator[tuple[Parts, str]]:
    for word in product("odub", repeat=n):
        for parts in _all_parts(n):
            yield parts, "".join(word)


__all__ = [
    "OrderedPartition",
    "ordered_partition",
    "parse_partition",
    "all_ordered_partitions",
    "insert_partition",
    "p_star",
    "schroder_permutrees",
    "fibers",
    "fiber_by_levels",
    "canonical_partition",
    "rewriting_class",
    "schroder_congruent",
    "decorated_partitions",
]
