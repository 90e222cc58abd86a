"""The algebra of decorated ordered partitions and its Schröder permutree subspace.

Only the F-basis rules are implemented.  Products and coproducts of the
Schröder basis are computed by expanding into partitions, and closure is
checked by grouping the result back into complete fibers.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable

from ..hopf.formal import FormalSum, bilinear
from .insertion import OrderedPartition, _all_parts, _as_partition, _insert, fibers, schroder_permutrees
from .model import SchroderPermutree


EMPTY = OrderedPartition((), "")  # the unit, as produced by decorated restrictions


def _standardize(parts) -> tuple[dict[int, int], tuple]:
    values = sorted(x for p in parts for x in p)
    rank = {v: k + 1 for k, v in enumerate(values)}
    return rank, tuple(tuple(sorted(rank[x] for x in p)) for p in parts)


def _carry(word, rank: dict[int, int]) -> str | None:
    if word is None:
        return None
    out = [""] * len(rank)
    for v, r in rank.items():
        out[r - 1] = word[v - 1]
    return "".join(out)


def restrict_parts(mu, indices: Iterable[int]) -> OrderedPartition:
    """Keep the parts at the given 1-based indices and standardize."""
    mu = _as_partition(mu)
    keep = sorted(set(indices))
    rank, parts = _standardize([mu.parts[i - 1] for i in keep])
    return OrderedPartition(parts, _carry(mu.word, rank))


def restrict_values(mu, values: Iterable[int]) -> OrderedPartition:
    """Delete the other values, drop emptied parts and standardize."""
    mu = _as_partition(mu)
    values = set(values)
    kept = [tuple(x for x in p if x in values) for p in mu.parts]
    rank, parts = _standardize([p for p in kept if p])
    return OrderedPartition(parts, _carry(mu.word, rank))


def _join_words(a: OrderedPartition, b: OrderedPartition) -> str | None:
    if a.word is None and b.word is None:
        return None
    return (a.word or "o" * a.n) + (b.word or "o" * b.n)


@lru_cache(maxsize=1 << 14)
def _shuffle(a: OrderedPartition, b: OrderedPartition) -> frozenset:
    shift = a.n
    high = [tuple(x + shift for x in p) for p in b.parts]
    low = list(a.parts)
    word = _join_words(a, b)
    out = set()

    def walk(i: int, j: int, acc: tuple) -> None:
        if i == len(low) and j == len(high):
            out.add(OrderedPartition(acc, word))
            return
        if i < len(low):
            walk(i + 1, j, acc + (low[i],))
        if j < len(high):
            walk(i, j + 1, acc + (high[j],))
        if i < len(low) and j < len(high):
            walk(i + 1, j + 1, acc + (tuple(sorted(low[i] + high[j])),))

    walk(0, 0, ())
    return frozenset(out)


def op_shuffle(lam, lam2) -> frozenset:
    """Partitions whose values up to ``n`` restrict to ``lam`` and whose larger values restrict to ``lam2``."""
    return _shuffle(_as_partition(lam), _as_partition(lam2))


@lru_cache(maxsize=1 << 14)
def _convolution(a: OrderedPartition, b: OrderedPartition) -> frozenset:
    n, m = a.n, b.n
    total = n + m
    words = a.word is not None or b.word is not None
    wa, wb = a.word or "o" * n, b.word or "o" * m
    out = set()
    for low in combinations(range(1, total + 1), n):
        high = [v for v in range(1, total + 1) if v not in set(low)]
        parts = tuple(tuple(low[x - 1] for x in p) for p in a.parts) + tuple(tuple(high[x - 1] for x in p) for p in b.parts)
        word = None
        if words:
            letters = [""] * total
            for x in range(1, n + 1):
                letters[low[x - 1] - 1] = wa[x - 1]
            for x in range(1, m + 1):
                letters[high[x - 1] - 1] = wb[x - 1]
            word = "".join(letters)
        out.add(OrderedPartition(parts, word))
    return frozenset(out)


def op_convolution(lam, lam2) -> frozenset:
    """Partitions whose first parts standardize to ``lam`` and remaining parts to ``lam2``."""
    return _convolution(_as_partition(lam), _as_partition(lam2))


def by_definition(kind: str, lam, lam2) -> frozenset:
    """Scan every partition of the combined size and keep those matching the restriction rule."""
    a, b = _as_partition(lam), _as_partition(lam2)
    n, m = a.n, b.n
    out = set()
    for parts in _all_parts(n + m):
        mu = OrderedPartition(parts)
        if kind == "shuffle":
            ok = restrict_values(mu, range(1, n + 1)).parts == a.parts
            ok = ok and restrict_values(mu, range(n + 1, n + m + 1)).parts == b.parts
        elif kind == "convolution":
            k = len(a.parts)
            ok = len(parts) == k + len(b.parts)
            ok = ok and restrict_parts(mu, range(1, k + 1)).parts == a.parts
            ok = ok and restrict_parts(mu, range(k + 1, len(parts) + 1)).parts == b.parts
        else:
            raise ValueError(kind)
        if ok:
            out.add(mu)
    return frozenset(out)


# F basis and the Schröder basis -------------------------------------------------------------


def F(lam) -> FormalSum:
    return FormalSum.single(_as_partition(lam))


def op_product(x: FormalSum, y: FormalSum) -> FormalSum:
    return bilinear(x, y, lambda a, b: FormalSum(_shuffle(a, b)))


def _split(mu: OrderedPartition) -> FormalSum:
    p = len(mu.parts)
    return FormalSum(
        (restrict_parts(mu, range(1, k + 1)), restrict_parts(mu, range(k + 1, p + 1))) for k in range(p + 1)
    )


def op_coproduct(x: FormalSum) -> FormalSum:
    """Cut the list of parts in two, in every way, as pairs ``(bottom, top)``."""
    return x.expand(_split)


def schroder_fiber(s: SchroderPermutree) -> frozenset:
    word = s.decoration.word
    return frozenset(OrderedPartition(parts, word) for parts in _all_parts(s.n) if _insert(parts, word)[0] == s)


def P_star(s: SchroderPermutree) -> FormalSum:
    return FormalSum(schroder_fiber(s))


def _symbol(mu: OrderedPartition):
    if not mu.parts:
        return None
    return _insert(mu.parts, mu.word)[0]


def group_into_fibers(x: FormalSum) -> FormalSum | None:
    """Rewrite an F-expansion on Schröder trees, or ``None`` if some fiber is only partly present."""
    grouped: dict = defaultdict(dict)
    for mu, c in x.items():
        grouped[_symbol(mu)][mu] = c
    out = {}
    for s, terms in grouped.items():
        coeffs = set(terms.values())
        full = schroder_fiber(s) if s is not None else {EMPTY}
        if len(coeffs) != 1 or set(terms) != set(full):
            return None
        out[s] = coeffs.pop()
    return FormalSum(out)


def group_pairs_into_fibers(x: FormalSum) -> FormalSum | None:
    grouped: dict = defaultdict(dict)
    for (a, b), c in x.items():
        grouped[(_symbol(a), _symbol(b))][(a, b)] = c
    out = {}
    for (s, s2), terms in grouped.items():
        left = schroder_fiber(s) if s is not None else {EMPTY}
        right = schroder_fiber(s2) if s2 is not None else {EMPTY}
        coeffs = set(terms.values())
        if len(coeffs) != 1 or set(terms) != set(product(left, right)):
            return None
        out[(s, s2)] = coeffs.pop()
    return FormalSum(out)


def schr_closure_check(n_bound: int = 4, words: Iterable[str] | None = None) -> Counter:
    """Count products and coproducts whose expansion splits into complete fibers.

    Returns a counter with keys ``"product ok"``, ``"product broken"``,
    ``"coproduct ok"`` and ``"coproduct broken"``.
    """
    report: Counter = Counter()
    by_size: dict[int, list[SchroderPermutree]] = defaultdict(list)
    for n in range(1, n_bound):
        for word in map("".join, product("odub", repeat=n)):
            if words is not None and word not in words:
                continue
            by_size[n].extend(schroder_permutrees(word))
    for n, trees in by_size.items():
        for m, trees2 in by_size.items():
            if n + m > n_bound:
                continue
            for s in trees:
                for s2 in trees2:
                    ok = group_into_fibers(op_product(P_star(s), P_star(s2))) is not None
                    report["product ok" if ok else "product broken"] += 1
    for n in range(1, n_bound + 1):
        for word in map("".join, product("odub", repeat=n)):
            for s in fibers(word):
                ok = group_pairs_into_fibers(op_coproduct(P_star(s))) is not None
                report["coproduct ok" if ok else "coproduct broken"] += 1
    return report


__all__ = [
    "restrict_parts",
    "restrict_values",
    "op_shuffle",
    "op_convolution",
    "by_definition",
    "F",
    "op_product",
    "op_coproduct",
    "schroder_fiber",
    "P_star",
    "group_into_fibers",
    "group_pairs_into_fibers",
    "schr_closure_check",
]
