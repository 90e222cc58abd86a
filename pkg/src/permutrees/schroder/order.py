"""Facial weak order on ordered partitions and the Schröder permutree lattice."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Optional

from .._poset import FinitePoset, closure as _closure
from ..core import Decoration, as_decoration
from ..enumeration import DEFAULT_MAX_N
from ..errors import InvalidInput, NotARefinement, SizeBound, SizeMismatch
from .insertion import Parts, _all_parts, _as_partition, _insert, canonical_partition, fibers
from .model import SchroderPermutree, is_increasing_contraction, contract

# facial weak order -----------------------------------------------------------------------


def coinv(parts) -> dict[tuple[int, int], int]:
    """Sign of the part-index difference for every pair ``i < j``."""
    parts = _as_partition(parts).parts if not isinstance(parts, tuple) else parts
    where = {x: k for k, p in enumerate(parts) for x in p}
    n = len(where)
    out = {}
    for i, j in combinations(range(1, n + 1), 2):
        diff = where[i] - where[j]
        out[(i, j)] = (diff > 0) - (diff < 0)
    return out


def _parts(x) -> Parts:
    return x if isinstance(x, tuple) and (not x or isinstance(x[0], tuple)) else _as_partition(x).parts


@lru_cache(maxsize=1 << 16)
def _coinv_vector(parts: Parts) -> tuple[int, ...]:
    table = coinv(parts)
    return tuple(table[k] for k in sorted(table))


def facial_weak_leq(lam, lam2) -> bool:
    a, b = _parts(lam), _parts(lam2)
    if sum(map(len, a)) != sum(map(len, b)):
        raise SizeMismatch("partitions of different sizes")
    return all(x <= y for x, y in zip(_coinv_vector(a), _coinv_vector(b)))


def facial_covers(lam) -> list[Parts]:
    """Upper covers: merge ``a|c`` with ``a << c``, or split a part into ``c|a`` with ``a << c``."""
    parts = _parts(lam)
    out = []
    for i in range(len(parts) - 1):
        if max(parts[i]) < min(parts[i + 1]):
            out.append(parts[:i] + (tuple(sorted(parts[i] + parts[i + 1])),) + parts[i + 2 :])
    for i, part in enumerate(parts):
        for cut in range(1, len(part)):
            out.append(parts[:i] + (part[cut:], part[:cut]) + parts[i + 1 :])
    return sorted(out)


def _check_n(n: int, max_n: Optional[int]) -> None:
    bound = DEFAULT_MAX_N if max_n is None else max_n
    if n > bound:
        raise SizeBound(f"n = {n} exceeds the bound {bound}")


def facial_weak_order(n: int, max_n: Optional[int] = None) -> FinitePoset:
    _check_n(n, max_n)
    elements = _all_parts(n)
    leq = tuple(tuple(facial_weak_leq(a, b) for b in elements) for a in elements)
    return FinitePoset(elements, leq)


def facial_weak_order_by_covers(n: int) -> FinitePoset:
    elements = _all_parts(n)
    where = {p: k for k, p in enumerate(elements)}
    pairs = [(where[p], where[q]) for p in elements for q in facial_covers(p)]
    return FinitePoset(elements, _closure(len(elements), pairs))


# Schröder lattice -------------------------------------------------------------------------


def schroder_lattice(d, max_n: Optional[int] = None) -> FinitePoset:
    """Transitive closure of ``S < S/e`` for increasing and ``S/e < S`` for decreasing contractions."""
    d = as_decoration(d)
    _check_n(len(d), max_n)
    elements = tuple(sorted(fibers(d)))
    where = {s: k for k, s in enumerate(elements)}
    pairs = []
    for k, s in enumerate(elements):
        for edge in s.edges:
            kind = is_increasing_contraction(s, edge)
            if kind is None:
                continue
            target = where[contract(s, edge)]
            pairs.append((k, target) if kind else (target, k))
    return FinitePoset(elements, _closure(len(elements), pairs))


def schroder_quotient(d, max_n: Optional[int] = None) -> FinitePoset:
    """Order induced on fibers: ``S <= S'`` when some partitions of the two fibers compare."""
    d = as_decoration(d)
    _check_n(len(d), max_n)
    groups = fibers(d)
    elements = tuple(sorted(groups))
    rel = [[False] * len(elements) for _ in elements]
    for a, s in enumerate(elements):
        for b, s2 in enumerate(elements):
            rel[a][b] = a == b or any(facial_weak_leq(x, y) for x in groups[s] for y in groups[s2])
    return FinitePoset(elements, _closure(len(elements), [(a, b) for a in range(len(elements)) for b in range(len(elements)) if rel[a][b]]))


def class_extremes(d) -> dict[SchroderPermutree, tuple[Parts, Parts]]:
    """Facial-weak-order minimum and maximum of every fiber."""
    out = {}
    for s, members in fibers(d).items():
        low = [x for x in members if all(facial_weak_leq(x, y) for y in members)]
        high = [x for x in members if all(facial_weak_leq(y, x) for y in members)]
        if len(low) != 1 or len(high) != 1:
            raise InvalidInput(f"fiber of {s} has no unique extreme")
        out[s] = (low[0], high[0])
    return out


def is_interval(members, n: int) -> bool:
    """Whether a set of partitions equals the facial-weak-order interval between its extremes."""
    members = set(members)
    low = [x for x in members if all(facial_weak_leq(x, y) for y in members)]
    high = [x for x in members if all(facial_weak_leq(y, x) for y in members)]
    if len(low) != 1 or len(high) != 1:
        return False
    between = {p for p in _all_parts(n) if facial_weak_leq(low[0], p) and facial_weak_leq(p, high[0])}
    return between == members


def has_schroder_pattern(parts: Parts, d: Decoration, which: str) -> bool:
    """Patterns for fiber extremes, with ``a < b < c``.

    ``which="max"`` looks for ``a|c`` or ``ac`` (adjacent parts or one part)
    with a two-children ``b`` in a later part, or a two-parents ``b`` in an
    earlier part.  ``which="min"`` uses ``c|a`` instead of ``a|c``.
    """
    if which not in ("min", "max"):
        raise InvalidInput(f"which must be 'min' or 'max', not {which!r}")
    k = len(parts)
    spans = [(i, i) for i in range(k)] + [(i, i + 1) for i in range(k - 1)]
    for first, last in spans:
        if first == last:
            pairs = [(a, c) for a in parts[first] for c in parts[first] if a < c]
        elif which == "max":
            pairs = [(a, c) for a in parts[first] for c in parts[last] if a < c]
        else:
            pairs = [(a, c) for c in parts[first] for a in parts[last] if a < c]
        for a, c in pairs:
            if any(a < b < c and d.down(b) for p in parts[last + 1 :] for b in p):
                return True
            if any(a < b < c and d.up(b) for p in parts[:first] for b in p):
                return True
    return False


# refinement -------------------------------------------------------------------------------


def schr_refine(s: SchroderPermutree, d2) -> SchroderPermutree:
    """Reinsert a partition of the fiber of ``s`` with the coarser decoration."""
    d2 = as_decoration(d2)
    if not s.decoration.refines(d2):
        raise NotARefinement(f"{s.decoration.word} does not refine {d2.word}")
    return _insert(canonical_partition(s), d2.word)[0]


__all__ = [
    "coinv",
    "facial_weak_leq",
    "facial_covers",
    "FinitePoset",
    "facial_weak_order",
    "facial_weak_order_by_covers",
    "schroder_lattice",
    "schroder_quotient",
    "class_extremes",
    "is_interval",
    "has_schroder_pattern",
    "schr_refine",
]
