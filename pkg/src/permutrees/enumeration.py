"""Counting permutrees and their faces.

Every closed formula here has a brute-force twin so that the two can be
compared.  Counts are exact Python integers.
"""

from __future__ import annotations

import os
from collections import Counter
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial
from typing import Iterable, Optional

import numpy as np

from .core import Decoration, Permutree, as_decoration
from .errors import InvalidInput, MethodInapplicable, SizeBound
from .words import Perm, all_permutations

__all__ = [
    "DEFAULT_MAX_N",
    "avoiders",
    "enumerate_permutrees",
    "count",
    "brute_counts_all",
    "gap_profile",
    "gap_recurrence_profile",
    "schroder_avoiders",
    "schroder_table",
    "schroder_count",
    "f_vector",
    "h_vector",
    "decoration_orbit_count",
    "ALPHABET_COUNTS",
    "alphabet_count",
    "normalized_counts",
]

DEFAULT_MAX_N = int(os.environ.get("PERMUTREES_MAX_N", "8"))


def _check_size(n: int, max_n: Optional[int]) -> None:
    bound = DEFAULT_MAX_N if max_n is None else max_n
    if n > bound:
        raise SizeBound(f"size {n} exceeds the brute-force bound {bound}")


# pattern-avoiding permutations ------------------------------------------------


def _free_positions(sigma: Perm, d: Decoration, family: str) -> list[int]:
    """Positions where the new maximum can be inserted without creating a pattern.

    ``family="min"`` avoids ``ca-b`` and ``b-ca``; ``family="max"`` avoids
    ``ac-b`` and ``b-ac``.  The new value can only play the role of ``c``.
    """
    m = len(sigma)
    free = []
    for p in range(m + 1):
        if family == "max":
            if p == 0:
                free.append(p)
                continue
            a = sigma[p - 1]
            later, earlier = sigma[p:], sigma[: p - 1]
        else:
            if p == m:
                free.append(p)
                continue
            a = sigma[p]
            later, earlier = sigma[p + 1 :], sigma[:p]
        if any(b > a and d.down(b) for b in later):
            continue
        if any(b > a and d.up(b) for b in earlier):
            continue
        free.append(p)
    return free


def _grow(d: Decoration, family: str) -> list[Perm]:
    level = [(1,)]
    for m in range(1, len(d)):
        nxt = []
        for sigma in level:
            for p in _free_positions(sigma, d, family):
                nxt.append(sigma[:p] + (m + 1,) + sigma[p:])
        level = nxt
    return level


def avoiders(d, family: str = "min", max_n: Optional[int] = None) -> list[Perm]:
    """Class minima (``family="min"``) or maxima of ``d`` via the generating tree."""
    d = as_decoration(d)
    _check_size(len(d), max_n)
    return sorted(_grow(d, family))


@lru_cache(maxsize=4096)
def _enumerate(word: str) -> tuple[Permutree, ...]:
    from .correspond import p_symbol

    d = Decoration(word)
    trees = {p_symbol(sigma, d) for sigma in _grow(d, "min")}
    return tuple(sorted(trees, key=lambda t: t.key))


def enumerate_permutrees(d, max_n: Optional[int] = None) -> list[Permutree]:
    """All ``d``-permutrees in canonical order."""
    d = as_decoration(d)
    _check_size(len(d), max_n)
    return list(_enumerate(d.word))


# counting methods -------------------------------------------------------------


def _brute(d: Decoration) -> int:
    from .correspond import class_extreme_by_patterns

    return sum(1 for p in all_permutations(len(d)) if class_extreme_by_patterns(p, d, "min"))


@lru_cache(maxsize=16)
def _witness_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """For every permutation and value ``b``: does ``b`` witness a ``ca-b`` (resp. ``b-ca``)?"""
    perms = list(all_permutations(n))
    later = np.zeros((len(perms), n), dtype=bool)
    earlier = np.zeros((len(perms), n), dtype=bool)
    for row, p in enumerate(perms):
        for i in range(n - 1):
            c, a = p[i], p[i + 1]
            if c < a:
                continue
            for b in p[i + 2 :]:
                if a < b < c:
                    later[row, b - 1] = True
            for b in p[:i]:
                if a < b < c:
                    earlier[row, b - 1] = True
    return later, earlier


def brute_counts_all(n: int) -> dict[str, int]:
    """Brute-force counts of class minima for every decoration of size ``n`` at once."""
    if n > 7:
        raise SizeBound("scanning every decoration is limited to n <= 7")
    later, earlier = _witness_tables(n)
    words = ["".join(w) for w in product("odub", repeat=n)]
    down = np.array([[c in "db" for c in w] for w in words], dtype=np.int32)
    up = np.array([[c in "ub" for c in w] for w in words], dtype=np.int32)
    hit = (later.astype(np.int32) @ down.T > 0) | (earlier.astype(np.int32) @ up.T > 0)
    counts = (~hit).sum(axis=0)
    return {w: int(c) for w, c in zip(words, counts)}


def gap_profile(d, max_n: Optional[int] = None) -> Counter:
    """Number of class maxima of ``d`` with each number of free gaps.

    Free gaps are found by trying every insertion of ``n + 1``.
    """
    d = as_decoration(d)
    _check_size(len(d), max_n)
    return Counter(len(_free_positions(sigma, d, "max")) for sigma in _grow(d, "max"))


def gap_recurrence_profile(d) -> Counter:
    """The free-gap profile obtained by the letter-by-letter recurrence."""
    d = as_decoration(d)
    profile = Counter({2: 1})
    for m in range(2, len(d) + 1):
        letter = d.word[m - 1]
        nxt: Counter = Counter()
        for g in range(2, m + 2):
            if letter == "o":
                value = (g - 1) * profile.get(g - 1, 0) if g > 2 else 0
            elif letter in "du":
                value = sum(c for h, c in profile.items() if h >= g - 1)
            else:
                value = sum(h * c for h, c in profile.items() if h >= 2) if g == 2 else 0
            if value:
                nxt[g] = value
        profile = nxt
    return profile


@lru_cache(maxsize=None)
def _root_sum(word: str) -> int:
    if not word:
        return 1
    total = 0
    for i, letter in enumerate(word):
        if letter == "o":
            total += _root_sum(word[:i] + word[i + 1 :])
        else:
            total += _root_sum(word[:i]) * _root_sum(word[i + 1 :])
    return total


@lru_cache(maxsize=None)
def _topmost_sum(word: str) -> int:
    if not word:
        return 1
    if "d" not in word:
        # no vertex with two children: the tree is a chain
        return factorial(len(word))
    nones = [k for k, c in enumerate(word) if c == "o"]
    total = 0
    for i, letter in enumerate(word):
        if letter != "d":
            continue
        for size in range(len(nones) + 1):
            for chosen in combinations(nones, size):
                skip = set(chosen)
                left = "".join(c for k, c in enumerate(word[:i]) if k not in skip)
                right = "".join(c for k, c in enumerate(word[i + 1 :], start=i + 1) if k not in skip)
                total += _topmost_sum(left) * _topmost_sum(right) * factorial(size)
    return total


def _single_parent_word(d: Decoration, method: str) -> str:
    if any(c in "ub" for c in d.word):
        raise MethodInapplicable(f"{method} needs a decoration without two-parent letters")
    return d.word


def _block_product(word: str) -> int:
    """Split at every ``b`` (the letter becomes ``o`` on both sides), then group by topmost ``d``."""
    word = word.replace("u", "d")
    total = 1
    start = 0
    for k, c in enumerate(word):
        if c == "b":
            block = ("o" if start > 0 else "") + word[start:k] + "o"
            total *= _topmost_sum(block)
            start = k + 1
    block = ("o" if start > 0 else "") + word[start:]
    total *= _topmost_sum(block)
    return total


def count(d, method: str = "gap_recurrence", max_n: Optional[int] = None) -> int:
    """Number of ``d``-permutrees.

    ``brute`` scans all permutations for class minima; ``gap_recurrence`` runs
    the free-gap recurrence; ``root_sum`` and ``topmost_sum`` decompose rooted
    trees (decorations over ``o`` and ``d`` only); ``block_product`` first
    factors at ``b`` letters.
    """
    d = as_decoration(d)
    if method == "brute":
        _check_size(len(d), max_n)
        return _brute(d)
    if method == "gap_recurrence":
        return sum(gap_recurrence_profile(d).values())
    if method == "root_sum":
        return _root_sum(_single_parent_word(d, method))
    if method == "topmost_sum":
        return _topmost_sum(_single_parent_word(d, method))
    if method == "block_product":
        return _block_product(d.word)
    raise InvalidInput(f"unknown counting method {method!r}")


# ordered partitions -------------------------------------------------------------

OrderedParts = tuple[tuple[int, ...], ...]


def _partition_free(parts: OrderedParts, d: Decoration, family: str) -> list[OrderedParts]:
    """Children of ``parts`` in the generating tree: insert the new maximum where allowed.

    The maximum family avoids ``a|c-b``, ``ac-b`` (witness later, two children)
    and ``b-a|c``, ``b-ac`` (witness earlier, two parents); the minimum family
    avoids ``c|a-b``, ``ac-b``, ``b-c|a`` and ``b-ac``.
    """
    m = sum(len(p) for p in parts)
    c = m + 1
    k = len(parts)
    out = []
    candidates = []
    for s in range(k + 1):
        candidates.append((parts[:s] + ((c,),) + parts[s:], s))
    for j in range(k):
        candidates.append((parts[:j] + (tuple(sorted(parts[j] + (c,))),) + parts[j + 1 :], j))
    for new, where in candidates:
        if not _introduces_pattern(new, where, d, family):
            out.append(new)
    return out


def _introduces_pattern(parts: OrderedParts, where: int, d: Decoration, family: str) -> bool:
    c = max(max(p) for p in parts)
    home = parts[where]
    partners = []  # (a, part index of the leftmost of a and c, part index of the rightmost)
    for a in home:
        if a != c:
            partners.append((a, where, where))
    if family == "max" and where > 0:
        for a in parts[where - 1]:
            partners.append((a, where - 1, where))
    if family == "min" and where + 1 < len(parts):
        for a in parts[where + 1]:
            partners.append((a, where, where + 1))
    for a, first, last in partners:
        for later in parts[last + 1 :]:
            if any(b > a and d.down(b) for b in later):
                return True
        for earlier in parts[:first]:
            if any(b > a and d.up(b) for b in earlier):
                return True
    return False


def _grow_partitions(d: Decoration, family: str) -> list[OrderedParts]:
    level: list[OrderedParts] = [((1,),)]
    for _ in range(1, len(d)):
        level = [child for parts in level for child in _partition_free(parts, d, family)]
    return level


def schroder_avoiders(d, family: str = "min", max_n: Optional[int] = None) -> list[OrderedParts]:
    d = as_decoration(d)
    _check_size(len(d), max_n)
    return sorted(_grow_partitions(d, family))


def _schroder_brute_table(d: Decoration) -> Counter:
    table: Counter = Counter()
    for parts in _grow_partitions(d, "max"):
        free = len(_partition_free(parts, d, "max"))
        table[((free - 1) // 2, len(parts) - 1)] += 1
    return table


def _schroder_recurrence_table(d: Decoration) -> Counter:
    table: Counter = Counter({(1, 0): 1})
    for m in range(2, len(d) + 1):
        letter = d.word[m - 1]
        nxt: Counter = Counter()
        for g in range(1, m + 1):
            for s in range(0, m):
                if letter == "o":
                    if not (g >= 1 and s >= g - 1):
                        continue
                    value = g * table.get((g, s), 0) + g * table.get((g - 1, s - 1), 0)
                elif letter in "du":
                    if not (g >= 1 and s >= g - 1):
                        continue
                    value = sum(v for (h, t), v in table.items() if t == s and h >= g)
                    value += sum(v for (h, t), v in table.items() if t == s - 1 and h >= g - 1)
                else:
                    if g != 1:
                        continue
                    value = sum(h * v for (h, t), v in table.items() if t == s and h >= 1)
                    value += sum((h + 1) * v for (h, t), v in table.items() if t == s - 1 and h >= 1)
                if value:
                    nxt[(g, s)] = value
        table = nxt
    return table


def schroder_table(d, method: str = "recurrence", max_n: Optional[int] = None) -> Counter:
    """Counts of Schröder class maxima by ``(g, s)``: ``2g+1`` free gaps and ``s`` separators."""
    d = as_decoration(d)
    if method == "brute":
        _check_size(len(d), max_n)
        return _schroder_brute_table(d)
    if method == "recurrence":
        return _schroder_recurrence_table(d)
    raise InvalidInput(f"unknown method {method!r}")


def schroder_count(d, method: str = "recurrence", max_n: Optional[int] = None) -> int:
    return sum(schroder_table(d, method, max_n).values())


def f_vector(d, method: str = "recurrence", full: bool = False) -> tuple[int, ...]:
    """Face numbers of the permutreehedron.

    By default returns ``(f_0, ..., f_{n-2})``: vertices up to facets.  With
    ``full=True`` the empty face and the polytope itself are included, giving
    ``(1, f_0, ..., f_{n-1})``.
    """
    d = as_decoration(d)
    n = len(d)
    table = schroder_table(d, method)
    faces = [sum(v for (g, s), v in table.items() if s == n - 1 - k) for k in range(n)]
    if full:
        return (1, *faces)
    return tuple(faces[: n - 1])


def h_vector(d) -> tuple[int, ...]:
    """``h_k`` = number of ``d``-permutrees with ``k`` increasing edges."""
    d = as_decoration(d)
    counts = Counter(len(t.increasing_edges()) for t in enumerate_permutrees(d))
    return tuple(counts.get(k, 0) for k in range(len(d)))


def h_from_f(faces: Iterable[int], n: int) -> tuple[int, ...]:
    """Invert ``f_k = sum_i binom(i, k) h_i`` for a simple ``(n-1)``-polytope."""
    f = list(faces)
    h = [0] * n
    for i in reversed(range(n)):
        h[i] = f[i] - sum(comb(j, i) * h[j] for j in range(i + 1, n))
    return tuple(h)


# decoration orbits ---------------------------------------------------------------


def decoration_orbit_count(n: int, method: str = "formula") -> int:
    """Number of permutreehedra of dimension ``n`` up to isometry.

    The brute method counts orbits of ``o w o`` (``w`` of length ``n - 1``)
    under reversal and the exchange of ``d`` with ``u``.
    """
    if n < 1:
        raise InvalidInput("n must be positive")
    if method == "formula":
        return (2**n + (-1) ** n + 7) * 2**n // 16
    if method == "recurrence":
        values = [1, 3, 7]
        while len(values) < n:
            values.append(4 * values[-1] + 4 * values[-2] - 16 * values[-3])
        return values[n - 1]
    if method == "brute":
        seen = set()
        orbits = 0
        for w in product("odub", repeat=n - 1):
            d = Decoration("o" + "".join(w) + "o")
            if d.word in seen:
                continue
            orbits += 1
            for image in (d, d.reversed(), d.flipped(), d.reversed().flipped()):
                seen.add(image.word)
        return orbits
    raise InvalidInput(f"unknown method {method!r}")


# tables ------------------------------------------------------------------------

# Sums of C(d) over all words of length n = 1..8 on a sub-alphabet.  Families
# that only differ by exchanging d and u give the same row; one representative
# alphabet is listed.
ALPHABET_COUNTS: dict[str, tuple[int, ...]] = {
    "odub": (4, 32, 320, 3584, 43264, 553472, 7441920, 104740864),
    "odu": (3, 18, 144, 1368, 14688, 173664, 2226528, 30647808),
    "dub": (3, 18, 126, 936, 7164, 55800, 439560, 3489696),
    "odb": (3, 18, 135, 1134, 10287, 99306, 1014039, 10933542),
    "od": (2, 8, 44, 296, 2312, 20384, 199376, 2138336),
    "ob": (2, 8, 40, 224, 1360, 8864, 61984, 467072),
    "db": (2, 8, 36, 168, 796, 3800, 18216, 87536),
    "du": (2, 8, 40, 224, 1344, 8448, 54912, 366080),
    "o": (1, 2, 6, 24, 120, 720, 5040, 40320),
    "d": (1, 2, 5, 14, 42, 132, 429, 1430),
    "b": (1, 2, 4, 8, 16, 32, 64, 128),
}


def alphabet_count(alphabet: str, n: int, method: str = "gap_recurrence") -> int:
    """Sum of ``C(d)`` over all words of length ``n`` on ``alphabet``."""
    if method == "brute" and n <= 7:
        counts = brute_counts_all(n)
        return sum(counts["".join(w)] for w in product(alphabet, repeat=n))
    return sum(count(Decoration("".join(w)), method) for w in product(alphabet, repeat=n))


def normalized_counts(sizes: Iterable[int] = (3, 4, 5, 6)) -> list[tuple[str, int]]:
    """``(decoration, C(decoration))`` for every boundary-normalized word of each size."""
    rows = []
    for n in sizes:
        inner = max(n - 2, 0)
        for w in product("odub", repeat=inner):
            word = ("o" + "".join(w) + "o") if n >= 2 else "o"
            rows.append((word, count(Decoration(word))))
    return rows
