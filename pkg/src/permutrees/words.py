"""Small helpers on permutations written in one-line notation.

Permutations are tuples of the values ``1..n``.  Nothing here knows about
decorations; the module is shared by the correspondence, lattice and algebra
layers.
"""

from __future__ import annotations

from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInput

Perm = tuple[int, ...]


def is_permutation(word: Sequence[int]) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def check_permutation(word: Sequence[int]) -> Perm:
    word = tuple(int(x) for x in word)
    if not is_permutation(word):
        raise InvalidInput(f"not a permutation of [1..{len(word)}]: {word}")
    return word


def parse_permutation(text: str) -> Perm:
    """Read ``"2751346"`` or ``"10,2,3,..."``.

    >>> parse_permutation("231")
    (2, 3, 1)
    >>> parse_permutation("3,1,2")
    (3, 1, 2)
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        word = [int(x) for x in text.split(",")]
    else:
        word = [int(c) for c in text]
    return check_permutation(word)


def format_permutation(perm: Sequence[int]) -> str:
    if len(perm) <= 9:
        return "".join(str(x) for x in perm)
    return ",".join(str(x) for x in perm)


def all_permutations(n: int) -> Iterator[Perm]:
    """All permutations of ``[n]`` in lexicographic order."""
    return _itertools_permutations(range(1, n + 1))


def inverse(perm: Sequence[int]) -> Perm:
    inv = [0] * len(perm)
    for position, value in enumerate(perm, start=1):
        inv[value - 1] = position
    return tuple(inv)


def standardize(word: Iterable[int]) -> Perm:
    """Relabel distinct integers by ``1..k`` keeping their relative order.

    >>> standardize([7, 2, 5])
    (3, 1, 2)
    """
    word = list(word)
    rank = {value: r for r, value in enumerate(sorted(word), start=1)}
    return tuple(rank[x] for x in word)


def reverse(perm: Sequence[int]) -> Perm:
    return tuple(reversed(perm))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def inversions(perm: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Pairs of values ``(a, b)`` with ``a < b`` where ``b`` comes first."""
    position = inverse(perm)
    n = len(perm)
    return frozenset(
        (a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if position[b - 1] < position[a - 1]
    )


def descents(perm: Sequence[int]) -> frozenset[int]:
    """Positions ``i`` with ``perm[i] > perm[i+1]`` (1-based)."""
    return frozenset(i for i in range(1, len(perm)) if perm[i - 1] > perm[i])


def recoils(perm: Sequence[int]) -> frozenset[int]:
    """Values ``i`` such that ``i + 1`` appears before ``i``."""
    position = inverse(perm)
    return frozenset(i for i in range(1, len(perm)) if position[i] < position[i - 1])
