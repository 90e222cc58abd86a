"""Decorated permutations and their shuffle algebra.

A decorated permutation is a word of letters, each letter a value together
with a decoration.  Both the shuffle and the convolution move whole letters,
so the decoration of a value never changes; only the bookkeeping differs
(shuffle permutes positions, convolution renames values).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple, Sequence

from ..core import as_decoration
from ..errors import EmptyOperand
from ..words import Perm, check_permutation, standardize
from .formal import FormalSum, bilinear


class DecPerm(NamedTuple):
    """``perm`` in one-line notation; ``word[v - 1]`` decorates the value ``v``."""

    perm: Perm
    word: str

    @property
    def n(self) -> int:
        return len(self.perm)

    def __str__(self) -> str:
        body = "".join(map(str, self.perm)) if self.n < 10 else ",".join(map(str, self.perm))
        return f"F[{self.word};{body}]"


EMPTY = DecPerm((), "")


def dec(perm: Sequence[int], word=None) -> DecPerm:
    perm = check_permutation(perm)
    if word is None:
        word = "o" * len(perm)
    word = as_decoration(word).word if perm else ""
    if len(word) != len(perm):
        raise ValueError("decoration and permutation differ in length")
    return DecPerm(perm, word)


def _as_dec(x) -> DecPerm:
    return x if isinstance(x, DecPerm) else dec(x)


def shifted_concat(a, b) -> DecPerm:
    a, b = _as_dec(a), _as_dec(b)
    return DecPerm(a.perm + tuple(v + a.n for v in b.perm), a.word + b.word)


@lru_cache(maxsize=1 << 14)
def _shuffle(a: DecPerm, b: DecPerm) -> frozenset:
    n, m = a.n, b.n
    shifted = tuple(v + n for v in b.perm)
    word = a.word + b.word
    out = set()
    for spots in combinations(range(n + m), n):
        chosen = set(spots)
        ia, ib = iter(a.perm), iter(shifted)
        out.add(DecPerm(tuple(next(ia) if p in chosen else next(ib) for p in range(n + m)), word))
    return frozenset(out)


def shifted_shuffle(a, b) -> frozenset:
    """Interleavings of ``a`` with ``b`` shifted up by ``|a|``; decorations follow the values."""
    return _shuffle(_as_dec(a), _as_dec(b))


@lru_cache(maxsize=1 << 14)
def _convolution(a: DecPerm, b: DecPerm) -> frozenset:
    n, m = a.n, b.n
    out = set()
    for low in combinations(range(1, n + m + 1), n):
        high = [v for v in range(1, n + m + 1) if v not in set(low)]
        perm = tuple(low[v - 1] for v in a.perm) + tuple(high[v - 1] for v in b.perm)
        word = [""] * (n + m)
        for p, v in enumerate(perm):
            source = a.word[a.perm[p] - 1] if p < n else b.word[b.perm[p - n] - 1]
            word[v - 1] = source
        out.add(DecPerm(perm, "".join(word)))
    return frozenset(out)


def convolution(a, b) -> frozenset:
    """Words whose first ``|a|`` letters standardize to ``a`` and the rest to ``b``; decorations stay put."""
    return _convolution(_as_dec(a), _as_dec(b))


def restrict_positions(x: DecPerm, start: int, stop: int) -> DecPerm:
    """Standardized factor of the letters at positions ``start..stop-1``."""
    letters = x.perm[start:stop]
    perm = standardize(letters)
    word = [""] * len(perm)
    for v, s in zip(letters, perm):
        word[s - 1] = x.word[v - 1]
    return DecPerm(perm, "".join(word))


def restrict_values(x: DecPerm, values) -> DecPerm:
    """Standardized subword on a set of values."""
    values = set(values)
    letters = tuple(v for v in x.perm if v in values)
    perm = standardize(letters)
    word = [""] * len(perm)
    for v, s in zip(letters, perm):
        word[s - 1] = x.word[v - 1]
    return DecPerm(perm, "".join(word))


def F(perm, word=None) -> FormalSum:
    return FormalSum.single(dec(perm, word) if not isinstance(perm, DecPerm) else perm)


def fq_product(x: FormalSum, y: FormalSum) -> FormalSum:
    return bilinear(x, y, lambda a, b: FormalSum(_shuffle(a, b)))


def _split(x: DecPerm) -> FormalSum:
    return FormalSum((restrict_positions(x, 0, k), restrict_positions(x, k, x.n)) for k in range(x.n + 1))


def fq_coproduct(x: FormalSum) -> FormalSum:
    """Sum over the ways to cut a word in two, as pairs ``(left, right)``."""
    return x.expand(_split)


def tensor_product(x: FormalSum, y: FormalSum) -> FormalSum:
    """Product in the tensor square: pairs multiply componentwise."""

    def op(a, b):
        left = fq_product(FormalSum.single(a[0]), FormalSum.single(b[0]))
        right = fq_product(FormalSum.single(a[1]), FormalSum.single(b[1]))
        return FormalSum({(l, r): cl * cr for l, cl in left.items() for r, cr in right.items()})

    return bilinear(x, y, op)


# dendriform splitting ----------------------------------------------------------------


def _dendri(a: DecPerm, b: DecPerm, side: str) -> frozenset:
    if a.n == 0 or b.n == 0:
        raise EmptyOperand("dendriform products need nonempty words")
    if side == "left":
        last = a.perm[-1]
        return frozenset(s for s in _shuffle(a, b) if s.perm[-1] == last)
    if side == "right":
        last = b.perm[-1] + a.n
        return frozenset(s for s in _shuffle(a, b) if s.perm[-1] == last)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def dendriform(x: FormalSum, y: FormalSum, side: str) -> FormalSum:
    """The half of the shuffle product that ends with the last letter of the left (or shifted right) factor."""
    return bilinear(x, y, lambda a, b: FormalSum(_dendri(a, b, side)))
