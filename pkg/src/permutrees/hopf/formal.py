"""Finite integer combinations of basis elements."""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Optional

from ..errors import MixedGrading


class FormalSum:
    """A map from basis keys to nonzero integers.

    Keys are arbitrary hashables; ``grade`` reads the size of a key and is
    only used when a caller asks for homogeneity.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Hashable, int] | Iterable[Hashable]] = None):
        acc: dict = defaultdict(int)
        if terms is None:
            pass
        elif isinstance(terms, Mapping):
            for k, c in terms.items():
                acc[k] += c
        else:
            for k in terms:
                acc[k] += 1
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def single(cls, key: Hashable, coeff: int = 1) -> "FormalSum":
        return cls({key: coeff})

    # container protocol
    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __getitem__(self, key) -> int:
        return self._terms.get(key, 0)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def support(self) -> frozenset:
        return frozenset(self._terms)

    # arithmetic
    def __add__(self, other: "FormalSum") -> "FormalSum":
        acc = dict(self._terms)
        for k, c in other.items():
            acc[k] = acc.get(k, 0) + c
        return FormalSum(acc)

    def __neg__(self) -> "FormalSum":
        return FormalSum({k: -c for k, c in self.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "FormalSum":
        return FormalSum({k: scalar * c for k, c in self.items()})

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalSum):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def map_keys(self, fn: Callable[[Hashable], Hashable]) -> "FormalSum":
        acc: dict = defaultdict(int)
        for k, c in self.items():
            acc[fn(k)] += c
        return FormalSum(acc)

    def expand(self, fn: Callable[[Hashable], "FormalSum"]) -> "FormalSum":
        """Linear extension of ``fn`` from keys to sums."""
        acc: dict = defaultdict(int)
        for k, c in self.items():
            for k2, c2 in fn(k).items():
                acc[k2] += c * c2
        return FormalSum(acc)

    def grade(self, size: Callable[[Hashable], int]) -> int:
        sizes = {size(k) for k in self}
        if len(sizes) > 1:
            raise MixedGrading(f"terms of sizes {sorted(sizes)}")
        return sizes.pop() if sizes else 0

    def format(self, name: Callable[[Hashable], str]) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self.items(), key=lambda kv: name(kv[0])):
            label = name(k)
            parts.append(label if c == 1 else f"{c}·{label}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FormalSum({self._terms!r})"


def bilinear(x: FormalSum, y: FormalSum, op: Callable[[Hashable, Hashable], FormalSum]) -> FormalSum:
    acc: dict = defaultdict(int)
    for a, ca in x.items():
        for b, cb in y.items():
            for k, c in op(a, b).items():
                acc[k] += ca * cb * c
    return FormalSum(acc)
