"""The permutree algebra on the P basis, its dual Q basis, and the E and H bases.

``None`` stands for the empty permutree (the unit) wherever a tree is expected
in a coproduct term.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from ..core import Decoration, Permutree, require_valid
from ..correspond import linear_extensions, p_symbol
from ..errors import MixedGrading, ScopeError
from ..lattice import class_min, rotate, tree_leq
from ..enumeration import enumerate_permutrees
from .formal import FormalSum, bilinear
from .fqsym import DecPerm, convolution, restrict_values, shifted_concat

EMPTY_TREE = None


def _tree_of(x: DecPerm) -> Optional[Permutree]:
    return p_symbol(x.perm, x.word) if x.n else EMPTY_TREE


def _ext(t: Permutree, perm) -> DecPerm:
    return DecPerm(tuple(perm), t.decoration.word)


# fibers --------------------------------------------------------------------------------


@lru_cache(maxsize=1 << 14)
def fiber(t: Permutree) -> frozenset:
    """The linear extensions of ``t`` as decorated permutations."""
    return frozenset(_ext(t, p) for p in linear_extensions(t))


def P_in_F(t: Optional[Permutree]) -> FormalSum:
    if t is EMPTY_TREE:
        return FormalSum.single(DecPerm((), ""))
    return FormalSum(fiber(t))


def to_F(x: FormalSum) -> FormalSum:
    """Expand a sum of trees (or of pairs of trees) in the F basis."""

    def one(key):
        if isinstance(key, tuple) and not isinstance(key, Permutree):
            left, right = P_in_F(key[0]), P_in_F(key[1])
            return FormalSum({(a, b): 1 for a in left for b in right})
        return P_in_F(key)

    return x.expand(one)


def P(t: Permutree) -> FormalSum:
    return FormalSum.single(t)


def from_F(x: FormalSum) -> FormalSum:
    """Rewrite an F-sum made of complete fibers in the P basis; raises if a fiber is broken."""
    out: dict = {}
    for key, c in x.items():
        tree = _tree_of(key)
        out.setdefault(tree, set()).add((key, c))
    result = {}
    for tree, members in out.items():
        coeffs = {c for _, c in members}
        keys = {k for k, _ in members}
        expected = fiber(tree) if tree is not EMPTY_TREE else {DecPerm((), "")}
        if keys != set(expected) or len(coeffs) != 1:
            raise ValueError(f"F-sum is not a combination of fibers near {tree}")
        result[tree] = coeffs.pop()
    return FormalSum(result)


# product --------------------------------------------------------------------------------


def _interval(low: Permutree, high: Permutree) -> list[Permutree]:
    """Lattice interval, by walking increasing rotations from the bottom."""
    seen = {low}
    queue = deque([low])
    while queue:
        t = queue.popleft()
        for edge in t.increasing_edges():
            s = rotate(t, edge)
            if s not in seen and tree_leq(s, high):
                seen.add(s)
                queue.append(s)
    return sorted(seen)


def over(t: Permutree, t2: Permutree) -> Permutree:
    """``t`` below ``t2``: insert an extension of ``t`` followed by a shifted one of ``t2``."""
    word = shifted_concat(_ext(t, class_min(t)), _ext(t2, class_min(t2)))
    return p_symbol(word.perm, word.word)


def under(t: Permutree, t2: Permutree) -> Permutree:
    """``t`` above ``t2``: the shifted extension of ``t2`` comes first."""
    word = shifted_concat(_ext(t, class_min(t)), _ext(t2, class_min(t2)))
    n = t.n
    perm = word.perm[n:] + word.perm[:n]
    return p_symbol(perm, word.word)


@lru_cache(maxsize=1 << 12)
def p_product(t: Permutree, t2: Permutree) -> tuple[Permutree, ...]:
    """Trees of ``P_t * P_t2``: the interval between ``over`` and ``under``."""
    return tuple(_interval(over(t, t2), under(t, t2)))


def _p_mul(a, b) -> FormalSum:
    if a is EMPTY_TREE:
        return FormalSum.single(b)
    if b is EMPTY_TREE:
        return FormalSum.single(a)
    return FormalSum(p_product(a, b))


def p_multiply(x: FormalSum, y: FormalSum) -> FormalSum:
    return bilinear(x, y, _p_mul)


def p_multiply_all(trees: Sequence[Permutree]) -> FormalSum:
    acc = FormalSum.single(EMPTY_TREE)
    for t in trees:
        acc = p_multiply(acc, FormalSum.single(t))
    return acc


# coproduct ------------------------------------------------------------------------------


def restrict_tree(t: Permutree, labels: Iterable[int]) -> Permutree:
    """The induced subtree on ``labels``, relabelled ``1..k``; lost neighbours become stubs."""
    labels = sorted(set(labels))
    rank = {v: k for k, v in enumerate(labels, start=1)}
    word = "".join(t.decoration.word[v - 1] for v in labels)
    keep = lambda slot: rank.get(slot) if slot is not None else None  # noqa: E731
    parents = tuple(tuple(keep(s) for s in t.parents_of(v)) for v in labels)
    children = tuple(tuple(keep(s) for s in t.children_of(v)) for v in labels)
    return require_valid(Permutree(Decoration(word), parents, children))


def _components(t: Permutree, labels: frozenset) -> list[frozenset]:
    left = set(labels)
    out = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in t.parents_of(v) + t.children_of(v):
                if w is not None and w in left and w not in comp:
                    comp.add(w)
                    stack.append(w)
        left -= comp
        out.append(frozenset(comp))
    return sorted(out, key=min)


def lower_sets(t: Permutree) -> list[frozenset]:
    """Order ideals of the tree poset; each one is the part below a cut."""
    n = t.n
    ideals = set()

    def close_grow(chosen: frozenset):
        if chosen in ideals:
            return
        ideals.add(chosen)
        for v in range(1, n + 1):
            if v not in chosen and all(c is None or c in chosen for c in t.children_of(v)):
                close_grow(chosen | {v})

    close_grow(frozenset())
    return sorted(ideals, key=lambda s: (len(s), sorted(s)))


def forest(t: Permutree, labels: frozenset) -> tuple[Permutree, ...]:
    """Components of the induced forest, standardized, ordered by smallest label."""
    return tuple(restrict_tree(t, comp) for comp in _components(t, labels))


def p_coproduct(t: Permutree) -> list[tuple[tuple[Permutree, ...], tuple[Permutree, ...]]]:
    """One ``(below, above)`` pair of forests per cut."""
    require_valid(t)
    full = frozenset(range(1, t.n + 1))
    return [(forest(t, low), forest(t, full - low)) for low in lower_sets(t)]


def p_coproduct_sum(t: Permutree) -> FormalSum:
    """``Delta P_t`` in the P tensor P basis, with the forests multiplied left to right."""
    acc = FormalSum()
    for below, above in p_coproduct(t):
        left, right = p_multiply_all(below), p_multiply_all(above)
        acc = acc + FormalSum({(a, b): ca * cb for a, ca in left.items() for b, cb in right.items()})
    return acc


# dual basis -----------------------------------------------------------------------------


def q_product(t: Permutree, t2: Permutree) -> list[Permutree]:
    """Trees of ``Q_t * Q_t2``, one per shuffle of the two decorations (with repetition)."""
    a, b = _ext(t, class_min(t)), _ext(t2, class_min(t2))
    return sorted(_tree_of(x) for x in convolution(a, b))


def q_coproduct(t: Permutree) -> list[tuple[Optional[Permutree], Optional[Permutree]]]:
    """One term per gap: split an extension into small and large values."""
    x = _ext(t, class_min(t))
    n = t.n
    out = []
    for k in range(n + 1):
        low = restrict_values(x, range(1, k + 1))
        high = restrict_values(x, range(k + 1, n + 1))
        out.append((_tree_of(low), _tree_of(high)))
    return out


# multiplicative bases -------------------------------------------------------------------


@lru_cache(maxsize=256)
def _lattice(word: str) -> tuple[tuple[Permutree, ...], dict]:
    trees = tuple(enumerate_permutrees(Decoration(word), max_n=len(word)))
    above = {t: tuple(s for s in trees if tree_leq(t, s)) for t in trees}
    return trees, above


def _tree_size(t) -> int:
    return 0 if t is EMPTY_TREE else t.n


def E(t: Permutree) -> FormalSum:
    """``E^t`` in the P basis: everything above ``t``."""
    _, above = _lattice(t.decoration.word)
    return FormalSum(above[t])


def H(t: Permutree) -> FormalSum:
    """``H^t`` in the P basis: everything below ``t``."""
    trees, above = _lattice(t.decoration.word)
    return FormalSum(s for s in trees if t in above[s])


def _mobius_solve(x: FormalSum, basis: str) -> FormalSum:
    """Write a P-sum in the E or H basis by peeling off extremal terms."""
    remaining = x
    result: dict = {}
    while not remaining.is_zero():
        # for E take a term with nothing below it in the support, for H nothing above
        support = list(remaining)
        if basis == "E":
            pick = next(t for t in support if not any(s != t and tree_leq(s, t) for s in support))
            piece = E(pick)
        else:
            pick = next(t for t in support if not any(s != t and tree_leq(t, s) for s in support))
            piece = H(pick)
        c = remaining[pick]
        result[pick] = result.get(pick, 0) + c
        remaining = remaining - c * piece
    return FormalSum(result)


def basis_change(x: FormalSum, source: str, target: str) -> FormalSum:
    """Convert between the P, E and H bases; terms must share one decoration."""
    words = {t.decoration.word for t in x}
    if len(words) > 1:
        sizes = {len(w) for w in words}
        if len(sizes) > 1:
            raise MixedGrading(f"terms of sizes {sorted(sizes)}")
    for name in (source, target):
        if name not in ("P", "E", "H"):
            raise ValueError(f"unknown basis {name!r}")
    if source == "E":
        x = x.expand(E)
    elif source == "H":
        x = x.expand(H)
    if target == "P":
        return x
    return _mobius_solve(x, target)


def is_decomposable(t: Permutree, basis: str = "E", method: str = "cuts") -> bool:
    """Whether ``E^t`` (or ``H^t``) factors as a product of two smaller basis elements."""
    n = t.n
    if basis not in ("E", "H"):
        raise ValueError("basis must be 'E' or 'H'")
    if method == "cuts":
        sources = {c.source for c in t.cuts}
        for k in range(1, n):
            low = frozenset(range(1, k + 1))
            high = frozenset(range(k + 1, n + 1))
            if (low if basis == "E" else high) in sources:
                return True
        return False
    if method == "extensions":
        for perm in linear_extensions(t):
            for k in range(1, n):
                prefix = set(perm[:k])
                target = set(range(1, k + 1)) if basis == "E" else set(range(n - k + 1, n + 1))
                if prefix == target:
                    return True
        return False
    if method == "product":
        for k in range(1, n):
            left_word, right_word = t.decoration.word[:k], t.decoration.word[k:]
            for a in enumerate_permutrees(left_word):
                for b in enumerate_permutrees(right_word):
                    joined = over(a, b) if basis == "E" else under(a, b)
                    if joined == t:
                        return True
        return False
    raise ValueError(f"unknown method {method!r}")


def indecomposable_generators(d, basis: str = "E") -> list[Permutree]:
    """Minimal elements of the upper set of indecomposable trees."""
    trees = enumerate_permutrees(d)
    inde = [t for t in trees if not is_decomposable(t, basis)]
    return [t for t in inde if not any(s != t and tree_leq(s, t) for s in inde)]


# dendriform on the P basis ----------------------------------------------------------------


def _single_parent(t: Permutree) -> bool:
    return not any(t.decoration.up(i) for i in range(1, t.n + 1))


def _top(t: Permutree) -> int:
    return next(v for v in range(1, t.n + 1) if all(p is None for p in t.parents_of(v)))


def p_dendriform(t: Permutree, t2: Permutree, side: str) -> FormalSum:
    """Trees of the product interval whose top vertex comes from ``t`` (left) or ``t2`` (right)."""
    if not (_single_parent(t) and _single_parent(t2)):
        raise ScopeError("the P-basis dendriform rule needs one parent at every vertex")
    n = t.n
    wanted = _top(t) if side == "left" else _top(t2) + n
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return FormalSum(s for s in p_product(t, t2) if _top(s) == wanted)


def tree_name(t: Optional[Permutree]) -> str:
    if t is EMPTY_TREE:
        return "1"
    return f"P[{t.decoration.word};{''.join(map(str, class_min(t)))}]"
