"""Integer point transforms of permutree cones, as exact truncated power series."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Sequence

from .._exact import rank, solve
from ..core import Permutree
from ..correspond import linear_extensions
from ..errors import DegreeBound, ScopeError

MAX_DEGREE = 40

Exponent = tuple[int, ...]


class TruncatedSeries:
    """Polynomial in ``t_1..t_n`` keeping only monomials of total degree at most ``degree``."""

    __slots__ = ("nvars", "degree", "coeffs")

    def __init__(self, nvars: int, degree: int, coeffs: Mapping[Exponent, int] | None = None):
        if degree < 0 or degree > MAX_DEGREE:
            raise DegreeBound(f"degree {degree} outside 0..{MAX_DEGREE}")
        self.nvars = nvars
        self.degree = degree
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c and sum(e) <= degree}

    @classmethod
    def one(cls, nvars: int, degree: int) -> "TruncatedSeries":
        return cls(nvars, degree, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exponent: Exponent, degree: int) -> "TruncatedSeries":
        return cls(len(exponent), degree, {tuple(exponent): 1})

    @classmethod
    def geometric(cls, exponent: Exponent, degree: int) -> "TruncatedSeries":
        """``1 / (1 - t^exponent)``."""
        step = sum(exponent)
        if step == 0:
            raise ValueError("geometric series of the constant monomial diverges")
        terms = {}
        k = 0
        while k * step <= degree:
            terms[tuple(k * x for x in exponent)] = 1
            k += 1
        return cls(len(exponent), degree, terms)

    def _check(self, other: "TruncatedSeries") -> None:
        if (self.nvars, self.degree) != (other.nvars, other.degree):
            raise ValueError("series over different variables or degrees")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        acc = dict(self.coeffs)
        for e, c in other.coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return TruncatedSeries(self.nvars, self.degree, acc)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        acc: dict = defaultdict(int)
        for e1, c1 in self.coeffs.items():
            s1 = sum(e1)
            for e2, c2 in other.coeffs.items():
                if s1 + sum(e2) <= self.degree:
                    acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return TruncatedSeries(self.nvars, self.degree, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.nvars, self.degree, self.coeffs) == (other.nvars, other.degree, other.coeffs)

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self.coeffs.items())))

    def extend(self, nvars: int, offset: int = 0) -> "TruncatedSeries":
        """Rename ``t_i`` to ``t_{i + offset}`` inside a larger set of variables."""
        coeffs = {}
        for e, c in self.coeffs.items():
            big = [0] * nvars
            big[offset : offset + len(e)] = e
            coeffs[tuple(big)] = c
        return TruncatedSeries(nvars, self.degree, coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries(n={self.nvars}, degree={self.degree}, terms={len(self.coeffs)})"


def series_product(factors: Iterable[TruncatedSeries], nvars: int, degree: int) -> TruncatedSeries:
    acc = TruncatedSeries.one(nvars, degree)
    for f in factors:
        acc = acc * f
    return acc


def _indicator(n: int, labels: Iterable[int]) -> Exponent:
    labels = set(labels)
    return tuple(1 if i in labels else 0 for i in range(1, n + 1))


# direct enumeration ------------------------------------------------------------------------


def ipt(t: Permutree, degree: int = 6) -> TruncatedSeries:
    """Count the lattice points of the cone directly: closed along increasing edges, open along decreasing ones."""
    n = t.n
    if degree < 0 or degree > MAX_DEGREE:
        raise DegreeBound(f"degree {degree} outside 0..{MAX_DEGREE}")
    coeffs = {}

    def rec(prefix: list[int], budget: int):
        if len(prefix) == n:
            if all(prefix[c - 1] <= prefix[p - 1] if c < p else prefix[c - 1] < prefix[p - 1] for c, p in t.edges):
                coeffs[tuple(prefix)] = 1
            return
        for x in range(budget + 1):
            prefix.append(x)
            rec(prefix, budget - x)
            prefix.pop()

    rec([], degree)
    return TruncatedSeries(n, degree, coeffs)


# closed forms ------------------------------------------------------------------------------


def chain_transform(perm: Sequence[int], degree: int = 6) -> TruncatedSeries:
    """Product formula for the chain ``perm[0] -> perm[1] -> ...``."""
    n = len(perm)
    factors = [TruncatedSeries.geometric(_indicator(n, perm[i:]), degree) for i in range(n)]
    factors += [
        TruncatedSeries.monomial(_indicator(n, perm[i + 1 :]), degree) for i in range(n - 1) if perm[i] > perm[i + 1]
    ]
    return series_product(factors, n, degree)


def ipt_by_extensions(t: Permutree, degree: int = 6) -> TruncatedSeries:
    acc = TruncatedSeries(t.n, degree)
    for perm in linear_extensions(t):
        acc = acc + chain_transform(perm, degree)
    return acc


def ipt_closed(t: Permutree, degree: int = 6) -> TruncatedSeries:
    """Product over edge cuts, valid when every vertex has a single child."""
    n = t.n
    if any(t.decoration.down(i) for i in range(1, n + 1)):
        raise ScopeError("closed form needs a single child at every vertex")
    full = frozenset(range(1, n + 1))
    sinks = [full] + [c.sink for c in t.cuts]
    factors = [TruncatedSeries.geometric(_indicator(n, s), degree) for s in sinks]
    for child, parent in t.decreasing_edges():
        factors.append(TruncatedSeries.monomial(_indicator(n, t.edge_cut(child, parent).sink), degree))
    return series_product(factors, n, degree)


def rational_term(n: int, denominators: Iterable[Iterable[int]], numerators: Iterable[Iterable[int]], degree: int) -> TruncatedSeries:
    """``prod t^num / prod (1 - t^den)`` with each monomial given by its variable labels."""
    factors = [TruncatedSeries.geometric(_indicator(n, d), degree) for d in denominators]
    factors += [TruncatedSeries.monomial(_indicator(n, m), degree) for m in numerators]
    return series_product(factors, n, degree)


# rays of the closed cone -------------------------------------------------------------------


def _primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    denom = 1
    for x in v:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def cone_rays(t: Permutree) -> list[tuple[int, ...]]:
    """Extreme rays of the closure of the cone, by brute force over tight inequality sets."""
    n = t.n
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = 1
        rows.append(row)  # x_i >= 0
    for c, p in t.edges:
        row = [0] * n
        row[p - 1], row[c - 1] = 1, -1
        rows.append(row)  # x_parent - x_child >= 0
    rays = set()
    for tight in combinations(range(len(rows)), n - 1):
        sub = [rows[k] for k in tight]
        if rank(sub) != n - 1:
            continue
        # kernel direction: add one free coordinate equation and solve
        for pin in range(n):
            extra = [0] * n
            extra[pin] = 1
            sol = solve(sub + [extra], [0] * (n - 1) + [1])
            if sol is not None:
                break
        for sign in (1, -1):
            v = [sign * x for x in sol]
            if all(sum(r[k] * v[k] for k in range(n)) >= 0 for r in rows):
                rays.add(_primitive(v))
    return sorted(rays)
