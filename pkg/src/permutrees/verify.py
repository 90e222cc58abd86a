"""Acceptance checks shared by the command line and the test suite.

Each check recomputes a published number or an identity along two
independent routes and returns a :class:`Check` with expected and computed
values.  Sizes are parameters so quick runs stay quick.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Optional

import networkx as nx
import numpy as np

from . import _exact
from ._poset import FinitePoset, closure
from .core import Permutree, as_decoration, boundary_normalize
from .correspond import p_symbol, rewriting_class
from .enumeration import (
    ALPHABET_COUNTS,
    brute_counts_all,
    count,
    decoration_orbit_count,
    enumerate_permutrees,
    f_vector,
    h_vector,
    schroder_count,
    alphabet_count,
)
from .geometry import (
    edge_step,
    face_counts,
    facet_rhs,
    fan_check,
    isometry_formula,
    isometry_group_order,
    matriochka_holds,
    parallel_facet_formula,
    parallel_facets,
    polytope,
    rotation_factor,
    skeleton,
    vertex,
)
from .hopf import (
    E,
    H,
    DecPerm,
    FormalSum,
    P_in_F,
    dec,
    dendriform,
    fq_coproduct,
    fq_product,
    from_F,
    is_decomposable,
    over,
    p_coproduct_sum,
    p_dendriform,
    p_multiply,
    p_product,
    q_coproduct,
    q_product,
    tensor_product,
    to_F,
    under,
)
from .hopf.ipt import TruncatedSeries, chain_transform, ipt, ipt_by_extensions, ipt_closed, rational_term
from .hopf.fqsym import shifted_shuffle
from .lattice import (
    class_max,
    class_min,
    refine_project,
    rotate,
    rotation_graph,
    tree_leq,
    weak_join,
    weak_leq,
    weak_meet,
    weak_up_covers,
)
from .words import all_permutations

LETTERS = "odub"
COARSER = {"o": "odub", "d": "db", "u": "ub", "b": "b"}


@dataclass
class Check:
    id: str
    title: str
    passed: bool
    expected: str
    computed: str
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} [{self.id}] {self.title}: expected {self.expected}; computed {self.computed}"


def words(n: int, alphabet: str = LETTERS) -> list[str]:
    return ["".join(w) for w in itertools.product(alphabet, repeat=n)]


def coarsenings(word: str) -> list[str]:
    """Every decoration that ``word`` refines, itself included."""
    return ["".join(w) for w in itertools.product(*(COARSER[c] for c in word))]


class _Tally:
    """Counts failures per named property and keeps the first few examples."""

    def __init__(self) -> None:
        self.checked: Counter = Counter()
        self.failed: Counter = Counter()
        self.examples: list[str] = []

    def __call__(self, name: str, ok: bool, example: Callable[[], str] | str = "") -> None:
        self.checked[name] += 1
        if not ok:
            self.failed[name] += 1
            if len(self.examples) < 8:
                self.examples.append(f"{name}: {example() if callable(example) else example}")

    @property
    def ok(self) -> bool:
        return not self.failed

    def summary(self) -> str:
        return ", ".join(f"{k} {self.checked[k] - self.failed[k]}/{self.checked[k]}" for k in self.checked)


def _tally_check(cid: str, title: str, tally: _Tally) -> Check:
    return Check(cid, title, tally.ok, "every instance holds", tally.summary(), tally.examples)


# 1 -------------------------------------------------------------------------------------------


def check_alphabet_counts(n: int = 5) -> Check:
    """Row sums of the factorial-Catalan numbers over sub-alphabets, by generating tree and by brute force."""
    rows_ok = True
    computed, expected, notes = [], [], []
    brute = {m: brute_counts_all(m) for m in range(1, n + 1)}
    for alphabet, printed in ALPHABET_COUNTS.items():
        by_tree = [alphabet_count(alphabet, m) for m in range(1, n + 1)]
        by_brute = [sum(brute[m][w] for w in words(m, alphabet)) for m in range(1, n + 1)]
        ok = by_tree == by_brute == list(printed[:n])
        rows_ok &= ok
        expected.append(f"{alphabet}:{list(printed[:n])}")
        computed.append(f"{alphabet}:{by_tree}")
        notes.append(f"{'PASS' if ok else 'FAIL'} row {{{','.join(alphabet)}}} printed {list(printed[:n])} recurrence {by_tree} brute {by_brute}")
    return Check("1", f"counts by alphabet for n = 1..{n}", rows_ok, "; ".join(expected), "; ".join(computed), notes)


# 2 -------------------------------------------------------------------------------------------


def check_recurrences(n: int = 6) -> Check:
    tally = _Tally()
    for m in range(1, n + 1):
        brute = brute_counts_all(m)
        for w, c in brute.items():
            d = as_decoration(w)
            tally("gap_recurrence", count(d, "gap_recurrence") == c, w)
            tally("block_product", count(d, "block_product") == c, w)
            if set(w) <= set("od"):
                tally("root_sum", count(d, "root_sum") == c, w)
                tally("topmost_sum", count(d, "topmost_sum") == c, w)
    return _tally_check("2", f"counting formulas against brute force, all decorations n <= {n}", tally)


# 3 -------------------------------------------------------------------------------------------


def _weak_interval(low, high, perms) -> set:
    return {p for p in perms if weak_leq(low, p) and weak_leq(p, high)}


@dataclass(frozen=True)
class _TreeLattice:
    trees: tuple
    index: dict
    poset: FinitePoset


_LATTICES: dict[str, _TreeLattice] = {}


def tree_lattice(word: str) -> _TreeLattice:
    """Permutrees ordered by the transitive closure of increasing rotations."""
    if word not in _LATTICES:
        graph = rotation_graph(word)
        trees = graph.nodes
        pairs = [(a, b) for a, b, _ in graph.arcs]
        _LATTICES[word] = _TreeLattice(trees, {t: k for k, t in enumerate(trees)}, FinitePoset(trees, closure(len(trees), pairs)))
    return _LATTICES[word]


def check_congruences(n: int = 4) -> Check:
    tally = _Tally()
    for m in range(1, n + 1):
        perms = list(all_permutations(m))
        for w in words(m):
            lat = tree_lattice(w)
            fibers: dict = {}
            for p in perms:
                fibers.setdefault(p_symbol(p, w), []).append(p)
            for t, members in fibers.items():
                tally("rewriting closure = fiber", rewriting_class(members[0], w) == set(members), lambda: f"{w} {t}")
                low, high = class_min(t), class_max(t)
                tally("fiber = weak interval", _weak_interval(low, high, perms) == set(members), lambda: f"{w} {t}")
            if not lat.poset.is_lattice():
                tally("rotation order is a lattice", False, w)
                continue
            meet, join = lat.poset.meet_table, lat.poset.join_table
            image = {p: lat.index[p_symbol(p, w)] for p in perms}
            for s, t in itertools.combinations_with_replacement(perms, 2):
                a, b = image[s], image[t]
                tally("P(meet) = meet(P)", image[weak_meet(s, t)] == meet[a, b], lambda: f"{w} {s} {t}")
                tally("P(join) = join(P)", image[weak_join(s, t)] == join[a, b], lambda: f"{w} {s} {t}")
    return _tally_check("3", f"congruence classes, intervals and quotient lattice, n <= {n}", tally)


# 4 -------------------------------------------------------------------------------------------


def check_rotation_lattice(n: int = 4) -> Check:
    tally = _Tally()
    for m in range(1, n + 1):
        perms = list(all_permutations(m))
        for w in words(m):
            graph = rotation_graph(w)
            g = graph.to_networkx()
            tally("connected", nx.is_weakly_connected(g), w)
            tally("acyclic", nx.is_directed_acyclic_graph(g), w)
            tally("one source and one sink", len(graph.sources()) == 1 and len(graph.sinks()) == 1, w)
            lat = tree_lattice(w)
            order_ok = all(
                bool(lat.poset.leq[a][b]) == tree_leq(s, t) for a, s in enumerate(lat.trees) for b, t in enumerate(lat.trees)
            )
            tally("rotation closure = class-minimum order", order_ok, w)
            for p in perms:
                t = p_symbol(p, w)
                for cover, (i, j) in weak_up_covers(p):
                    t2 = p_symbol(cover, w)
                    ok = t2 == t or ((i, j) in t.edges and rotate(t, (i, j)) == t2)
                    tally("weak cover is a rotation or nothing", ok, lambda: f"{w} {p}")
        # refinement maps on every pair of comparable decorations
        for w in words(m):
            fine = tree_lattice(w)
            for w2 in coarsenings(w):
                coarse = tree_lattice(w2)
                img = np.array([coarse.index[refine_project(t, w2)] for t in fine.trees])
                ok_meet = np.array_equal(img[fine.poset.meet_table], coarse.poset.meet_table[np.ix_(img, img)])
                ok_join = np.array_equal(img[fine.poset.join_table], coarse.poset.join_table[np.ix_(img, img)])
                tally("projection is a lattice homomorphism", ok_meet and ok_join, lambda: f"{w} -> {w2}")
    return _tally_check("4", f"rotation graph and refinement projections, n <= {n}", tally)


# 5 -------------------------------------------------------------------------------------------

REFERENCE_TREE = (
    '{"n":7,"decoration":"buobobu","vertices":['
    '{"label":1,"parents":[null,null],"children":[null,2]},'
    '{"label":2,"parents":[1,3],"children":[null]},'
    '{"label":3,"parents":[4],"children":[2]},'
    '{"label":4,"parents":[null,6],"children":[3,5]},'
    '{"label":5,"parents":[4],"children":[null]},'
    '{"label":6,"parents":[null,null],"children":[4,7]},'
    '{"label":7,"parents":[6,null],"children":[null]}]}'
)
REFERENCE_VERTEX = (7, -4, 3, 8, 1, 12, 1)


def _vertex_by_cuts(t: Permutree) -> Optional[list]:
    n = t.n
    rows = [[1] * n]
    rhs = [comb(n + 1, 2)]
    for cut in t.cuts:
        rows.append([1 if i in cut.source else 0 for i in range(1, n + 1)])
        rhs.append(facet_rhs(cut.source))
    if n == 1:
        return [1]
    return _exact.solve(rows, rhs)


def check_geometry(n: int = 5) -> Check:
    tally = _Tally()
    for m in range(1, n + 1):
        for w in words(m):
            poly = polytope(w)
            for t, point in poly.vertices.items():
                solved = _vertex_by_cuts(t)
                ok = solved is not None and all(x.denominator == 1 for x in solved) and tuple(int(x) for x in solved) == point
                tally("vertex solves the cut equations", ok, lambda: f"{w} {t}")
                tally("vertex satisfies every facet", poly.satisfies(point), lambda: f"{w} {t}")
                for e in t.increasing_edges():
                    step = edge_step(t, rotate(t, e))
                    expect = [0] * m
                    f = rotation_factor(t, e)
                    expect[e[0] - 1], expect[e[1] - 1] = f, -f
                    tally("rotation step = (l+1)(r+1)(e_i - e_j)", list(step) == expect, lambda: f"{w} {t} {e}")
            for w2 in coarsenings(w):
                if sum(a != b for a, b in zip(w, w2)) == 1:
                    tally("nested polytopes", matriochka_holds(w, w2), lambda: f"{w} {w2}")
            report = fan_check(w)
            tally("fan covers and is simplicial", report.ok, lambda: f"{w} {report.problems[:2]}")
            tally("parallel facet pairs = formula", len(parallel_facets(w)) == parallel_facet_formula(w), w)
            graph = rotation_graph(w)
            hasse = {(graph.nodes[a], graph.nodes[b]) for a, b, _ in graph.arcs}
            tally("oriented skeleton = rotation graph", set(skeleton(w)) == hasse, w)
    t = Permutree.from_json(REFERENCE_TREE)
    point = vertex(t)
    cut = t.edge_cut(3, 4)
    fixture_ok = point == REFERENCE_VERTEX and sorted(cut.source) == [1, 2, 3] and facet_rhs(cut.source) == 6
    tally("reference tree vertex and facet", fixture_ok, lambda: f"{point} {sorted(cut.source)} {facet_rhs(cut.source)}")
    check = _tally_check("5", f"vertices, edges, nested polytopes, fans, parallel facets, skeleta, n <= {n}", tally)
    check.notes.append(f"reference tree: vertex {point}, facet x1+x2+x3 >= {facet_rhs(cut.source)}")
    return check


# 6 -------------------------------------------------------------------------------------------

ORBITS_PRINTED = {2: 3, 3: 7}


def check_isometries(n: int = 5, orbit_n: int = 10, orbit_brute_n: int = 7) -> Check:
    tally = _Tally()
    for m in range(2, n + 1):
        for inner in words(m - 2):
            w = "o" + inner + "o"
            tally("isometry order = formula", isometry_group_order(w) == isometry_formula(w), w)
    closed = [Fraction(2) ** (m - 4) * (2**m + (-1) ** m + 7) for m in range(1, orbit_n + 1)]
    formula = [decoration_orbit_count(m) for m in range(1, orbit_n + 1)]
    for m in range(1, orbit_n + 1):
        tally("orbit count closed form", formula[m - 1] == closed[m - 1], str(m))
    for m in range(1, orbit_brute_n + 1):
        tally("orbit count brute force", decoration_orbit_count(m, "brute") == formula[m - 1], str(m))
    for m, value in ORBITS_PRINTED.items():
        tally("printed orbit counts", formula[m - 1] == value, str(m))
    check = _tally_check("6", f"isometry groups n <= {n}, decoration orbits n <= {orbit_n}", tally)
    check.notes.append(f"x(n) = {formula}")
    return check


# 7 -------------------------------------------------------------------------------------------


def _decperms(max_n: int, per_perm: int = 2) -> list[DecPerm]:
    """Permutations up to ``max_n`` with a few decorations each, chosen deterministically."""
    out = []
    for m in range(1, max_n + 1):
        all_words = words(m)
        for k, p in enumerate(all_permutations(m)):
            for j in range(per_perm):
                out.append(dec(p, all_words[(7 * k + 13 * j + m) % len(all_words)]))
    return out


def _split_twice(x: FormalSum, first: str) -> Counter:
    """Iterated coproduct as a counter of triples, splitting the left or the right factor again."""
    out: Counter = Counter()
    for (a, b), k in fq_coproduct(x).items():
        again = a if first == "left" else b
        for (c, e), k2 in fq_coproduct(FormalSum.single(again)).items():
            triple = (c, e, b) if first == "left" else (a, c, e)
            out[triple] += k * k2
    return out


def check_hopf(n: int = 5, tree_n: int = 4) -> Check:
    tally = _Tally()
    pool = _decperms(n - 2)
    one = lambda x: FormalSum.single(x)  # noqa: E731
    for x, y, z in itertools.product(pool, repeat=3):
        if x.n + y.n + z.n > n:
            continue
        X, Y, Z = one(x), one(y), one(z)
        tally("associativity", fq_product(fq_product(X, Y), Z) == fq_product(X, fq_product(Y, Z)))
        tally("dendriform (x<y)<z = x<(yz)", dendriform(dendriform(X, Y, "left"), Z, "left") == dendriform(X, fq_product(Y, Z), "left"))
        tally(
            "dendriform (x>y)<z = x>(y<z)",
            dendriform(dendriform(X, Y, "right"), Z, "left") == dendriform(X, dendriform(Y, Z, "left"), "right"),
        )
        tally("dendriform (xy)>z = x>(y>z)", dendriform(fq_product(X, Y), Z, "right") == dendriform(X, dendriform(Y, Z, "right"), "right"))
    for x in _decperms(n - 1):
        X = one(x)
        tally("coassociativity", _split_twice(X, first="left") == _split_twice(X, first="right"), str(x))
    for x, y in itertools.product(_decperms(n - 1, 1), repeat=2):
        if x.n + y.n > n:
            continue
        X, Y = one(x), one(y)
        tally("coproduct is multiplicative", fq_coproduct(fq_product(X, Y)) == tensor_product(fq_coproduct(X), fq_coproduct(Y)))

    trees = {m: [t for w in words(m) for t in enumerate_permutrees(w)] for m in range(1, tree_n + 1)}
    for m, mm in itertools.product(trees, repeat=2):
        if m + mm > tree_n:
            continue
        for a, b in itertools.product(trees[m], trees[mm]):
            interval = p_product(a, b)
            tally("P product = F expansion", fq_product(P_in_F(a), P_in_F(b)) == to_F(FormalSum(interval)), lambda: f"{a} {b}")
            tally("interval ends are over and under", over(a, b) in interval and under(a, b) in interval)
            if m + mm <= 3:
                tally("E multiplicative", p_multiply(E(a), E(b)) == E(over(a, b)))
                tally("H multiplicative", p_multiply(H(a), H(b)) == H(under(a, b)))
            for s in interval:
                tally("Q coproduct splits the product", (a, b) in q_coproduct(s))
    for N in range(1, tree_n + 1):
        for s in trees[N]:
            tally("P coproduct = F coproduct", fq_coproduct(P_in_F(s)) == to_F(p_coproduct_sum(s)), lambda: str(s))
            for (a, b), c in p_coproduct_sum(s).items():
                if a is None or b is None:
                    continue
                tally("duality: Q product multiplicity", q_product(a, b).count(s) == c, lambda: f"{s} {a} {b}")
    for m in range(1, n + 1):
        for w in words(m):
            for t in enumerate_permutrees(w):
                if not is_decomposable(t):
                    ok = all(not is_decomposable(rotate(t, e)) for e in t.increasing_edges())
                    tally("indecomposables form an upper set", ok, lambda: str(t))
    single = {m: [t for w in words(m, "od") for t in enumerate_permutrees(w)] for m in range(1, tree_n)}
    for m, mm in itertools.product(single, repeat=2):
        if m + mm > tree_n:
            continue
        for a, b in itertools.product(single[m], single[mm]):
            for side in ("left", "right"):
                tally("P dendriform on single-parent trees", to_F(p_dendriform(a, b, side)) == dendriform(P_in_F(a), P_in_F(b), side))
    a, b = p_symbol((2, 1, 3), "ouo"), p_symbol((1, 3, 2), "odo")
    half = dendriform(P_in_F(a), P_in_F(b), "left")
    kept, dropped = DecPerm((2, 3, 4, 6, 5, 1), "ouoodo"), DecPerm((2, 3, 4, 6, 1, 5), "ouoodo")
    witness = kept in half and dropped not in half and p_symbol(kept.perm, kept.word) == p_symbol(dropped.perm, dropped.word)
    try:
        from_F(half)
        broken = False
    except ValueError:
        broken = True
    tally("two-parent dendriform half is not a sum of fibers", witness and broken)
    return _tally_check("7", f"Hopf structure on decorated permutations and permutrees (F up to {n}, trees up to {tree_n})", tally)


# 8 -------------------------------------------------------------------------------------------


def check_point_transforms(n: int = 4, degree: int = 8, product_n: int = 5, product_degree: int = 6) -> Check:
    tally = _Tally()
    for m in range(1, n + 1):
        for p in all_permutations(m):
            tally("chain closed form = lattice points", chain_transform(p, degree) == ipt(p_symbol(p, "o" * m), degree), str(p))
        for w in words(m):
            for t in enumerate_permutrees(w):
                direct = ipt(t, degree)
                tally("tree transform = sum over linear extensions", direct == ipt_by_extensions(t, degree), lambda: str(t))
                if set(w) <= set("ou"):
                    tally("closed form on single-child trees", ipt_closed(t, degree) == direct, lambda: str(t))
    for m in range(1, product_n):
        for mm in range(1, product_n - m + 1):
            for p, q in itertools.product(all_permutations(m), all_permutations(mm)):
                total = m + mm
                lhs = chain_transform(p, product_degree).extend(total) * chain_transform(q, product_degree).extend(total, m)
                rhs = TruncatedSeries(total, product_degree)
                for s in shifted_shuffle(p, q):
                    rhs = rhs + chain_transform(s.perm, product_degree)
                tally("product of transforms = sum over shuffle", lhs == rhs, lambda: f"{p} {q}")
    printed_lhs = rational_term(4, [[1], [3], [1, 2, 3], [4]], [[1]], degree)
    printed = [
        rational_term(4, [[1], [3, 4], [4], [1, 2, 3, 4]], [[1]], degree),
        rational_term(4, [[1], [3, 4], [3], [1, 2, 3, 4]], [[1], [3]], degree),
        rational_term(4, [[1, 2, 3], [1], [3], [1, 2, 3, 4]], [[1, 2, 3], [1]], degree),
    ]
    for x, y, z in itertools.product("ou", repeat=3):
        t, t2 = p_symbol((2, 1, 3), x + "u" + y), p_symbol((1,), z)
        interval = p_product(t, t2)
        lhs = ipt(t, degree).extend(4) * ipt(t2, degree).extend(4, 3)
        terms = [ipt_closed(s, degree) for s in interval]
        total = TruncatedSeries(4, degree)
        for term in terms:
            total = total + term
        tally("three-term identity", len(interval) == 3 and lhs == total == printed[0] + printed[1] + printed[2])
        tally("printed left side", lhs == printed_lhs)
        tally("printed terms are the tree transforms", Counter(map(hash, terms)) == Counter(map(hash, printed)))
    return _tally_check("8", f"integer point transforms to degree {degree}, n <= {n}", tally)


# 9 -------------------------------------------------------------------------------------------


def check_schroder(n: int = 4) -> Check:
    from . import schroder as sc

    tally = _Tally()
    totals = {w: len(sc.schroder_permutrees(w)) for w in ("ooo", "ddd", "bbb")}
    tally("totals 13/11/9", [totals["ooo"], totals["ddd"], totals["bbb"]] == [13, 11, 9], str(totals))
    for m in range(1, n + 1):
        for w in words(m):
            tally("fiber count = recurrence", len(sc.schroder_permutrees(w)) == schroder_count(w), w)
    printed_f = {"oooo": (24, 36, 14), "dddd": (14, 21, 9), "bbbb": (8, 12, 6)}
    for w, f in printed_f.items():
        tally("f-vector by recurrence", f_vector(w) == f, lambda: f"{w} {f_vector(w)}")
        tally("f-vector by face lattice", face_counts(w)[:-1] == f, lambda: f"{w} {face_counts(w)}")
    printed_h = {"oooo": (1, 11, 11, 1), "dddd": (1, 6, 6, 1), "bbbb": (1, 3, 3, 1)}
    for w, h in printed_h.items():
        tally("h-vector", h_vector(w) == h, lambda: f"{w} {h_vector(w)}")
    for m in range(1, n + 1):
        tally("facial weak order is a lattice", sc.facial_weak_order(m).is_lattice(), str(m))
        tally("coinversion order = cover closure", sc.facial_weak_order(m).leq == sc.facial_weak_order_by_covers(m).leq, str(m))
        for w in words(m):
            groups = sc.fibers(w)
            extremes = sc.class_extremes(w)
            low = {x: extremes[s][0] for s, members in groups.items() for x in members}
            high = {x: extremes[s][1] for s, members in groups.items() for x in members}
            for s, members in groups.items():
                tally("rewriting closure = fiber", sc.rewriting_class(members[0], w) == set(members), lambda: f"{w} {s}")
                tally("fiber is an interval", sc.is_interval(members, m), lambda: f"{w} {s}")
                d = as_decoration(w)
                for x in members:
                    is_min, is_max = x == extremes[s][0], x == extremes[s][1]
                    tally("minima avoid c|a-b, ac-b, b-c|a, b-ac", is_min != sc.has_schroder_pattern(x, d, "min"), lambda: f"{w} {x}")
                    tally("maxima avoid a|c-b, ac-b, b-a|c, b-ac", is_max != sc.has_schroder_pattern(x, d, "max"), lambda: f"{w} {x}")
            for x in low:
                for y in sc.facial_covers(x):
                    ok = sc.facial_weak_leq(low[x], low[y]) and sc.facial_weak_leq(high[x], high[y])
                    tally("projections preserve order", ok, lambda: f"{w} {x} {y}")
            if m <= 3:
                lat = sc.schroder_lattice(w)
                tally("contraction order = quotient order", lat.leq == sc.schroder_quotient(w).leq, w)
    graph = lambda poset: poset.to_networkx()  # noqa: E731
    chain = nx.DiGraph([(0, 1), (1, 2)])
    tally("ooo lattice = facial weak order", nx.is_isomorphic(graph(sc.schroder_lattice("ooo")), graph(sc.facial_weak_order(3))))
    tally("ddd lattice has 11 elements and is a lattice", len(sc.schroder_lattice("ddd")) == 11 and sc.schroder_lattice("ddd").is_lattice())
    tally("bbb lattice = product of two 3-chains", nx.is_isomorphic(graph(sc.schroder_lattice("bbb")), nx.cartesian_product(chain, chain)))
    shuffle = {str(x) for x in sc.op_shuffle("1|2", "2|13")}
    printed_shuffle = set(SHUFFLE_PRINTED.split(", "))
    convolution = {str(x) for x in sc.op_convolution("1|2", "2|13")}
    printed_convolution = set(CONVOLUTION_PRINTED.split(", "))
    tally("shuffle example", shuffle == printed_shuffle, lambda: str(sorted(shuffle ^ printed_shuffle)))
    tally("convolution example", convolution == printed_convolution, lambda: str(sorted(convolution ^ printed_convolution)))
    return _tally_check("9", f"Schröder permutrees, n <= {n}", tally)


SHUFFLE_PRINTED = (
    "1|2|4|35, 1|24|35, 1|4|2|35, 1|4|235, 1|4|35|2, 14|2|35, 14|235, 14|35|2, "
    "4|1|2|35, 4|1|235, 4|1|35|2, 4|135|2, 4|35|1|2"
)
CONVOLUTION_PRINTED = "1|2|4|35, 1|3|4|25, 1|4|3|25, 1|5|3|24, 2|3|4|15, 2|4|3|15, 2|5|3|14, 3|4|2|15, 3|5|2|14, 4|5|2|13"


# 10 ------------------------------------------------------------------------------------------

LARGE_F_VECTOR = (1, 324, 972, 1125, 630, 175, 22, 1)
# The printed glyph string has one glyph at positions 3 and 5 and another everywhere else.
GLYPH_CLASSES = "AABABAA"


def glyph_readings() -> list[str]:
    out = []
    for a, b in itertools.product(LETTERS, repeat=2):
        if a != b:
            out.append("".join(a if c == "A" else b for c in GLYPH_CLASSES))
    return out


def scan_large_f_vector(normalized_only: bool = True) -> list[str]:
    """Every size-7 decoration whose full f-vector is the printed one."""
    hits = []
    for inner in words(5):
        for ends in (("o", "o"),) if normalized_only else itertools.product(LETTERS, repeat=2):
            w = ends[0] + inner + ends[1]
            if f_vector(w, full=True) == LARGE_F_VECTOR:
                hits.append(w)
    return hits


def check_large_f_vector() -> Check:
    readings = glyph_readings()
    matching = [w for w in readings if f_vector(w, full=True) == LARGE_F_VECTOR]
    hits = scan_large_f_vector()
    notes = [
        f"glyph-class readings tried: {len(readings)}; matches: {matching or 'none'}",
        f"all boundary-normalized size-7 decorations with this f-vector ({len(hits)}): {', '.join(hits)}",
    ]
    normal = {boundary_normalize(as_decoration(w)).word for w in readings}
    notes.append(f"normalized glyph readings: {len(normal)}; none shares the NONE/BOTH positions of the matches")
    return Check(
        "10",
        "large f-vector for a decoration read from the printed glyph classes",
        bool(matching),
        f"{list(LARGE_F_VECTOR)} for some reading of {GLYPH_CLASSES}",
        f"{len(matching)} glyph-class matches; {len(hits)} matches in the widened scan",
        notes,
    )


# runner --------------------------------------------------------------------------------------

SUITES: dict[str, Callable[..., Check]] = {
    "alphabets": check_alphabet_counts,
    "recurrence": check_recurrences,
    "congruence": check_congruences,
    "lattice": check_rotation_lattice,
    "geometry": check_geometry,
    "isometry": check_isometries,
    "hopf": check_hopf,
    "ipt": check_point_transforms,
    "schroder": check_schroder,
    "fvector": check_large_f_vector,
}
SUITE_IDS = {str(k + 1): name for k, name in enumerate(SUITES)}


def run_suite(name: str, n: Optional[int] = None) -> Check:
    name = SUITE_IDS.get(name, name)
    fn = SUITES[name]
    start = time.perf_counter()
    result = fn() if n is None or name == "fvector" else fn(n)
    result.seconds = time.perf_counter() - start
    return result


def run_all(n: Optional[int] = None) -> list[Check]:
    return [run_suite(name, n) for name in SUITES]
