import itertools

import networkx as nx
import pytest
from hypothesis import given

from permutrees.correspond import linear_extensions, p_symbol
from permutrees.enumeration import enumerate_permutrees
from permutrees.errors import DecorationMismatch, NotAnEdge, NotARefinement
from permutrees.lattice import (
    class_max,
    class_min,
    extremes,
    fiber_interval,
    lattice_join,
    lattice_meet,
    refine_project,
    rotate,
    rotation_graph,
    tree_leq,
    weak_join,
    weak_leq,
    weak_meet,
    weak_up_covers,
)
from permutrees.words import all_permutations, inversions

from conftest import all_words, decorated_permutations


def test_weak_order_meet_and_join_by_brute_force():
    perms = list(all_permutations(4))
    for s, t in itertools.combinations(perms, 2):
        below = [p for p in perms if weak_leq(p, s) and weak_leq(p, t)]
        above = [p for p in perms if weak_leq(s, p) and weak_leq(t, p)]
        meet, join = weak_meet(s, t), weak_join(s, t)
        assert meet in below and all(weak_leq(p, meet) for p in below)
        assert join in above and all(weak_leq(join, p) for p in above)


def test_weak_covers_add_one_inversion():
    for p in all_permutations(4):
        for q, _ in weak_up_covers(p):
            assert inversions(p) < inversions(q) and len(inversions(q)) == len(inversions(p)) + 1


@given(decorated_permutations(min_n=2, max_n=7))
def test_rotation_changes_exactly_one_cut(pw):
    t = p_symbol(*pw)
    for i, j in t.edges:
        s = rotate(t, (i, j))
        assert (j, i) in s.edges
        assert len(set(t.cuts) - set(s.cuts)) == 1
        assert rotate(s, (j, i)) == t


def test_rotating_a_non_edge_fails():
    t = p_symbol((1, 2, 3), "ooo")
    with pytest.raises(NotAnEdge):
        rotate(t, (1, 3))


def test_small_lattices_have_the_classical_shapes():
    # weak order hexagon, Tamari pentagon, boolean square
    assert [(len(rotation_graph(w).nodes), len(rotation_graph(w).arcs)) for w in ("ooo", "ddd", "bbb")] == [
        (6, 6),
        (5, 5),
        (4, 4),
    ]
    pentagon = rotation_graph("ddd").to_networkx().to_undirected()
    assert nx.is_isomorphic(pentagon, nx.cycle_graph(5))


def test_every_tree_has_one_arc_per_edge():
    for word in all_words(4):
        graph = rotation_graph(word)
        degree = {k: 0 for k in range(len(graph.nodes))}
        for a, b, _ in graph.arcs:
            degree[a] += 1
            degree[b] += 1
        assert set(degree.values()) == {3}
        assert nx.is_directed_acyclic_graph(graph.to_networkx())


def test_extreme_trees_are_paths():
    for word in all_words(4):
        low, high = extremes(word)
        graph = rotation_graph(word)
        assert graph.nodes[graph.sources()[0]] == low
        assert graph.nodes[graph.sinks()[0]] == high
        for t in (low, high):
            assert len(linear_extensions(t)) == 1


def test_meet_and_join_by_brute_force():
    for word in ("odu", "bdo", "oudb", "dudu"):
        trees = enumerate_permutrees(word)
        for s, t in itertools.product(trees, repeat=2):
            below = [x for x in trees if tree_leq(x, s) and tree_leq(x, t)]
            above = [x for x in trees if tree_leq(s, x) and tree_leq(t, x)]
            meet, join = lattice_meet(s, t), lattice_join(s, t)
            assert meet in below and all(tree_leq(x, meet) for x in below)
            assert join in above and all(tree_leq(join, x) for x in above)


def test_fiber_interval_ends():
    for word in all_words(3):
        for t in enumerate_permutrees(word):
            exts = linear_extensions(t)
            low, high = fiber_interval(t)
            assert low == min(exts, key=lambda p: len(inversions(p)))
            assert high == max(exts, key=lambda p: len(inversions(p)))
            assert class_max(t) == high and class_min(t) == low


def test_projection_to_coarser_decorations():
    t = p_symbol((2, 4, 1, 3), "oooo")
    assert refine_project(t, "dddd") == p_symbol((2, 4, 1, 3), "dddd")
    with pytest.raises(NotARefinement):
        refine_project(p_symbol((1, 2), "dd"), "oo")
    with pytest.raises(DecorationMismatch):
        tree_leq(p_symbol((1, 2), "dd"), p_symbol((1, 2), "oo"))


def test_one_letter_swap_changes_the_rotation_graph():
    # both decorations have 248 trees; eccentricity profiles of the undirected graphs differ
    first, second = rotation_graph("ooddoo"), rotation_graph("ooduoo")
    assert len(first.nodes) == len(second.nodes) == 248

    def profile(graph):
        return sorted(nx.eccentricity(graph.to_networkx().to_undirected()).values())

    assert profile(first) != profile(second)
    # mirror images stay isomorphic
    assert nx.is_isomorphic(rotation_graph("oouuoo").to_networkx(), first.to_networkx())
