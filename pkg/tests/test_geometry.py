import itertools
from math import comb

import pytest
from hypothesis import given

from permutrees.core import Decoration, Permutree
from permutrees.correspond import is_singleton, p_symbol
from permutrees.enumeration import enumerate_permutrees, f_vector
from permutrees.errors import NotARefinement
from permutrees.geometry import (
    braid_cone,
    building_blocks,
    common_vertex_witnesses,
    common_vertices,
    edge_step,
    face_counts,
    facet_rhs,
    fan_check,
    incidence_cone,
    is_blockwise_product,
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
from permutrees.lattice import refine_project, rotate, rotation_graph
from permutrees.words import all_permutations, reverse

from conftest import all_words, decorated_permutations
from test_core import REFERENCE_JSON


def test_reference_tree_vertex_and_facet():
    t = Permutree.from_json(REFERENCE_JSON)
    assert vertex(t) == (7, -4, 3, 8, 1, 12, 1)
    cut = t.edge_cut(3, 4)
    assert sorted(cut.source) == [1, 2, 3] and facet_rhs(cut.source) == 6


def test_permutahedron_and_associahedron_vertices():
    assert set(polytope("ooo").vertices.values()) == set(itertools.permutations((1, 2, 3)))
    assert len(polytope("dddd").vertices) == 14
    cube = set(polytope("bbb").vertices.values())
    assert len(cube) == 4


@given(decorated_permutations(max_n=7))
def test_vertex_is_tight_exactly_on_its_cuts(pw):
    t = p_symbol(*pw)
    point = vertex(t)
    n = t.n
    assert sum(point) == comb(n + 1, 2)
    poly = polytope(t.decoration)
    assert poly.satisfies(point)
    assert poly.tight(point) == frozenset(c.source for c in t.cuts)


@given(decorated_permutations(min_n=2, max_n=7))
def test_rotation_step_is_an_exact_multiple(pw):
    t = p_symbol(*pw)
    for i, j in t.increasing_edges():
        step = edge_step(t, rotate(t, (i, j)))
        factor = rotation_factor(t, (i, j))
        expected = [0] * t.n
        expected[i - 1], expected[j - 1] = factor, -factor
        assert list(step) == expected and factor > 0


def test_cones_are_polar_generators():
    for word in all_words(4)[::7]:
        for t in enumerate_permutrees(word):
            braid, inc = braid_cone(t), incidence_cone(t)
            assert braid.kind == "braid" and inc.kind == "incidence"
            # every braid ray pairs nonpositively with every incidence ray except its own edge
            for (child, parent), cut in zip(t.edges, t.cuts):
                ray = [len(cut.source) if k not in cut.source else -len(cut.sink) for k in range(1, t.n + 1)]
                assert tuple(ray) in braid.rays


def test_fans_are_complete_simplicial_and_nested():
    for word in all_words(4):
        assert fan_check(word).ok
    assert fan_check("oddo", "obbo").ok
    assert fan_check("oooo", "odbu").ok
    with pytest.raises(NotARefinement):
        fan_check("dd", "oo")


def test_nested_polytopes():
    assert matriochka_holds("oooo", "dddd")
    assert matriochka_holds("odoo", "obbo")
    with pytest.raises(NotARefinement):
        matriochka_holds("bbbb", "oooo")


def test_common_vertices_conditions_agree():
    for coarse in ("oddo", "obuo", "dubd", "bbbb"):
        for t in enumerate_permutrees("oooo"):
            witnesses = common_vertex_witnesses(t, refine_project(t, coarse))
            assert len(set(witnesses.values())) == 1
        shared = common_vertices("oooo", coarse)
        assert {t for t, _ in shared} == {p_symbol(p, "oooo") for p in all_permutations(4) if is_singleton(p, coarse)}


def test_face_counts_equal_f_vector():
    for word in all_words(4):
        assert face_counts(word)[:-1] == f_vector(word)
    assert face_counts("odubo")[:-1] == f_vector("odubo")


def test_skeleton_is_the_rotation_graph():
    for word in all_words(4):
        graph = rotation_graph(word)
        arcs = {(graph.nodes[a], graph.nodes[b]) for a, b, _ in graph.arcs}
        assert set(skeleton(word)) == arcs


def test_building_blocks_index_facets():
    assert len(building_blocks("oooo")) == 14
    assert len(building_blocks("dddd")) == 9
    assert len(building_blocks("bbbb")) == 6


def test_parallel_facets_and_isometries():
    for word in all_words(4):
        assert len(parallel_facets(word)) == parallel_facet_formula(word)
        normalized = "o" + word[1:-1] + "o"
        assert isometry_group_order(normalized) == isometry_formula(normalized)
    assert isometry_formula("oooo") == 48
    assert isometry_formula("oddo") == isometry_group_order("oddo") == 2


def test_opposite_singletons_are_blockwise_products():
    for n in range(2, 6):
        for inner in all_words(n - 2) if n > 2 else [""]:
            d = Decoration("o" + inner + "o")
            for p in all_permutations(n):
                both = is_singleton(p, d) and is_singleton(reverse(p), d)
                assert both == (is_blockwise_product(p, d) or is_blockwise_product(reverse(p), d))
