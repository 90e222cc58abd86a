"""Schröder permutrees: validation, insertion, congruence, lattices, faces, operations."""

import itertools

import networkx as nx
import numpy as np
import pytest

from permutrees.core import as_decoration
from permutrees.correspond import p_symbol
from permutrees.enumeration import schroder_count
from permutrees.errors import InvalidTree, NotAnEdge
from permutrees.schroder import (
    SchroderPermutree,
    by_definition,
    class_extremes,
    contract,
    face_lattice_report,
    facial_covers,
    facial_weak_leq,
    facial_weak_order,
    facial_weak_order_by_covers,
    fibers,
    from_edges,
    from_permutree,
    has_schroder_pattern,
    is_increasing_contraction,
    is_interval,
    op_convolution,
    op_shuffle,
    p_star,
    restrict_parts,
    restrict_values,
    rewriting_class,
    schr_closure_check,
    schr_refine,
    schroder_congruent,
    schroder_lattice,
    schroder_permutrees,
    schroder_quotient,
    single_block,
    to_permutree,
    validate_schroder,
)
from permutrees.schroder.insertion import _all_parts, _insert
from permutrees.words import all_permutations


def words(n):
    return ["".join(w) for w in itertools.product("odub", repeat=n)]


def test_all_trees_validate_and_match_counts():
    for n in range(1, 5):
        for w in words(n):
            found = schroder_permutrees(w)
            assert len(found) == schroder_count(w)
            assert all(validate_schroder(s) == [] for s in found)


def test_small_counts():
    assert len(schroder_permutrees("ooo")) == 13
    assert len(schroder_permutrees("ddd")) == 11
    assert len(schroder_permutrees("bbb")) == 9


def test_congruence_example():
    d = "doodoou"
    for a, b, same in [
        ("12|5|37|46", "125|37|46", True),
        ("125|37|46", "125|7|3|46", True),
        ("125|7|3|46", "125|7|46|3", False),
    ]:
        assert schroder_congruent(a, b, d) is same
        assert schroder_congruent(a, b, d, "rewriting") is same
    assert str(p_star("125|37|46", d)) == "doodoou:12[.,.>3] 3[12>46] 46[3,7>.] 5[.>7] 7[5>46,.]"


@pytest.mark.parametrize("word", ["odub", "bbdu", "oooo"])
def test_singleton_parts_embed_permutrees(word):
    for p in all_permutations(4):
        s = p_star([[x] for x in p], word)
        assert s == from_permutree(p_symbol(p, word))
        assert to_permutree(s) == p_symbol(p, word)


def test_to_permutree_rejects_big_blocks():
    with pytest.raises(InvalidTree):
        to_permutree(single_block("ooo"))


def test_slots_of_a_mixed_block():
    d = "ooobodo"
    s = p_star("5|46|1|3|27", d)
    assert validate_schroder(s) == []
    k = s.blocks.index((4, 6))
    # two down labels give three child slots, one up label gives two parent slots
    assert len(s.children[k]) == 3
    assert len(s.parents[k]) == 2
    rebuilt = from_edges(d, s.blocks, [(s.blocks[c], s.blocks[p]) for c, p in s.edges])
    assert rebuilt == s


def test_contraction():
    s = p_star("5|46|1|3|27", "ooobodo")
    kinds = {}
    for e in s.edges:
        merged = contract(s, e)
        assert validate_schroder(merged) == []
        assert len(merged.blocks) == len(s.blocks) - 1
        kinds[e] = is_increasing_contraction(s, e)
    assert set(kinds.values()) == {True, False, None}
    with pytest.raises(NotAnEdge):
        contract(s, (0, 4))
    assert p_star("1234567", "ooobodo") == single_block("ooobodo")


def test_json_round_trip():
    for s in schroder_permutrees("obdu"):
        assert SchroderPermutree.from_json(s.to_json()) == s


def test_facial_weak_order():
    sizes = []
    for n in (1, 2, 3):
        order = facial_weak_order(n)
        assert order.leq == facial_weak_order_by_covers(n).leq
        assert order.is_lattice()
        sizes.append(len(order))
    assert sizes == [1, 3, 13]


@pytest.mark.parametrize("word", ["ooo", "ddd", "bbb", "odu", "dub"])
def test_schroder_lattice_is_the_quotient(word):
    lat = schroder_lattice(word)
    assert lat.leq == schroder_quotient(word).leq
    assert lat.is_lattice()


def test_lattice_shapes():
    assert nx.is_isomorphic(schroder_lattice("ooo").to_networkx(), facial_weak_order(3).to_networkx())
    chain = nx.DiGraph([(0, 1), (1, 2)])
    assert nx.is_isomorphic(schroder_lattice("bbb").to_networkx(), nx.cartesian_product(chain, chain))


def test_fibers_rewriting_and_patterns():
    for n in (1, 2, 3):
        parts = list(_all_parts(n))
        for w in words(n):
            d = as_decoration(w)
            fb = fibers(w)
            ext = class_extremes(w)
            for s, members in fb.items():
                assert rewriting_class(members[0], w) == set(members)
                assert is_interval(members, n)
            lo = {x: ext[s][0] for s, m in fb.items() for x in m}
            hi = {x: ext[s][1] for s, m in fb.items() for x in m}
            for x in parts:
                for y in facial_covers(x):
                    assert facial_weak_leq(lo[x], lo[y]) and facial_weak_leq(hi[x], hi[y])
            mins = {e[0] for e in ext.values()}
            maxs = {e[1] for e in ext.values()}
            for x in parts:
                assert (x in mins) == (not has_schroder_pattern(x, d, "min"))
                assert (x in maxs) == (not has_schroder_pattern(x, d, "max"))


def test_face_lattices():
    for n in (1, 2, 3):
        for w in words(n):
            report = face_lattice_report(w)
            assert all(report.values()), (w, report)


def test_restrictions():
    assert str(restrict_parts("16|27|4|35", [2, 3])) == "13|2"
    assert str(restrict_values("16|27|4|35", [1, 3, 5])) == "1|23"


def test_shuffle_and_convolution_of_partitions():
    sh = {str(x) for x in op_shuffle("1|2", "2|13")}
    assert sh == set(
        "1|2|4|35 1|24|35 1|4|2|35 1|4|235 1|4|35|2 14|2|35 14|235 14|35|2 "
        "4|1|2|35 4|1|235 4|1|35|2 4|135|2 4|35|1|2".split()
    )
    cv = {str(x) for x in op_convolution("1|2", "2|13")}
    assert cv == set(
        "1|2|4|35 1|3|4|25 1|4|3|25 1|5|3|24 2|3|4|15 2|4|3|15 2|5|3|14 3|4|2|15 3|5|2|14 4|5|2|13".split()
    )
    assert op_shuffle("1|2", "2|13") == by_definition("shuffle", "1|2", "2|13")
    assert op_convolution("1|2", "2|13") == by_definition("convolution", "1|2", "2|13")


def test_operations_close_on_fibers():
    assert schr_closure_check(3)


def test_refinement_is_a_lattice_map():
    coarser = {"o": "dub", "d": "b", "u": "b", "b": ""}
    for w in words(3):
        low = schroder_lattice(w)
        for i in range(3):
            for c in coarser[w[i]]:
                w2 = w[:i] + c + w[i + 1 :]
                high = schroder_lattice(w2)
                index = {s: k for k, s in enumerate(high.elements)}
                img = np.array([index[schr_refine(s, w2)] for s in low.elements])
                assert (img[low.meet_table] == high.meet_table[np.ix_(img, img)]).all()
                assert (img[low.join_table] == high.join_table[np.ix_(img, img)]).all()
                for members in fibers(w).values():
                    assert len({_insert(m, w2)[0] for m in members}) == 1
