import itertools

import pytest
from hypothesis import given

from permutrees.core import Decoration
from permutrees.correspond import (
    DecoratedPermutation,
    arc_avoids_walls,
    arc_diagram,
    congruent,
    insert,
    is_class_extreme,
    is_singleton,
    is_singleton_structural,
    linear_extensions,
    p_symbol,
    parse_decorated,
    read_leveled,
    rewriting_class,
    tree_arcs,
)
from permutrees.errors import DecorationMismatch, InvalidInput
from permutrees.words import all_permutations, inversions

from conftest import all_words, decorated_permutations


def weak_leq(s, t):
    return inversions(s) <= inversions(t)


def fibers(word):
    out = {}
    for p in all_permutations(len(word)):
        out.setdefault(p_symbol(p, word), []).append(p)
    return out


def test_two_both_letters_record_the_recoil():
    t = p_symbol((2, 1), "bb")
    assert t.edges == ((2, 1),)


def test_none_decoration_gives_the_chain():
    t = p_symbol((2, 3, 1), "ooo")
    assert t.edges == ((2, 3), (3, 1))


def test_down_decoration_is_a_search_tree_read_right_to_left():
    # inserting 2 then 3 then 1 from the right: 2 is the root, 1 and 3 its children
    t = p_symbol((1, 3, 2), "ddd")
    assert set(t.edges) == {(1, 2), (3, 2)}


def test_both_decoration_classes_are_descent_classes():
    for n in range(1, 6):
        word = "b" * n
        for fiber in fibers(word).values():
            assert len({frozenset(i for i in range(1, n) if p.index(i + 1) < p.index(i)) for p in fiber}) == 1


def test_trivial_congruence():
    for p in all_permutations(4):
        assert rewriting_class(p, "oooo") == {p}


def test_class_counts_for_small_words():
    assert len(fibers("ddd")) == 5
    assert len(fibers("ooo")) == 6
    assert len(fibers("bbb")) == 4
    assert sum(len(fibers(w)) for w in all_words(3)) == 320


@given(decorated_permutations(max_n=7))
def test_insertion_is_a_bijection(pw):
    perm, word = pw
    leveled = insert(perm, word)
    assert leveled.is_consistent()
    back = read_leveled(leveled)
    assert back.perm == perm and back.decoration.word == word


@given(decorated_permutations(max_n=6))
def test_p_symbol_fiber_is_its_extension_set(pw):
    perm, word = pw
    t = p_symbol(perm, word)
    exts = linear_extensions(t)
    assert perm in exts
    assert all(p_symbol(q, word) == t for q in exts)
    assert set(exts) == rewriting_class(perm, word)


def test_fibers_are_weak_intervals_with_pattern_extremes():
    perms = {n: list(all_permutations(n)) for n in range(1, 5)}
    for n in range(1, 5):
        for word in all_words(n):
            for fiber in fibers(word).values():
                low = [p for p in fiber if all(weak_leq(p, q) for q in fiber)]
                high = [p for p in fiber if all(weak_leq(q, p) for q in fiber)]
                assert len(low) == len(high) == 1
                assert set(fiber) == {p for p in perms[n] if weak_leq(low[0], p) and weak_leq(p, high[0])}
                assert [p for p in fiber if is_class_extreme(p, "min", word)] == low
                assert [p for p in fiber if is_class_extreme(p, "max", word)] == high


def test_class_minimum_of_132_class():
    # {132, 312} for ddd: the minimum 132 still carries the ascent 13 with 2 to its right
    assert rewriting_class((1, 3, 2), "ddd") == {(1, 3, 2), (3, 1, 2)}
    assert is_class_extreme((1, 3, 2), "min", "ddd")
    assert is_class_extreme((3, 1, 2), "max", "ddd")


def test_congruent_both_methods_agree():
    for word in all_words(4):
        d = Decoration(word)
        for p, q in itertools.combinations(list(all_permutations(4))[::3], 2):
            assert congruent(p, q, d) == congruent(p, q, d, method="rewriting")


def test_congruent_rejects_mixed_decorations():
    with pytest.raises(DecorationMismatch):
        congruent(DecoratedPermutation((1, 2), Decoration("oo")), DecoratedPermutation((1, 2), Decoration("od")))


def test_positions_and_values_interconvert():
    p = DecoratedPermutation((2, 3, 1), Decoration("odu"), "positions")
    assert p.value_decoration.word == "uod"
    assert p.normalized().position_decoration.word == "odu"
    assert str(parse_decorated("231@positions:odu")) == "231@positions:odu"
    with pytest.raises(InvalidInput):
        DecoratedPermutation((1, 2), Decoration("o"))


def test_identity_arcs():
    diagram = arc_diagram((1, 2, 3, 4), "asc")
    assert sorted((a.left, a.right, a.above) for a in diagram.arcs) == [
        (1, 2, frozenset()),
        (2, 3, frozenset()),
        (3, 4, frozenset()),
    ]


def test_arc_diagrams_are_noncrossing_bijections():
    for n in range(1, 6):
        for kind in ("asc", "desc"):
            seen = set()
            for p in all_permutations(n):
                diagram = arc_diagram(p, kind)
                assert diagram.is_noncrossing()
                seen.add(diagram)
            assert len(seen) == len(list(all_permutations(n)))


def test_wall_avoiding_arcs_mark_the_class_extremes():
    for n in range(1, 5):
        for word in all_words(n):
            d = Decoration(word)
            for p in all_permutations(n):
                asc_ok = all(arc_avoids_walls(a, d) for a in arc_diagram(p, "asc").arcs)
                desc_ok = all(arc_avoids_walls(a, d) for a in arc_diagram(p, "desc").arcs)
                assert asc_ok == is_class_extreme(p, "max", d)
                assert desc_ok == is_class_extreme(p, "min", d)


def test_tree_arcs_come_from_the_extreme_extensions():
    for n in range(1, 5):
        for word in all_words(n):
            for t, fiber in fibers(word).items():
                low = min(fiber, key=lambda p: len(inversions(p)))
                high = max(fiber, key=lambda p: len(inversions(p)))
                up, down = tree_arcs(t)
                assert up == arc_diagram(high, "asc")
                assert down == arc_diagram(low, "desc")


def test_singletons():
    for n in range(1, 6):
        for word in all_words(n)[:: max(1, 4 ** n // 64)]:
            d = Decoration(word)
            identity = tuple(range(1, n + 1))
            assert is_singleton(identity, d) and is_singleton(identity[::-1], d)
            for p in all_permutations(n):
                assert is_singleton(p, d) == is_singleton_structural(p, d)
    assert all(is_singleton(p, "oooo") for p in all_permutations(4))
    ddd_singletons = sum(len(f) == 1 for f in fibers("ddddd").values())
    assert ddd_singletons == sum(is_singleton(p, "ddddd") for p in all_permutations(5))
