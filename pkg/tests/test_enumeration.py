from itertools import product
from math import factorial

import pytest
from hypothesis import given

from permutrees.core import Decoration
from permutrees.correspond import p_symbol
from permutrees.enumeration import (
    ALPHABET_COUNTS,
    avoiders,
    brute_counts_all,
    count,
    decoration_orbit_count,
    enumerate_permutrees,
    f_vector,
    gap_profile,
    gap_recurrence_profile,
    h_vector,
    schroder_avoiders,
    schroder_count,
    schroder_table,
    normalized_counts,
    alphabet_count,
)
from permutrees.enumeration import h_from_f
from permutrees.lattice import class_max, class_min
from permutrees.errors import MethodInapplicable, SizeBound
from permutrees.words import all_permutations

from conftest import all_words, decorations


def test_small_counts():
    assert [count(w) for w in ("ooo", "ddd", "bbb")] == [6, 5, 4]
    assert count("dddddd") == 132


def test_enumeration_matches_p_symbol_images():
    for word in all_words(4):
        images = {p_symbol(p, word) for p in all_permutations(4)}
        trees = enumerate_permutrees(word)
        assert set(trees) == images and len(trees) == len(images)
        assert trees == sorted(trees)


def test_avoiders_are_the_class_extremes():
    for word in all_words(4):
        trees = enumerate_permutrees(word)
        assert set(avoiders(word, "min")) == {class_min(t) for t in trees}
        assert set(avoiders(word, "max")) == {class_max(t) for t in trees}


def test_size_bound_refuses_large_brute_force():
    with pytest.raises(SizeBound):
        enumerate_permutrees("o" * 9)
    with pytest.raises(SizeBound):
        count("o" * 5, "brute", max_n=4)


def test_rooted_methods_refuse_two_parent_letters():
    with pytest.raises(MethodInapplicable):
        count("odu", "root_sum")


@given(decorations(max_n=6))
def test_gap_profile_matches_operational_free_gaps(word):
    assert gap_profile(word) == gap_recurrence_profile(word)


@given(decorations(max_n=6))
def test_swapping_down_and_up_keeps_the_count(word):
    swapped = Decoration(word).flipped().word
    mixed = word.replace("d", "u", 1)
    assert count(word) == count(swapped) == count(mixed)
    assert sum(gap_profile(word).values()) == sum(gap_profile(mixed).values())


def test_counts_lie_between_powers_of_two_and_factorials():
    for word in all_words(5):
        assert 2**4 <= count(word) <= factorial(5)


def test_cut_at_both_letter():
    # splitting at a BOTH letter keeps it as a NONE letter on each side
    assert count("dbd", "block_product") == count("dbd", "brute") == 4


def test_all_methods_agree_up_to_five():
    for n in range(1, 6):
        brute = brute_counts_all(n)
        for word, value in brute.items():
            assert count(word, "gap_recurrence") == value
            assert count(word, "block_product") == value
            if set(word) <= set("od"):
                assert count(word, "root_sum") == count(word, "topmost_sum") == value


def test_alphabet_rows_to_eight_by_recurrence():
    for alphabet, row in ALPHABET_COUNTS.items():
        assert tuple(alphabet_count(alphabet, n) for n in range(1, 9)) == row, alphabet


def test_alphabet_rows_brute_force_at_six():
    counts = brute_counts_all(6)
    for alphabet, row in ALPHABET_COUNTS.items():
        assert sum(counts["".join(w)] for w in product(alphabet, repeat=6)) == row[5]


def test_normalized_counts_cover_every_normalized_word():
    rows = normalized_counts((3, 4))
    assert len(rows) == 4 + 16
    assert all(w[0] == w[-1] == "o" for w, _ in rows)


def test_schroder_counts_and_face_vectors():
    assert [schroder_count(w) for w in ("ooo", "ddd", "bbb")] == [13, 11, 9]
    assert f_vector("oooo") == (24, 36, 14)
    assert f_vector("dddd") == (14, 21, 9)
    assert f_vector("bbbb") == (8, 12, 6)
    assert f_vector("oooo", full=True) == (1, 24, 36, 14, 1)
    assert h_vector("oooo") == (1, 11, 11, 1)
    assert h_vector("dddd") == (1, 6, 6, 1)
    assert h_vector("bbbb") == (1, 3, 3, 1)


def test_schroder_table_recurrence_matches_brute_force():
    for n in range(1, 5):
        for word in all_words(n):
            assert schroder_table(word) == schroder_table(word, "brute")
    for w in ("odubo", "bdudb", "ooooo"):
        assert schroder_table(w) == schroder_table(w, "brute")
        assert len(schroder_avoiders(w, "max")) == schroder_count(w)


def test_h_vector_from_f_vector():
    for word in all_words(4):
        assert h_from_f(f_vector(word, full=True)[1:], 4) == h_vector(word)


def test_orbit_counts():
    closed = [decoration_orbit_count(n) for n in range(1, 11)]
    assert closed == [1, 3, 7, 24, 76, 288, 1072, 4224, 16576, 66048]
    assert closed == [decoration_orbit_count(n, "recurrence") for n in range(1, 11)]
    assert closed[:6] == [decoration_orbit_count(n, "brute") for n in range(1, 7)]
