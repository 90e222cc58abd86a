import json

import pytest
from hypothesis import given

from permutrees import Decoration, Letter, Permutree, parse_decoration, validate
from permutrees.core import (
    boundary_normalize,
    edge_cuts,
    require_valid,
    symmetree,
    tree_from_cuts,
    tree_from_edges,
)
from permutrees.correspond import p_symbol
from permutrees.errors import EmptyInput, InvalidTree, UnknownLetter

from conftest import decorated_permutations, decorations

REFERENCE_JSON = (
    '{"n":7,"decoration":"buobobu","vertices":['
    '{"label":1,"parents":[null,null],"children":[null,2]},'
    '{"label":2,"parents":[1,3],"children":[null]},'
    '{"label":3,"parents":[4],"children":[2]},'
    '{"label":4,"parents":[null,6],"children":[3,5]},'
    '{"label":5,"parents":[4],"children":[null]},'
    '{"label":6,"parents":[null,null],"children":[4,7]},'
    '{"label":7,"parents":[6,null],"children":[null]}]}'
)


def test_letter_arities():
    assert [(l.two_parents, l.two_children) for l in Letter] == [
        (False, False),
        (False, True),
        (True, False),
        (True, True),
    ]


def test_parse_and_reject():
    assert parse_decoration("odub").word == "odub"
    with pytest.raises(UnknownLetter) as err:
        parse_decoration("oxo")
    assert err.value.index == 1
    with pytest.raises(EmptyInput):
        parse_decoration("")


def test_aliases_map_glyphs():
    glyphs = {"⊕": Letter.NONE, "⊗": Letter.BOTH, "⊖": Letter.UP, "⊘": Letter.DOWN}
    assert parse_decoration("⊗⊖⊕⊘", glyphs).word == "buod"


def test_refinement_order():
    assert Decoration("oooo").refines(Decoration("odub"))
    assert Decoration("odub").refines(Decoration("bbbb"))
    assert not Decoration("d").refines(Decoration("u"))
    assert not Decoration("b").refines(Decoration("o"))


def test_boundary_normalize():
    assert boundary_normalize(Decoration("budo")).word == "oudo"
    assert boundary_normalize(Decoration("b")).word == "o"


def test_reference_tree_is_valid():
    t = Permutree.from_json(REFERENCE_JSON)
    assert validate(t) == []
    assert t.edge_cut(3, 4).source == frozenset({1, 2, 3})
    assert len(edge_cuts(t)) == 6


def test_validation_names_the_violation():
    # the chain 1 -> 3 -> 2 hangs in the left child slot of 2
    bad = Permutree(Decoration("odo"), ((3,), (None,), (2,)), ((None,), (3, None), (1,)))
    problems = validate(bad)
    assert any("left descendant label 3 >= 2" in p for p in problems)
    with pytest.raises(InvalidTree):
        require_valid(bad)


def test_wrong_arity_reported():
    bad = Permutree(Decoration("d"), ((None,),), ((None,),))
    assert validate(bad) == ["vertex 1: expected 2 child slots, got 1"]


def test_disconnected_reported():
    bad = Permutree(Decoration("oo"), ((None,), (None,)), ((None,), (None,)))
    assert any("internal edges" in p for p in validate(bad))


@given(decorated_permutations(max_n=7))
def test_stub_counts(pw):
    perm, word = pw
    t = p_symbol(perm, word)
    d = Decoration(word)
    assert validate(t) == []
    assert t.bottom_stubs() == 1 + len(d.down_labels)
    assert t.top_stubs() == 1 + len(d.up_labels)


@given(decorated_permutations(max_n=7))
def test_json_round_trip_is_exact(pw):
    t = p_symbol(*pw)
    text = t.to_json()
    assert Permutree.from_json(text) == t
    assert Permutree.from_json(text).to_json() == text
    assert set(json.loads(text)) == {"n", "decoration", "vertices"}


@given(decorated_permutations(max_n=7))
def test_rebuild_from_edges_and_cuts(pw):
    t = p_symbol(*pw)
    assert tree_from_edges(t.decoration, t.edges) == t
    assert tree_from_cuts(t.decoration, t.cuts) == t


@given(decorated_permutations(max_n=7))
def test_reflections_are_involutions(pw):
    t = p_symbol(*pw)
    for axis in ("horizontal", "vertical"):
        s = symmetree(t, axis)
        assert validate(s) == []
        assert symmetree(s, axis) == t
    assert symmetree(t, "horizontal").decoration == t.decoration.reversed()
    assert symmetree(t, "vertical").decoration == t.decoration.flipped()


@given(decorations(max_n=8))
def test_flip_and_reverse_are_involutions(word):
    d = Decoration(word)
    assert d.flipped().flipped() == d
    assert d.reversed().reversed() == d
