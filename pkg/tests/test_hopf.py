"""Shuffle algebra, permutree products and coproducts, bases, transforms."""

import itertools

import pytest
from hypothesis import given, strategies as st

from permutrees.correspond import p_symbol
from permutrees.enumeration import enumerate_permutrees
from permutrees.errors import EmptyOperand, ScopeError
from permutrees.geometry import vertex
from permutrees.hopf import (
    DecPerm,
    E,
    FormalSum,
    H,
    P,
    P_in_F,
    basis_change,
    convolution,
    dec,
    dendriform,
    fq_coproduct,
    fq_product,
    from_F,
    indecomposable_generators,
    is_decomposable,
    over,
    p_coproduct_sum,
    p_dendriform,
    p_multiply,
    p_product,
    q_coproduct,
    q_product,
    shifted_shuffle,
    to_F,
    under,
)
from permutrees.hopf.ipt import TruncatedSeries, ipt, ipt_by_extensions, ipt_closed, rational_term
from permutrees.lattice import rotate, tree_leq


def words(n, alphabet="odub"):
    return ["".join(w) for w in itertools.product(alphabet, repeat=n)]


def trees(n, alphabet="odub"):
    for w in words(n, alphabet):
        yield from enumerate_permutrees(w)


def perms(xs):
    return sorted("".join(map(str, x.perm)) for x in xs)


def test_shuffle_and_convolution_examples():
    assert perms(shifted_shuffle((1, 2), (2, 3, 1))) == (
        "12453 14253 14523 14532 41253 41523 41532 45123 45132 45312".split()
    )
    assert perms(convolution((1, 2), (2, 3, 1))) == (
        "12453 13452 14352 15342 23451 24351 25341 34251 35241 45231".split()
    )


def test_decorations_follow_values():
    for x in shifted_shuffle(dec((2, 1), "du"), dec((1,), "b")):
        assert x.word == "dub"
    for x in convolution(dec((2, 1), "du"), dec((1,), "b")):
        # the letter that was 1 in the left factor keeps its d
        low, high = sorted(x.perm[:2])
        assert x.word[low - 1] == "d" and x.word[high - 1] == "u"
        assert x.word[x.perm[2] - 1] == "b"


def test_product_matches_fiber_shuffle():
    for n, m in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3)]:
        for a in trees(n):
            for b in trees(m):
                assert fq_product(P_in_F(a), P_in_F(b)) == to_F(FormalSum(p_product(a, b)))


def test_product_interval_endpoints():
    for a in trees(2):
        for b in trees(2):
            prod = p_product(a, b)
            assert over(a, b) in prod and under(a, b) in prod
            assert all(tree_leq(over(a, b), s) and tree_leq(s, under(a, b)) for s in prod)


def test_coproduct_matches_fiber_deconcatenation():
    for n in range(1, 4):
        for t in trees(n):
            assert fq_coproduct(P_in_F(t)) == to_F(p_coproduct_sum(t))


def test_q_basis_is_dual_to_p():
    for size in (2, 3):
        for s in trees(size):
            for (a, b), c in p_coproduct_sum(s).items():
                if a is None or b is None:
                    continue
                assert q_product(a, b).count(s) == c
            for low, high in q_coproduct(s):
                if low is not None and high is not None:
                    assert s in p_product(low, high)


def test_e_and_h_are_multiplicative():
    for a in trees(1):
        for b in trees(2):
            assert p_multiply(E(a), E(b)) == E(over(a, b))
            assert p_multiply(H(a), H(b)) == H(under(a, b))


def test_decomposability_routes_agree():
    for n in range(1, 4):
        for t in trees(n):
            for basis in "EH":
                answers = {is_decomposable(t, basis, m) for m in ("cuts", "extensions", "product")}
                assert len(answers) == 1


def test_indecomposables_form_an_upper_set():
    for t in trees(3):
        if not is_decomposable(t):
            assert all(not is_decomposable(rotate(t, e)) for e in t.increasing_edges())


def test_basis_change_round_trip():
    for t in trees(3):
        for basis in "EH":
            assert basis_change(basis_change(P(t), "P", basis), basis, "P") == P(t)
    with pytest.raises(ValueError):
        basis_change(P(next(trees(2))), "P", "Q")


def test_generators_of_the_reference_decoration():
    gens = indecomposable_generators("buobobu")
    assert len(gens) == 4
    for g in gens:
        assert not is_decomposable(g)
    # the reference tree sits above at least one of them
    ref = next(t for t in enumerate_permutrees("buobobu") if vertex(t) == (7, -4, 3, 8, 1, 12, 1))
    assert is_decomposable(ref) or any(tree_leq(g, ref) for g in gens)


def test_dendriform_axioms():
    small = [dec(p, w) for n in (1, 2) for p in itertools.permutations(range(1, n + 1)) for w in words(n, "od")]
    for x, y, z in itertools.product(small, repeat=3):
        if x.n + y.n + z.n > 5:
            continue
        X, Y, Z = (FormalSum.single(v) for v in (x, y, z))
        assert dendriform(dendriform(X, Y, "left"), Z, "left") == dendriform(X, fq_product(Y, Z), "left")
        assert dendriform(dendriform(X, Y, "right"), Z, "left") == dendriform(X, dendriform(Y, Z, "left"), "right")
        assert dendriform(fq_product(X, Y), Z, "right") == dendriform(X, dendriform(Y, Z, "right"), "right")
        assert dendriform(X, Y, "left") + dendriform(X, Y, "right") == fq_product(X, Y)


def test_dendriform_needs_nonempty_words():
    with pytest.raises(EmptyOperand):
        dendriform(FormalSum.single(DecPerm((), "")), FormalSum.single(dec((1,))), "left")


def test_tree_dendriform_on_single_parent_words():
    for n, m in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        for a in trees(n, "od"):
            for b in trees(m, "od"):
                for side in ("left", "right"):
                    assert to_F(p_dendriform(a, b, side)) == dendriform(P_in_F(a), P_in_F(b), side)


def test_two_parent_dendriform_is_not_closed():
    a = p_symbol((2, 1, 3), "ouo")
    b = p_symbol((1, 3, 2), "odo")
    left = dendriform(P_in_F(a), P_in_F(b), "left")
    # two extensions of the same tree land on opposite sides
    assert DecPerm((2, 3, 4, 6, 5, 1), "ouoodo") in left
    assert DecPerm((2, 3, 4, 6, 1, 5), "ouoodo") not in left
    assert p_symbol((2, 3, 4, 6, 5, 1), "ouoodo") == p_symbol((2, 3, 4, 6, 1, 5), "ouoodo")
    with pytest.raises(ValueError):
        from_F(left)
    with pytest.raises(ScopeError):
        p_dendriform(a, b, "left")


def test_integer_point_transform_routes():
    degree = 5
    for n in range(1, 4):
        for w in words(n):
            for t in enumerate_permutrees(w):
                direct = ipt(t, degree)
                assert direct == ipt_by_extensions(t, degree)
                if set(w) <= set("ou"):
                    assert ipt_closed(t, degree) == direct


@pytest.mark.parametrize("x,y,z", list(itertools.product("ou", repeat=3)))
def test_transform_of_a_product(x, y, z):
    degree = 6
    t = p_symbol((2, 1, 3), x + "u" + y)
    t2 = p_symbol((1,), z)
    prod = p_product(t, t2)
    lhs = ipt(t, degree).extend(4) * ipt(t2, degree).extend(4, 3)
    total = TruncatedSeries(4, degree)
    for s in prod:
        total = total + ipt_closed(s, degree)
    assert lhs == total
    assert lhs == rational_term(4, [[1], [3], [1, 2, 3], [4]], [[1]], degree)
    terms = [
        rational_term(4, [[1], [3, 4], [4], [1, 2, 3, 4]], [[1]], degree),
        rational_term(4, [[1], [3, 4], [3], [1, 2, 3, 4]], [[1], [3]], degree),
        rational_term(4, [[1, 2, 3], [1], [3], [1, 2, 3, 4]], [[1, 2, 3], [1]], degree),
    ]
    assert terms[0] + terms[1] + terms[2] == total


keys = st.sampled_from(["a", "b", "c", "d"])
sums = st.dictionaries(keys, st.integers(-3, 3)).map(FormalSum)


@given(sums, sums, sums)
def test_formal_sums_form_a_group(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x - x).is_zero()
    assert 2 * x == x + x
    assert all(c != 0 for _, c in (x + y).items())
