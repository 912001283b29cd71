import math

import pytest
from hypothesis import given, settings, strategies as st

import oracles as O
from conftest import XY, XYZ, words
from sweeps import additivity_sweep
from tautcert.lcs import (
    LieCoordinateError,
    ResourceBudget,
    ResourceBudgetExceeded,
    WeightAtLeast,
    basic_commutators_of_weight,
    collect,
    collected_word,
    collection_remainder_weight,
    derived_depth,
    equal_mod_derived,
    hall_basis,
    in_lower_central_paper_index,
    lcs_weight,
    lie_coordinates,
    magnus_expand,
    witt_number,
)
from tautcert.words import Alphabet, Word, commutator, exponent_vector, parse_word


def w(text, a=XY):
    return parse_word(text, a)


def series_dict(s):
    return {str(list(m)): c for m, c in sorted(s.terms.items())}


def test_magnus_examples(frozen):
    assert magnus_expand(w("x^-1"), 3).format(["X", "Y"]) == "1 - X + XX - XXX"
    assert series_dict(magnus_expand(w("[x,y]"), 2)) == frozen["magnus_comm_xy_D2"]
    assert magnus_expand(XY.identity(), 4).format() == "1"


@given(words(XYZ, 15), st.integers(1, 4))
def test_magnus_matches_oracle(u, D):
    assert {m: c for m, c in magnus_expand(u, D).terms.items()} == O.magnus_oracle(u.signed, D)


@given(words(XY, 10), words(XY, 10))
def test_magnus_multiplicative(u, v):
    assert magnus_expand(u * v, 4) == magnus_expand(u, 4) * magnus_expand(v, 4)


def test_lcs_weight_examples(frozen):
    assert lcs_weight(w("x"), 4) == 1
    assert lcs_weight(w("[x,[x,y]]"), 6) == frozen["lcs_weight_x_xy"] == 3
    assert lcs_weight(w("[x,y]"), 4) == 2
    assert lcs_weight(XY.identity(), 4) == math.inf
    deep = lcs_weight(w("[[x,y],[x^-1,y]]"), 3)
    assert isinstance(deep, WeightAtLeast) and deep == 4
    assert lcs_weight(w("[[x,y],[x^-1,y]]"), 6) == frozen["lcs_weight_comm_comm"] == 5


def test_paper_index_membership():
    assert in_lower_central_paper_index(w("[x,y]"), 1)
    assert not in_lower_central_paper_index(w("[x,y]"), 2)
    assert in_lower_central_paper_index(w("[x,[x,y]]"), 2)


def test_hall_examples():
    b = hall_basis(2, 3)
    assert [c.format() for c in b] == ["x1", "x2", "[x1,x2]", "[x1,[x1,x2]]", "[x2,[x1,x2]]"]
    assert len(basic_commutators_of_weight(2, 4)) == 3
    assert [c.format() for c in hall_basis(1, 5)] == ["x1"]


def test_hall_counts_match_necklaces(frozen):
    assert [len(basic_commutators_of_weight(2, k)) for k in range(1, 7)] == frozen["witt_rank2"]
    assert [len(basic_commutators_of_weight(3, k)) for k in range(1, 5)] == frozen["witt_rank3"]
    assert [witt_number(2, k) for k in range(1, 7)] == frozen["witt_rank2"]


def test_hall_ordering_and_shape():
    basis = hall_basis(3, 5)
    assert [b.order for b in basis] == list(range(len(basis)))
    assert [b.weight for b in basis] == sorted(b.weight for b in basis)
    for b in basis:
        if b.is_leaf:
            continue
        assert b.left.order < b.right.order
        if not b.right.is_leaf:
            assert b.left.order >= b.right.left.order


def test_lie_coordinate_examples(frozen):
    assert lie_coordinates(w("[x,y]"), 2).coefficients == (1,)
    assert lie_coordinates(w("[x,y]^3"), 2).coefficients == (3,)
    assert frozen["comm_xy_cubed_deg2"] == {"[0, 1]": 3, "[1, 0]": -3}
    assert lie_coordinates(w("[y,x]"), 2).coefficients == (-1,)
    with pytest.raises(LieCoordinateError) as e:
        lie_coordinates(w("x"), 2)
    assert e.value.degree == 1


def test_collect_examples(frozen):
    out = collect(w("x y x^-1"), 2)
    assert [(b.format(), e) for b, e in out] == [("x2", 1), ("[x1,x2]", 1)]
    # after dividing off y the remainder has Magnus series 1 + XY - YX
    assert frozen["y^-1xyx^-1_magnus_D2"] == {"[0, 1]": 1, "[1, 0]": -1, "[]": 1}
    assert [(b.format(), e) for b, e in collect(w("x^5"), 3)] == [("x1", 5)]
    assert collect(XY.identity(), 3) == []


@settings(max_examples=60)
@given(words(XY, 14))
def test_collection_round_trip(u):
    r = collection_remainder_weight(u, 4)
    assert r >= 5


@given(words(XYZ, 10))
def test_collected_product_order(u):
    out = collect(u, 3)
    orders = [b.order for b, _ in out]
    assert orders == sorted(orders)
    assert all(e != 0 for _, e in out)
    prod = collected_word(out, XYZ)
    assert lcs_weight(u * prod.inverse(), 3) >= 4


def test_additivity_sweep_k2():
    checked, bad = additivity_sweep(2)
    assert checked > 1000 and not bad


def test_disjointness_fails_for_inverse_pair():
    """gamma = x and delta = x^-1 are distinct and nontrivial in H_1, yet
    ``[x, [x,y]]`` and ``[x^-1, [x,y]^-1]`` agree modulo G_3."""
    u = w("[x,y]")
    a = lie_coordinates(commutator(w("x"), u), 3).coefficients
    b = lie_coordinates(commutator(w("x^-1"), u.inverse()), 3).coefficients
    assert a == b and any(a)


def test_disjointness_fails_for_independent_pair():
    """Jacobi: ``[x,[y,c]] = [y,[x,c]]`` modulo G_4 when ``c = [x,y]``."""
    c = w("[x,y]")
    a = lie_coordinates(commutator(w("x"), commutator(w("y"), c)), 4).coefficients
    b = lie_coordinates(commutator(w("y"), commutator(w("x"), c)), 4).coefficients
    assert a == b and any(a)


# derived series ------------------------------------------------------------


def test_derived_examples(frozen):
    assert derived_depth(w("[[x,y],[x^-1,y]]"), 4) == frozen["comm_comm_depth"] == 2
    a, b, c = (Word(XYZ, t) for t in frozen["genus3_words"])
    assert [derived_depth(v, 4) for v in (a, b, c)] == frozen["genus3_depths"] == [2, 1, 0]
    assert derived_depth(w("x"), 3) == 0
    assert derived_depth(XY.identity(), 3) == 3


def test_solvable_tower_depths_match_oracle(frozen):
    for K, data in frozen["solvable"].items():
        a = Word(Alphabet.standard(data["rank"]), data["a_word"])
        assert derived_depth(a, int(K) + 1) == data["a_depth"] == int(K)


comm_words = st.recursive(
    words(XY, 3),
    lambda inner: st.tuples(inner, inner).map(lambda p: commutator(*p)),
    max_leaves=6,
)


@settings(max_examples=150)
@given(comm_words)
def test_derived_depth_matches_oracle(u):
    assert derived_depth(u, 3) == O.derived_depth_oracle(u.signed, 3, 2)


@given(words(XY, 6), words(XY, 6), words(XY, 6), words(XY, 6))
def test_second_derived_membership(p, q, r, s):
    u = commutator(commutator(p, q), commutator(r, s))
    assert derived_depth(u, 2) == 2


@given(words(XY, 8), words(XY, 8))
def test_equal_mod_derived_level_one(u, v):
    assert equal_mod_derived(u, v, 1) == (exponent_vector(u) == exponent_vector(v))


def test_budget_exceeded():
    long = w("[x,y]") ** 50
    with pytest.raises(ResourceBudgetExceeded):
        derived_depth(long, 3, ResourceBudget(max_word_length=100))
    with pytest.raises(ResourceBudgetExceeded):
        derived_depth(w("[[x,y],[x^-1,y]]"), 4, ResourceBudget(max_depth=2))
