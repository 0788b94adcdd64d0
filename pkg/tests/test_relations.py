import pytest
from hypothesis import given, strategies as st

from polelattice.errors import DimensionError
from polelattice.relations import (
    GroundSet,
    Permutation,
    Relation,
    complement_rel,
    delta_of_permutation,
    is_order,
    opposite_rel,
)


def rel(n, pairs):
    return Relation.from_pairs(n, n, pairs)


def test_identity_is_neutral():
    s = rel(3, [(0, 1), (2, 2), (1, 0)])
    assert Relation.identity(3) @ s == s
    assert s @ Relation.identity(3) == s


def test_empty_annihilates():
    s = rel(3, [(0, 1), (2, 0)])
    assert Relation.empty(3) @ s == Relation.empty(3)


def test_small_composition():
    assert rel(2, [(0, 1)]) @ rel(2, [(1, 0)]) == rel(2, [(0, 0)])


def test_opposite_examples():
    sw = Permutation((1, 0, 2))
    assert opposite_rel(delta_of_permutation(sw)) == delta_of_permutation(sw.inverse())
    assert opposite_rel(Relation.empty(2)) == Relation.empty(2)
    assert opposite_rel(rel(2, [(0, 1)])) == rel(2, [(1, 0)])


def test_delta_of_permutation():
    assert delta_of_permutation(Permutation.identity(3)) == Relation.identity(3)
    assert set(delta_of_permutation(Permutation((1, 0))).pairs()) == {(1, 0), (0, 1)}
    s = Permutation((2, 0, 1))
    assert delta_of_permutation(s) @ delta_of_permutation(s.inverse()) == Relation.identity(3)


def test_complement_examples():
    assert complement_rel(Relation.full(3)) == Relation.empty(3)
    assert set(complement_rel(Relation.identity(2)).pairs()) == {(0, 1), (1, 0)}
    chain = rel(2, [(0, 0), (1, 1), (0, 1)])
    assert complement_rel(chain).pairs() == [(1, 0)]


def test_is_order_examples():
    assert is_order(Relation.identity(4))
    assert not is_order(Relation.full(2))
    assert is_order(rel(2, [(0, 0), (1, 1), (0, 1)]))


def test_shape_mismatch():
    with pytest.raises(DimensionError):
        Relation.empty(2, 3) @ Relation.empty(2, 2)


def test_labels_must_be_unique():
    with pytest.raises(ValueError):
        GroundSet(2, ("a", "a"))


def test_bad_permutation():
    with pytest.raises(ValueError):
        Permutation((0, 0))


pairs3 = st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2)))


@given(pairs3, pairs3, pairs3)
def test_composition_associates(a, b, c):
    x, y, z = rel(3, a), rel(3, b), rel(3, c)
    assert (x @ y) @ z == x @ (y @ z)


@given(pairs3, pairs3)
def test_composition_matches_definition(a, b):
    expect = {(p, r) for (p, q) in a for (q2, r) in b if q == q2}
    assert set((rel(3, a) @ rel(3, b)).pairs()) == expect


@given(pairs3, pairs3)
def test_opposite_reverses_products(a, b):
    x, y = rel(3, a), rel(3, b)
    assert opposite_rel(x @ y) == opposite_rel(y) @ opposite_rel(x)


@given(st.permutations(range(4)), st.permutations(range(4)))
def test_delta_is_a_homomorphism(s, t):
    s, t = Permutation(tuple(s)), Permutation(tuple(t))
    assert delta_of_permutation(s * t) == delta_of_permutation(s) @ delta_of_permutation(t)
