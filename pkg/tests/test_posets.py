import pytest

import oracles
from polelattice.errors import ContractError, ResourceGuardError
from polelattice.posets import (
    Poset,
    Singleton,
    TwinPair,
    antichain_poset,
    automorphisms,
    chain_poset,
    enumerate_posets,
    is_pole_by_permutation,
    permutation_criterion_holds,
    pole_decomposition,
    poset_from_covers,
)
from polelattice.relations import Permutation, Relation

N_POSET = poset_from_covers(4, [(0, 2), (1, 2), (1, 3)])
BOWTIE = poset_from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def test_rejects_non_order():
    with pytest.raises(ContractError):
        Poset.from_relation(Relation.full(2))


def test_automorphism_examples():
    assert automorphisms(antichain_poset(2)).order == 2
    assert automorphisms(chain_poset(3)).order == 1
    # two twin levels separated by singletons
    p = poset_from_covers(6, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5)])
    assert automorphisms(p).order == 4


def test_permutation_examples():
    assert is_pole_by_permutation(antichain_poset(3)) is None
    assert is_pole_by_permutation(chain_poset(3)) == Permutation.identity(3)
    assert is_pole_by_permutation(antichain_poset(2)) == Permutation((1, 0))
    assert is_pole_by_permutation(N_POSET) is None


def test_decomposition_examples():
    assert pole_decomposition(N_POSET) is None
    dec = pole_decomposition(chain_poset(3))
    assert [type(b) for b in dec.blocks] == [Singleton] * 3
    dec = pole_decomposition(BOWTIE)
    assert [type(b) for b in dec.blocks] == [Singleton, TwinPair, Singleton]
    assert dec.signature == (1, 2, 1)
    assert dec.reconstruct() == BOWTIE.leq
    assert dec.tau() == Permutation((0, 2, 1, 3))


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 16), (5, 63)])
def test_poset_counts(n, count):
    assert len(enumerate_posets(n)) == count


def test_poset_count_oracle():
    assert [len(enumerate_posets(n)) for n in range(1, 6)] == [oracles.count_posets(n) for n in range(1, 6)]


def test_enumeration_guard():
    with pytest.raises(ResourceGuardError):
        enumerate_posets(7)


@pytest.mark.parametrize("n", range(1, 6))
def test_recognisers_match_brute_force(n):
    for p in enumerate_posets(n):
        leq = oracles.leq_matrix(p)
        brute = oracles.permutation_criterion(leq)
        dec = pole_decomposition(p)
        tau = is_pole_by_permutation(p)
        assert (dec is not None) == bool(brute) == (tau is not None)
        if dec is not None:
            assert dec.reconstruct() == p.leq
            assert tau.image in brute
            assert permutation_criterion_holds(p, tau)
            aut = oracles.automorphisms(leq)
            assert automorphisms(p).order == len(aut) == 2 ** (len(dec.twins) // 2)
            assert tau.image in aut


@pytest.mark.parametrize("n", range(1, 5))
def test_automorphism_group_matches_brute_force(n):
    for p in enumerate_posets(n):
        assert sorted(s.image for s in automorphisms(p)) == sorted(oracles.automorphisms(oracles.leq_matrix(p)))
