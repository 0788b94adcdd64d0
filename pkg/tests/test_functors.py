from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from polelattice.decompose import _pole, orbit_reps, pol_T
from polelattice.errors import ContractError, ResourceGuardError
from polelattice.functors import (
    FreeElt,
    LatticeMap,
    act_correspondence,
    act_free,
    all_maps,
    apply_linmorph,
    gamma,
    gamma_opposite,
    omega_map,
    pole_span_check,
    rank_SQ,
    rho_inverse,
    rho_iso,
    z_basis,
)
from polelattice.klin import LinMorph, epsilon_Q, j_pi
from polelattice.lattices import (
    boolean_lattice,
    chain_lattice,
    diamond_m3,
    downset_lattice,
    enumerate_pole_signatures,
    pole_lattice,
)
from polelattice.morphisms import enumerate_hom, enumerate_sur
from polelattice.posets import Poset, antichain_poset, enumerate_posets, pole_decomposition, poset_from_covers
from polelattice.relalg import RelLinComb, delta
from polelattice.relations import GroundSet, Relation


def test_action_examples(b2):
    phi = LatticeMap(GroundSet(3), b2, (1, 2, 3))
    assert act_correspondence(Relation.identity(3), phi) == phi
    assert act_correspondence(Relation.empty(2, 3), phi).values == (0, 0)
    one = LatticeMap(GroundSet(1), b2, (1,))
    assert act_correspondence(Relation.full(1), one).values == (1,)
    s = Relation.from_pairs(2, 3, [(0, 0), (0, 1), (1, 2)])
    assert act_correspondence(s, phi).values == (3, 3)


def test_rho_iso_examples():
    p = poset_from_covers(3, [(0, 1)])
    t = downset_lattice(p).op
    full, empty = t.size - 1, 0
    assert rho_iso(LatticeMap(GroundSet(2), t, (full, full))) == Relation.empty(2, 3)
    assert rho_iso(LatticeMap(GroundSet(2), t, (empty, empty))) == Relation.full(2, 3)
    with pytest.raises(ContractError):
        rho_iso(LatticeMap(GroundSet(1), chain_lattice(3), (0,)))


@pytest.mark.parametrize("n", range(0, 4))
def test_rho_round_trip_and_intertwining(n):
    for p in enumerate_posets(n):
        t = downset_lattice(p).op
        for m in (1, 2):
            g = GroundSet(m)
            for vals in product(range(t.size), repeat=m):
                phi = LatticeMap(g, t, vals)
                s = rho_iso(phi)
                assert rho_inverse(s, t) == phi
                for pairs in [[(0, 0)], [(0, i) for i in range(m)], []]:
                    rel = Relation.from_pairs(1, m, pairs)
                    assert rho_iso(act_correspondence(rel, phi)) == rel @ s


def test_gamma_examples():
    g0 = gamma(Poset.from_upsets(()))
    assert g0.terms == {(): 1}
    p = antichain_poset(1)
    t = downset_lattice(p)
    assert gamma(p).terms == {(t.principal(0),): 1, (t.strict(0),): -1}


@pytest.mark.parametrize("n", range(0, 5))
def test_rho_of_gamma_is_delta(n):
    for p in enumerate_posets(n):
        g = gamma(p)
        image = RelLinComb(n, {})
        for vals, c in g.terms.items():
            image = image + RelLinComb(n, {rho_iso(LatticeMap(GroundSet(n), g.codomain, vals)).bits: c})
        assert image == delta(p)


def test_z_basis_examples(b2):
    assert {m.values for m in z_basis(b2, 2)} == {(1, 2), (2, 1)}
    assert z_basis(b2, 1) == []
    assert all(len(z_basis(chain_lattice(1), m)) == 1 for m in range(4))


def test_rank_examples(b2):
    assert [rank_SQ(b2, m) for m in range(3)] == [0, 0, 2]
    assert rank_SQ(chain_lattice(2), 1) == 1
    assert rank_SQ(chain_lattice(1), 3) == 1
    with pytest.raises(ContractError):
        rank_SQ(diamond_m3(), 1)


def test_rank_formula_oracle():
    for sig in enumerate_pole_signatures(6):
        q = pole_lattice(sig)
        ref = oracles.Lat(oracles.leq_matrix(q))
        for m in range(5):
            assert rank_SQ(q, m) == len(z_basis(q, m)) == oracles.z_basis_count(ref, m)


def test_maps_guard():
    with pytest.raises(ResourceGuardError):
        list(all_maps(boolean_lattice(3), 7))


def test_apply_identity_and_vanishing(b2):
    x = FreeElt(2, b2, {(1, 2): 3, (0, 3): -1})
    assert apply_linmorph(LinMorph.identity(b2), x) == x
    c3 = chain_lattice(3)
    for pi in enumerate_sur(b2, c3):
        j = j_pi(pi)
        for vals in product(range(3), repeat=2):
            elt = FreeElt(2, c3, {vals: 1})
            covered = set(c3.irr.irr) <= set(vals)
            assert apply_linmorph(j, elt).is_zero() != covered


@pytest.mark.parametrize("sig", [s.level_sizes for s in enumerate_pole_signatures(7)])
def test_epsilon_on_omega(sig):
    q = pole_lattice(sig)
    singles = set(pole_decomposition(q.poset).singletons)
    e1 = sum(1 for e in q.irr.irr if e in singles)
    lhs = apply_linmorph(epsilon_Q(q), FreeElt.single(omega_map(q)))
    assert lhs == gamma_opposite(q).scale((-1) ** e1)
    assert set(omega_map(q).values) == set(q.irr.irr)


def test_reconstruction_of_F_Q():
    """``|Q|^m = sum_P n(Q, P) rank_SP(P, m)``."""
    for sig in enumerate_pole_signatures(6):
        q = pole_lattice(sig)
        for m in range(5):
            total = sum(len(orbit_reps(q, _pole(s))) * rank_SQ(_pole(s), m) for s in pol_T(q))
            assert total == q.size ** m


@settings(max_examples=40, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 1), st.integers(0, 2))),
       st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2))),
       st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_functoriality(a, b, vals):
    b2 = boolean_lattice(2)
    s, t = Relation.from_pairs(2, 3, a), Relation.from_pairs(3, 3, b)
    u = FreeElt(3, b2, {tuple(vals): 2, (3, 0, 1): -1})
    assert act_free(s, act_free(t, u)) == act_free(s @ t, u)
    for f in enumerate_hom(b2, b2)[::3]:
        lf = LinMorph.single(f)
        assert apply_linmorph(lf, act_free(s, u)) == act_free(s, apply_linmorph(lf, u))


def test_span_examples(m3):
    q = pole_lattice((1, 2, 1, 1))
    rec = pole_span_check(q, 2)
    assert rec.ok and rec.rank_joint == q.size ** 2
    assert pole_span_check(m3, 1).ok
    rec = pole_span_check(m3, 0)
    assert rec.ok and rec.maps == 1
