import json

import pytest

import oracles
from polelattice.decompose import (
    DecompositionReport,
    algebra_label,
    decomposition_report,
    f_elements,
    has_pole_image,
    orbit_reps,
    pol_T,
    product_law_failures,
    verify_suite,
)
from polelattice.lattices import chain_lattice, enumerate_lattices, pole_lattice


def test_pol_T_examples(b2):
    assert [s.level_sizes for s in pol_T(b2)] == [(1,), (1, 1), (1, 1, 1), (1, 2, 1)]
    assert [s.level_sizes for s in pol_T(chain_lattice(2))] == [(1,), (1, 1)]
    assert [s.level_sizes for s in pol_T(chain_lattice(1))] == [(1,)]


def test_orbit_examples(b2):
    assert len(orbit_reps(b2, pole_lattice((1, 2, 1)))) == 1
    assert len(orbit_reps(b2, chain_lattice(3))) == 2


def test_labels():
    assert algebra_label(3, 1) == "M_3(k)"
    assert algebra_label(1, 2) == "M_1(kC2)"
    assert algebra_label(2, 4) == "M_2(k(C2^2))"


def test_report_examples(b2, m3):
    rep = decomposition_report(b2)
    assert [(e.signature, e.n, e.aut_order) for e in rep.entries] == [
        ((1,), 1, 1), ((1, 1), 3, 1), ((1, 1, 1), 2, 1), ((1, 2, 1), 1, 2)]
    assert rep.summary() == "M_1(k) ⊕ M_3(k) ⊕ M_2(k) ⊕ M_1(kC2), dim 16"
    assert rep.dim_pole_part == rep.endomorphisms == 16 and rep.consistent
    assert decomposition_report(chain_lattice(2)).summary() == "M_1(k) ⊕ M_1(k), dim 2"
    assert decomposition_report(chain_lattice(1)).summary() == "M_1(k), dim 1"
    rep = decomposition_report(m3)
    assert rep.dim_pole_part == rep.dim_check_direct < rep.endomorphisms


def test_report_round_trip(m3):
    rep = decomposition_report(m3)
    text = json.dumps(rep.to_dict(), sort_keys=True)
    assert DecompositionReport.from_dict(json.loads(text)) == rep


@pytest.mark.parametrize("n", range(1, 6))
def test_report_counts_match_brute_force(n):
    for t in enumerate_lattices(n):
        ref = oracles.Lat(oracles.leq_matrix(t))
        rep = decomposition_report(t)
        assert rep.dim_check_direct == oracles.pole_image_count(ref)
        assert rep.endomorphisms == len(oracles.homs(ref, ref))
        for e in rep.entries:
            pref = oracles.Lat(oracles.pole_lattice_leq(e.signature))
            assert (e.n, e.aut_order) == oracles.orbit_count(ref, pref)


def test_has_pole_image(b2, m3):
    assert has_pole_image(b2, (0, 1, 2, 3))
    assert not has_pole_image(m3, (0, 1, 2, 3, 4))
    assert has_pole_image(m3, (0, 1, 1, 1, 1))


def test_product_law_literal_agrees(b2):
    count, bad = product_law_failures(b2, literal=True)
    assert count > 0 and bad == []
    assert product_law_failures(chain_lattice(3))[1] == []


def test_f_element_count(b2):
    assert len(f_elements(b2)) == 16


@pytest.mark.parametrize("suite", ["idempotents", "independence", "all"])
def test_suites_on_boolean_square(b2, suite):
    res = verify_suite(b2, suite)
    assert res and all(r.passed for r in res)


def test_orthogonality_on_chain():
    assert all(r.passed for r in verify_suite(chain_lattice(3), "orthogonality"))


def test_independence_rank(b2):
    (rec,) = verify_suite(b2, "independence")
    assert "rank 16" in rec.detail


def test_unknown_suite(b2):
    with pytest.raises(KeyError):
        verify_suite(b2, "nope")
