import itertools

import pytest
from hypothesis import given, strategies as st

import oracles as O
from cubical.boolean_filters import (boolean_algebra_of, build_Lsb, check_arrow_monotonicity,
                                     check_boolean_closure, check_boolean_transfer,
                                     check_complement_equalities, check_delta_boolean_interaction,
                                     check_delta_laws, check_lsb, check_thm_lots, classify_boolean,
                                     closure, double_arrow_oracle, f_boolean_filters, filter_delta,
                                     is_boolean, is_f_boolean, nested_pairs, nested_triples,
                                     rel_complement, supset_oracle, weak_join)
from cubical.cubic import check_cubic_axioms, check_full_embedding, check_mr_axiom, one_element_algebra
from cubical.errors import ContractError
from cubical.filters import (arrow_element, delta_image, enumerate_filters, enumerate_gfilters,
                             filter_intersect, filter_shift, filter_vee, principal)
from cubical.instances import imported_b2
from cubical.interval import interval_algebra
from cubical.lattice import check_lattice_laws
from cubical.laws import Sampling

U, W, ONE = 0, 1, 2
INSTANCES = [interval_algebra(n) for n in range(4)] + [imported_b2(), one_element_algebra()]
IDS = ["B0", "B1", "B2", "B3", "imported", "one"]


@pytest.mark.parametrize("n", range(4))
def test_nested_counts(n):
    # pairs and chains in {u, w < 1}, per coordinate: 5 and 7
    L = interval_algebra(n)
    assert len(nested_pairs(L)) == 5 ** n
    assert len(nested_triples(L)) == 7 ** n


def test_rel_complement_examples(b1, b2):
    top = principal(b1, ONE)
    for F in enumerate_filters(b1):
        assert rel_complement(top, F) == F
    Fu = principal(b1, U)
    assert rel_complement(Fu, Fu) == top
    for F in enumerate_filters(b2):
        for g in F.members:
            assert rel_complement(principal(b2, g), F) == arrow_element(g, F)
    with pytest.raises(ContractError):
        rel_complement(Fu, top)


@pytest.mark.parametrize("n", range(4))
def test_rel_complement_and_delta_oracle(n):
    L = interval_algebra(n)
    s = lambda x: O.to_string(L, x)
    for G, F in nested_pairs(L):
        g, f = s(G.minimum), s(F.minimum)
        assert rel_complement(G, F) == principal(L, O.to_id(L, O.imp(g, f)))
        assert filter_delta(G, F) == principal(L, O.to_id(L, O.delta(g, f)))


@pytest.mark.parametrize("n", [1, 2])
def test_three_complements_agree(n):
    L = interval_algebra(n)
    for G, F in nested_pairs(L):
        arrow = rel_complement(G, F)
        assert supset_oracle(G, F) == arrow == double_arrow_oracle(G, F)


def test_delta_examples(b1, b2):
    Fu = principal(b1, U)
    assert filter_delta(principal(b1, ONE), Fu) == principal(b1, W)
    for G, F in nested_pairs(b2):
        assert filter_intersect(F, filter_delta(G, F)) == G
    for F in enumerate_filters(b2):
        for g in F.members:
            assert filter_delta(principal(b2, g), F) == filter_shift(F, g)
    for h, g in b2.comparable_pairs():
        assert filter_delta(principal(b2, h), principal(b2, g)) == principal(b2, b2.delta(h, g))


def test_double_delta_is_involution_on_booleans(b2):
    for G, F in nested_pairs(b2):
        D = filter_delta(G, filter_delta(G, F))
        assert D == filter_vee(G, rel_complement(G, F))
        if is_f_boolean(G, F):
            assert D == F


def test_classify_examples(b2):
    for F in enumerate_gfilters(b2):
        for g in F.members:
            assert is_f_boolean(principal(b2, g), F)
        assert classify_boolean(F, F).f_boolean
    for F, H in itertools.product(enumerate_gfilters(b2), repeat=2):
        assert is_f_boolean(filter_intersect(F, H), F)
    c = classify_boolean(principal(b2, b2.one))
    assert c.weakly_f_boolean is None and c.f_boolean is None and c.boolean


@pytest.mark.parametrize("n", range(4))
def test_every_filter_is_boolean(n):
    L = interval_algebra(n)
    assert all(is_boolean(G) for G in enumerate_filters(L))


def test_boolean_algebra_of(b2):
    lat, elems = boolean_algebra_of(principal(b2, b2.one))
    assert lat.size == 1
    v = b2.atoms[0]
    F = principal(b2, v)
    lat, elems = boolean_algebra_of(F)
    assert lat.size == 4 and check_lattice_laws(lat).ok
    assert sorted(elems) == sorted(f_boolean_filters(F))
    # G -> min G carries the reverse-inclusion order onto [v, 1]
    m = [G.minimum for G in elems]
    assert sorted(m) == sorted(b2.up(v))
    for i, j in itertools.product(lat.elements, repeat=2):
        assert m[lat.join(i, j)] == b2.join(m[i], m[j])
        assert m[lat.meet(i, j)] == b2.meet(m[i], m[j])
    assert elems[lat.bottom] == F and elems[lat.top] == principal(b2, b2.one)


def test_closure_idempotent_on_b2(b2):
    for G, F in nested_pairs(b2):
        c = closure(G, F)
        assert closure(c, F) == c and G <= c


def test_weak_join(b2):
    for (G1, F), (G2, F2) in itertools.product(nested_pairs(b2), repeat=2):
        if F == F2 and filter_vee(G1, G2) is not None:
            assert weak_join(G1, G2, F) == filter_vee(G1, G2)


def test_thm_lots_example(b1):
    H, F = principal(b1, W), principal(b1, U)
    G = filter_intersect(F, H)
    assert G == principal(b1, ONE)
    assert filter_delta(G, F) == H
    assert rel_complement(G, F) == filter_intersect(delta_image(H), F)


@pytest.mark.parametrize("L", INSTANCES, ids=IDS)
def test_suites(L):
    for check in (check_complement_equalities, check_arrow_monotonicity, check_delta_laws,
                  check_boolean_transfer, check_boolean_closure, check_delta_boolean_interaction,
                  check_thm_lots, check_lsb):
        rep = check(L)
        assert rep.ok, (check.__name__, [(r.law, r.witness) for r in rep.failures()])


def test_sampled_delta_laws_record_seed():
    rep = check_delta_laws(interval_algebra(3), sampling=Sampling(budget=100, seed=9))
    assert rep.ok
    assert any(r.mode == "sampled" and r.seed == 9 for r in rep.results)


@pytest.mark.parametrize("n,atoms", [(0, 1), (1, 2), (2, 4), (3, 8)])
def test_lsb(n, atoms):
    L = interval_algebra(n)
    S = build_Lsb(L)
    A = S.algebra
    assert A.size == 3 ** n and len(A.atoms) == atoms
    assert check_cubic_axioms(A).ok and check_mr_axiom(A).ok
    assert set(S.atoms) == set(enumerate_gfilters(L))
    assert check_full_embedding(S.e) and S.bijective
    assert S.filters[A.one] == principal(L, L.one)


def test_lsb_of_one_element():
    S = build_Lsb(one_element_algebra())
    assert S.algebra.size == 1


@given(st.integers(0, 26), st.integers(0, 26), st.integers(0, 26))
def test_delta_monotone_in_ambient(a, b, c):
    # G ⊆ H ⊆ F  =>  Δ(G, H) ⊆ Δ(G, F)
    L = interval_algebra(3)
    f = a
    h = L.join(f, b)
    g = L.join(h, c)
    G, H, F = principal(L, g), principal(L, h), principal(L, f)
    assert filter_delta(G, H) <= filter_delta(G, F)
    assert rel_complement(H, F) <= rel_complement(G, F)
