import itertools

import pytest
from hypothesis import given, strategies as st

import oracles as O
from cubical.cubic import one_element_algebra
from cubical.errors import ContractError
from cubical.filters import enumerate_gfilters, principal
from cubical.group import (basic_open, build_group, check_congruence, check_group, check_plus_dot,
                           check_same_ops, check_subgroup_N, dot, plus, plus_dot_algebra,
                           star_formula, star_image, subgroup_N)
from cubical.instances import imported_b2
from cubical.interval import interval_algebra
from cubical.laws import Sampling

U, W, ONE = 0, 1, 2


def _vertex(L, G):
    return O.to_string(L, G.minimum)


def test_b1_group(b1):
    Fu, Fw = principal(b1, U), principal(b1, W)
    grp = build_group(b1, Fu)
    assert grp.order == 2
    assert grp.mul(Fw, Fw) == Fu and grp.mul(Fu, Fw) == Fw


@pytest.mark.parametrize("n", [1, 2, 3])
def test_star_matches_xor_oracle(n):
    L = interval_algebra(n)
    for F in enumerate_gfilters(L):
        grp = build_group(L, F)
        for G, H in itertools.product(grp.elements, repeat=2):
            assert _vertex(L, grp.mul(G, H)) == O.star(_vertex(L, F), _vertex(L, G), _vertex(L, H))
            assert star_image(F, G, H) == star_formula(F, G, H)
        assert all(grp.mul(F, H) == H and grp.mul(H, H) == F for H in grp.elements)


def test_build_group_needs_gfilter(b1):
    with pytest.raises(ContractError):
        build_group(b1, principal(b1, ONE))


def test_basic_opens(b1):
    for n in (1, 2, 3):
        L = interval_algebra(n)
        assert list(basic_open(L, L.one)) == list(enumerate_gfilters(L))
        for v in L.atoms:
            assert basic_open(L, v) == [principal(L, v)]
    assert basic_open(b1, U) == [principal(b1, U)]


def test_plus_dot_examples(b2):
    for F in enumerate_gfilters(b2):
        for H in enumerate_gfilters(b2):
            assert plus(F, H, F) == H
            assert plus(F, H, H) == F


@pytest.mark.parametrize("n", [1, 2, 3])
def test_plus_dot_tables_match_ring_oracle(n):
    L = interval_algebra(n)
    for F in enumerate_gfilters(L):
        A = plus_dot_algebra(L, F)
        v0 = _vertex(L, F)
        for i, j in itertools.product(range(len(A.elements)), repeat=2):
            g, h = _vertex(L, A.elements[i]), _vertex(L, A.elements[j])
            assert _vertex(L, A.elements[A.plus[i][j]]) == O.star(v0, g, h)
            assert _vertex(L, A.elements[A.dot[i][j]]) == O.dot(v0, g, h)


def test_plus_dot_needs_gfilter(b1):
    with pytest.raises(ContractError):
        plus_dot_algebra(b1, principal(b1, ONE))


@pytest.mark.parametrize("L", [interval_algebra(n) for n in range(4)] + [imported_b2(), one_element_algebra()],
                         ids=["B0", "B1", "B2", "B3", "imported", "one"])
def test_suites(L):
    assert check_group(L).ok
    assert check_congruence(L).ok
    assert check_plus_dot(L).ok
    assert check_same_ops(L).ok
    assert check_subgroup_N(L).ok


def test_congruence_sampled_records_seed():
    rep = check_congruence(interval_algebra(3), sampling=Sampling(budget=200, seed=11))
    assert rep.ok
    assert rep["congruence"].mode == "sampled" and rep["congruence"].seed == 11


def test_subgroup_n_b2(b2):
    gs = enumerate_gfilters(b2)
    for F in gs:
        S = subgroup_N(b2, F)
        assert F in S.members
        assert set(S.members) == set(gs)
        assert S.image == S.predicted


@given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 7))
def test_dot_distributes_over_plus(a, b, c):
    L = interval_algebra(3)
    gs = enumerate_gfilters(L)
    F, G, H, K = gs[0], gs[a], gs[b], gs[c]
    assert dot(F, G, plus(F, H, K)) == plus(F, dot(F, G, H), dot(F, G, K))
