import itertools

import pytest

import oracles as O
from cubical.cubic import check_cubic_axioms, check_full_embedding, check_mr_axiom, one_element_algebra
from cubical.filters import enumerate_gfilters, is_filter_algebra, presentation_from_gfilter
from cubical.instances import chain3
from cubical.interval import (atoms_of_interval_algebra, build_enveloping_boolean,
                              build_interval_algebra, embed_e, interval_algebra, lift_iota)
from cubical.lattice import check_lattice_laws, is_ultrafilter, mk_boolean_algebra


@pytest.mark.parametrize("n", range(5))
def test_counts(n):
    L = interval_algebra(n)
    assert L.size == 3 ** n
    assert len(L.atoms) == 2 ** n
    assert sorted(atoms_of_interval_algebra(L)) == sorted(L.atoms)


def test_b1_elements():
    L = build_interval_algebra(mk_boolean_algebra(1))
    assert L.pairs == ((0, 1), (1, 0), (1, 1))
    assert L.one == L.pair_id(1, 1)
    assert L.delta(L.one, L.pair_id(0, 1)) == L.pair_id(1, 0)
    assert atoms_of_interval_algebra(L) == [L.pair_id(1, 0), L.pair_id(0, 1)]
    assert atoms_of_interval_algebra(interval_algebra(0)) == [0]


@pytest.mark.parametrize("n", range(4))
def test_interval_algebra_axioms(n):
    L = interval_algebra(n)
    assert check_cubic_axioms(L).ok and check_mr_axiom(L).ok


@pytest.mark.parametrize("n", range(4))
def test_swap_and_componentwise_join(n):
    L = interval_algebra(n)
    for x, (a, b) in enumerate(L.pairs):
        assert L.delta_one(x) == L.pair_id(b, a)
    for x, y in itertools.product(L.elements, L.elements):
        (a, b), (c, d) = L.pairs[x], L.pairs[y]
        assert L.pairs[L.join(x, y)] == (a | c, b | d)


@pytest.mark.parametrize("n", [1, 2])
def test_delta_is_the_unique_similar_complement(n):
    # Δ(y, x) is the only z with z v x = y and z ≃ x
    L = interval_algebra(n)
    for y, x in L.comparable_pairs():
        zs = [z for z in L.elements if L.join(z, x) == y and L.delta(L.join(z, x), z) == x]
        assert zs == [L.delta(y, x)]


def test_embed_e():
    L = interval_algebra(1)
    e = embed_e(L)
    assert e[0] == L.pair_id(1, 0) and e[1] == L.one
    e2 = embed_e(interval_algebra(2))
    assert len(set(e2)) == 4


def test_envelope_two_element():
    F = mk_boolean_algebra(1)
    BF, iota = build_enveloping_boolean(F)
    assert BF.size == 4
    a1, a0 = 2 * 0 + 1, 2 * 0 + 0
    assert BF.join(a1, a0) == BF.top == 2 * 1 + 1
    assert iota == (1, 3)


@pytest.mark.parametrize("n", range(4))
def test_envelope_is_boolean_with_ultrafilter_image(n):
    F = mk_boolean_algebra(n)
    BF, iota = build_enveloping_boolean(F)
    assert BF.size == 2 ** (n + 1)
    assert check_lattice_laws(BF).ok
    for f in F.elements:
        assert BF.complement(2 * f + 1) == 2 * f
    assert is_ultrafilter(BF, frozenset(iota))


def test_lift_iota():
    F = mk_boolean_algebra(1)
    env = lift_iota(F)
    src, tgt = env.source, env.target
    x = src.pair_id(1, 0)
    assert env.hom(x) == tgt.pair_id(env.iota[1], env.iota[0])
    assert tgt.labels[env.hom(x)] == "<<1,1>,<0,1>>"
    env2 = lift_iota(mk_boolean_algebra(2))
    assert env2.hom.is_embedding()
    assert len(set(env2.hom.mapping)) == 9


def test_lift_iota_square():
    F = mk_boolean_algebra(2)
    env = lift_iota(F)
    es, et = embed_e(env.source), embed_e(env.target)
    for f in F.elements:
        assert et[env.iota[f]] == env.hom(es[f])


def test_lift_iota_is_not_full():
    # the image misses everything below the vertices of I(B_F) that are not images
    assert not check_full_embedding(lift_iota(mk_boolean_algebra(1)).hom)


def test_is_filter_algebra():
    ok, (G, pres) = is_filter_algebra(interval_algebra(2))
    assert ok and G in enumerate_gfilters(interval_algebra(2))
    assert O.is_vertex(O.to_string(interval_algebra(2), G.minimum))
    assert not pres.violations()
    assert is_filter_algebra(one_element_algebra())[0]
    assert is_filter_algebra(chain3()) == (False, None)


def test_presentation_is_bijective_iso_b2():
    L = interval_algebra(2)
    for G in enumerate_gfilters(L):
        pres = presentation_from_gfilter(G)
        hom = pres.as_hom()
        assert hom.is_isomorphism()
        assert {pres.inverse[pres(x)] for x in L.elements} == set(L.elements)
