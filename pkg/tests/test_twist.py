import itertools

import pytest

from cubical.cubic import one_element_algebra
from cubical.errors import ContractError
from cubical.filters import (alpha_beta, delta_image, enumerate_filters, enumerate_gfilters, filter_intersect,
                             filter_shift, is_principal, principal)
from cubical.group import basic_open
from cubical.instances import imported_b2
from cubical.interval import interval_algebra
from cubical.twist import (check_face_map_lemmas, check_relation, check_untwist_characterization,
                           is_twisted, is_twisted_relative, natural_embedding, untwist_classes,
                           untwist_relation, untwisted_relative, vertex_witnesses)


def test_is_twisted_examples(b2):
    assert not is_twisted(principal(b2, b2.one))
    assert len(vertex_witnesses(principal(b2, b2.one))) == 4
    for v in b2.atoms:
        w = vertex_witnesses(principal(b2, v))
        assert len(w) == 1
        base = b2.base
        assert b2.pair_id(base.complement(w[0]), w[0]) == v


@pytest.mark.parametrize("n", range(4))
def test_finite_collapse(n):
    L = interval_algebra(n)
    assert not any(is_twisted(F) for F in enumerate_filters(L))
    assert len(untwist_classes(L)) == 1


def test_twisting_needs_an_interval_algebra():
    with pytest.raises(ContractError):
        is_twisted(principal(imported_b2(), 0))


def test_relative_examples(b2):
    gs = enumerate_gfilters(b2)
    for F in gs:
        assert untwisted_relative(F, F)
    assert untwisted_relative(gs[0], gs[1])


def test_relative_needs_containment(b1):
    G = principal(b1, b1.one)
    with pytest.raises(ContractError):
        is_twisted_relative(principal(b1, 0), G)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_witness_cases_match_intersections(n):
    L = interval_algebra(n)
    seen = set()
    for F, G in itertools.product(enumerate_gfilters(L), repeat=2):
        rt = is_twisted_relative(F, G)
        assert not rt.twisted and rt.witnesses
        for w in rt.witnesses:
            seen.add(w.case)
            side = filter_intersect(F, G) if w.case == "eq4" else filter_intersect(delta_image(F), G)
            assert side == principal(L, w.g)
            ctx = natural_embedding(G)
            T = ctx.target
            v = T.pair_id(T.base.complement(w.a), w.a)
            assert all(T.leq(v, ctx(f)) for f in F.members)
    assert seen == {"eq4", "eq5"}


def test_principal_filter_image_has_explicit_witness(b2):
    G = enumerate_gfilters(b2)[0]
    rt = is_twisted_relative(G, G)
    by_case = {w.case: w.g for w in rt.witnesses}
    # G ∩ G = [min G, 1] and Δ(1, G) ∩ G = {1}
    assert by_case == {"eq4": G.minimum, "eq5": b2.one}
    assert is_principal(filter_intersect(G, G))


@pytest.mark.parametrize("L", [interval_algebra(n) for n in range(4)] + [imported_b2(), one_element_algebra()],
                         ids=["B0", "B1", "B2", "B3", "imported", "one"])
def test_suites(L):
    assert check_untwist_characterization(L).ok
    assert check_relation(L).ok
    assert check_face_map_lemmas(L).ok


def test_relation_matrix_b2(b2):
    gs, rel = untwist_relation(b2)
    assert len(gs) == 4 and all(all(row) for row in rel)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_class_hits_every_basic_open(n):
    # the shift of G by m v β_G(m) lies in O_m and is ~ G
    L = interval_algebra(n)
    for G in enumerate_gfilters(L):
        bG = alpha_beta(G).beta
        for m in L.elements:
            H = filter_shift(G, L.join(m, bG[m]))
            assert H in basic_open(L, m)
            assert untwisted_relative(H, G)
