"""Relative complements of filters, Δ on filters, Boolean filters and L_sB.

Throughout, ``G -> F`` is the relative complement ``{h in F | h v g = 1 for all g in G}``
and ``Δ(G, F) = Δ(1, G -> F) ∨ G`` for ``G ⊆ F``.  The Boolean algebra of
F-Boolean filters is ordered by reverse inclusion, so its join is ``∩`` and its
meet is the filter ``∨``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .cubic import (CubicAlgebra, CubicHom, algebra_memo, check_cubic_axioms,
                    check_full_embedding, check_mr_axiom, check_vertex_interval_iso, is_mr)
from .errors import ContractError, FalsificationError
from .filters import (Filter, alpha_beta, arrow_element, delta_image, enumerate_filters,
                      enumerate_gfilters, filter_intersect, filter_shift, filter_vee,
                      filter_vee_all, fip_witness, is_filter, principal, subfilters)
from .lattice import ImplicationLattice, check_lattice_laws
from .laws import Report, Sampling
from .twist import untwisted_relative


def _nested(G: Filter, F: Filter) -> CubicAlgebra:
    if G.algebra is not F.algebra:
        raise ContractError("filters belong to different algebras")
    if not G <= F:
        raise ContractError("relative complement needs G ⊆ F", sorted(G.members - F.members))
    return F.algebra


@algebra_memo
def rel_complement(G: Filter, F: Filter) -> Filter:
    """``G -> F``."""
    L = _nested(G, F)
    return Filter(L, (h for h in F.members if all(L.join(h, g) == L.one for g in G.members)))


def supset_oracle(G: Filter, F: Filter) -> Filter:
    """``⋂ {H | H ∨ G = F}`` by scanning every filter."""
    L = _nested(G, F)
    out = set(F.members)
    for H in enumerate_filters(L):
        if filter_vee(H, G) == F:
            out &= H.members
    return Filter(L, out)


def double_arrow_oracle(G: Filter, F: Filter) -> Filter:
    """``⋁ {H ⊆ F | H ∩ G = {1}}`` by scanning every subfilter of F."""
    L = _nested(G, F)
    fam = [H for H in subfilters(F) if filter_intersect(H, G).members == {L.one}]
    out = filter_vee_all(fam, L)
    if out is None:
        raise FalsificationError("double-arrow-fip", (G, F))
    return out


@algebra_memo
def filter_delta(G: Filter, F: Filter) -> Filter:
    """``Δ(G, F) = Δ(1, G -> F) ∨ G``; a missing meet is a falsification."""
    _nested(G, F)
    D = delta_image(rel_complement(G, F))
    out = filter_vee(D, G)
    if out is None:
        raise FalsificationError("delta-fip", fip_witness(D, G))
    return out


def is_f_boolean(G: Filter, F: Filter) -> bool:
    if not G <= F:
        return False
    return filter_vee(G, rel_complement(G, F)) == F


def is_weakly_f_boolean(G: Filter, F: Filter) -> bool:
    if not G <= F:
        return False
    return rel_complement(rel_complement(G, F), F) == G


def closure(G: Filter, F: Filter) -> Filter:
    """``cl(G) = (G -> F) -> F``."""
    return rel_complement(rel_complement(G, F), F)


def weak_join(G1: Filter, G2: Filter, F: Filter) -> Filter:
    """``cl(G1 ∨ G2)`` inside F."""
    J = filter_vee(G1, G2)
    if J is None:
        raise ContractError("operands have no common lower bound")
    return closure(J, F)


def containing_gfilters(G: Filter) -> list[Filter]:
    return [H for H in enumerate_gfilters(G.algebra) if G <= H]


class BooleanClass(NamedTuple):
    """The four predicates.  The F-relative ones are ``None`` without an ``F``;
    the quantified ones are ``None`` when no g-filter contains G."""

    weakly_f_boolean: bool | None
    f_boolean: bool | None
    weakly_boolean: bool | None
    boolean: bool | None


def classify_boolean(G: Filter, F: Filter | None = None) -> BooleanClass:
    hs = containing_gfilters(G)
    wf = fb = None
    if F is not None:
        wf, fb = is_weakly_f_boolean(G, F), is_f_boolean(G, F)
    if not hs:
        return BooleanClass(wf, fb, None, None)
    return BooleanClass(wf, fb, all(is_weakly_f_boolean(G, H) for H in hs),
                        all(is_f_boolean(G, H) for H in hs))


def is_boolean(G: Filter) -> bool:
    return bool(classify_boolean(G).boolean)


def f_boolean_filters(F: Filter) -> list[Filter]:
    return [G for G in subfilters(F) if is_f_boolean(G, F)]


def weakly_f_boolean_filters(F: Filter) -> list[Filter]:
    return [G for G in subfilters(F) if is_weakly_f_boolean(G, F)]


def _reverse_inclusion_algebra(F: Filter, elems: list[Filter], meet) -> tuple[ImplicationLattice, tuple[Filter, ...]]:
    elems = sorted(elems, key=lambda G: (len(G), sorted(G.members)))
    idx = {G: i for i, G in enumerate(elems)}
    try:
        join = [[idx[filter_intersect(a, b)] for b in elems] for a in elems]
        mt = [[idx[meet(a, b)] for b in elems] for a in elems]
        comp = [idx[rel_complement(a, F)] for a in elems]
    except (KeyError, ContractError):
        raise FalsificationError("boolean-algebra-closed", F) from None
    imp = [[join[comp[a]][b] for b in range(len(elems))] for a in range(len(elems))]
    labels = [str(sorted(G.members)) for G in elems]
    one = idx[Filter(F.algebra, {F.algebra.one})]
    lat = ImplicationLattice(join, mt, imp, one, labels)
    rep = check_lattice_laws(lat)
    if not rep.ok:
        bad = rep.failures()[0]
        raise FalsificationError(f"boolean-algebra-{bad.law}", bad.witness)
    if lat.bottom != idx[F] or any(lat.complement(i) != comp[i] for i in range(len(elems))):
        raise FalsificationError("boolean-algebra-complement", F)
    return lat, tuple(elems)


@algebra_memo
def boolean_algebra_of(F: Filter) -> tuple[ImplicationLattice, tuple[Filter, ...]]:
    """The F-Boolean filters under reverse inclusion: join ∩, meet ∨, top {1},
    bottom F, complement ``G -> F``.  Lattice id ``i`` is filter ``elems[i]``."""
    return _reverse_inclusion_algebra(F, f_boolean_filters(F), filter_vee)


def weak_boolean_algebra_of(F: Filter) -> tuple[ImplicationLattice, tuple[Filter, ...]]:
    """The weakly F-Boolean filters with ∩ and the weak join ``cl(∨)``."""
    return _reverse_inclusion_algebra(F, weakly_f_boolean_filters(F), lambda a, b: weak_join(a, b, F))


# -- law suites ---------------------------------------------------------------------


def nested_pairs(L: CubicAlgebra) -> list[tuple[Filter, Filter]]:
    return [(G, F) for F in enumerate_filters(L) for G in subfilters(F)]


def nested_triples(L: CubicAlgebra) -> list[tuple[Filter, Filter, Filter]]:
    return [(G, H, F) for F in enumerate_filters(L) for H in subfilters(F) for G in subfilters(H)]


def _skip_unless_mr(L: CubicAlgebra, rep: Report, names) -> bool:
    if is_mr(L):
        return False
    for n in names:
        rep.law(n).skip("algebra is not MR")
    return True


def check_complement_equalities(L: CubicAlgebra) -> Report:
    """``→``, brute-force ``⊃`` and ``⇒`` coincide on every nested pair."""
    rep = Report("complements")
    is_f = rep.law("arrow-is-filter")
    two = rep.law("arrow-equals-double-arrow")
    one = rep.law("supset-equals-arrow")
    small = rep.law("small-h")
    gg = rep.law("element-arrow-principal")
    for G, F in nested_pairs(L):
        A = rel_complement(G, F)
        is_f.check(is_filter(L, A.members), (G, F))
        two.check(double_arrow_oracle(G, F) == A, (G, F))
        one.check(supset_oracle(G, F) == A, (G, F))
        for g in G.members:
            ga = arrow_element(g, F)
            for h in F.members:
                if L.join(g, h) != L.one:
                    small.check(h not in ga, (G, F, g, h))
    for F in enumerate_filters(L):
        for g in F.members:
            gg.check(arrow_element(g, F) == rel_complement(principal(L, g), F), (F, g))
    return rep


def check_arrow_monotonicity(L: CubicAlgebra, sampling: Sampling | None = None) -> Report:
    rep = Report("arrow-monotone")
    incl = rep.law("arrow-incl-target")
    eq = rep.law("arrow-incl-equality")
    again = rep.law("arrow-antitone")
    for G, H, F in incl.over_list(nested_triples(L), sampling):
        GF = rel_complement(G, F)
        incl.check(rel_complement(G, H) <= GF, (G, H, F))
        if GF <= H:
            eq.check(rel_complement(G, H) == GF, (G, H, F))
        again.check(rel_complement(H, F) <= GF, (G, H, F))
    eq.mode, eq.seed, again.mode, again.seed = incl.mode, incl.seed, incl.mode, incl.seed
    conj = rep.law("arrow-conjoint")
    for G, F in nested_pairs(L):
        GF = rel_complement(G, F)
        J = filter_vee(G, GF)
        conj.check(J is not None and rel_complement(G, J) == GF, (G, F))
    return rep


def check_delta_laws(L: CubicAlgebra, sampling: Sampling | None = None) -> Report:
    rep = Report("filter-delta")
    names = ("delta-fip", "delta-intersection", "arrow-into-delta", "double-delta",
             "delta-principal-shift", "delta-double-principal", "delta-monotone", "delta-in-mr")
    if _skip_unless_mr(L, rep, names):
        return rep
    fip, inter, into, double, shift, dprin, mono, inmr = (rep.law(n) for n in names)
    for G, F in nested_pairs(L):
        fip.check(fip_witness(rel_complement(G, F), delta_image(G)) is None, (G, F))
        D = filter_delta(G, F)
        inter.check(filter_intersect(F, D) == G, (G, F))
        into.check(rel_complement(G, D) == delta_image(rel_complement(G, F)), (G, F))
        double.check(filter_delta(G, D) == filter_vee(G, rel_complement(G, F)), (G, F))
    for F in enumerate_filters(L):
        for g in F.members:
            shift.check(filter_delta(principal(L, g), F) == filter_shift(F, g), (F, g))
    for g, h in itertools.product(L.elements, repeat=2):
        if L.leq(h, g) and is_filter(L, L.up(h)):
            dprin.check(filter_delta(principal(L, g), principal(L, h)) == principal(L, L.delta(g, h)), (g, h))
    for G, H, F in mono.over_list(nested_triples(L), sampling):
        mono.check(filter_delta(G, H) <= filter_delta(G, F), (G, H, F))
    for g, h in itertools.product(L.elements, repeat=2):
        m = L.meet(g, h)
        if m is not None and L.join(g, h) == L.one:
            inmr.check(L.delta(g, m) == L.meet(g, L.delta_one(h)), (g, h))
    return rep


def check_boolean_transfer(L: CubicAlgebra) -> Report:
    rep = Report("boolean-transfer")
    names = ("boolean-implies-weak", "principal-is-boolean", "moving", "boolean-everywhere",
             "weakly-boolean-everywhere", "upwards", "upwards-arrow", "middle")
    if _skip_unless_mr(L, rep, names):
        return rep
    weak, prin, moving, every, weak_every, up, up_arrow, middle = (rep.law(n) for n in names)
    for G, F in nested_pairs(L):
        if is_f_boolean(G, F):
            weak.check(is_weakly_f_boolean(G, F), (G, F))
    for F in enumerate_filters(L):
        for g in F.members:
            prin.check(is_f_boolean(principal(L, g), F), (F, g))

    gs = enumerate_gfilters(L)
    for F, H in itertools.product(gs, gs):
        if not untwisted_relative(F, H):
            continue
        bH = alpha_beta(H).beta
        for G in subfilters(filter_intersect(F, H)):
            lhs = Filter(L, (bH[x] for x in rel_complement(G, F).members))
            rhs = rel_complement(Filter(L, (bH[x] for x in G.members)), H)
            moving.check(lhs == rhs, (F, H, G))
    for G, F in nested_pairs(L):
        if F in gs:
            c = classify_boolean(G, F)
            if c.f_boolean:
                every.check(c.boolean is True, (G, F))
            if c.weakly_f_boolean:
                weak_every.check(c.weakly_boolean is True, (G, F))

    for G, H, F in nested_triples(L):
        up_arrow.check(rel_complement(G, H) == filter_intersect(rel_complement(G, F), H), (G, H, F))
        if is_f_boolean(G, F) and is_f_boolean(H, F):
            up.check(is_f_boolean(G, H), (G, H, F))
        if is_f_boolean(G, H) and is_f_boolean(H, F):
            middle.check(is_f_boolean(G, F), (G, H, F))
    return rep


def check_boolean_closure(L: CubicAlgebra, sampling: Sampling | None = None) -> Report:
    rep = Report("boolean-closure")
    names = ("complement-of-intersection", "intersection-closed", "vee-closed",
             "relative-intersection", "boolean-intersection", "triple-arrow",
             "cl-inflationary", "cl-idempotent", "cl-monotone", "cl-weakly-boolean",
             "weak-intersection-closed", "weak-join", "boolean-algebra", "weak-boolean-algebra")
    if _skip_unless_mr(L, rep, names):
        return rep
    (comp_meet, inter_c, vee_c, rel_inter, bool_inter, triple, infl, idem, mono, clw,
     weak_inter, wjoin, ba, wba) = (rep.law(n) for n in names)

    fs = enumerate_filters(L)
    for F in fs:
        bools = f_boolean_filters(F)
        for G1, G2 in itertools.product(bools, repeat=2):
            I = filter_intersect(G1, G2)
            comp_meet.check(filter_vee(rel_complement(G1, F), rel_complement(G2, F)) == rel_complement(I, F),
                            (G1, G2, F))
            inter_c.check(is_f_boolean(I, F), (G1, G2, F))
            V = filter_vee(G1, G2)
            vee_c.check(V is not None and is_f_boolean(V, F), (G1, G2, F))
        weaks = weakly_f_boolean_filters(F)
        for G1, G2 in itertools.product(weaks, repeat=2):
            weak_inter.check(is_weakly_f_boolean(filter_intersect(G1, G2), F), (G1, G2, F))
            W = weak_join(G1, G2, F)
            wjoin.check(is_weakly_f_boolean(W, F) and W == filter_vee(G1, G2), (G1, G2, F))
        subs = subfilters(F)
        for G in subs:
            c = closure(G, F)
            triple.check(rel_complement(c, F) == rel_complement(G, F), (G, F))
            infl.check(G <= c, (G, F))
            idem.check(closure(c, F) == c, (G, F))
            clw.check(is_weakly_f_boolean(c, F), (G, F))
        for G1, G2 in mono.over([subs, subs], sampling):
            if G1 <= G2:
                mono.check(closure(G1, F) <= closure(G2, F), (G1, G2, F))
        for law, build in ((ba, boolean_algebra_of), (wba, weak_boolean_algebra_of)):
            try:
                build(F)
                law.check(True)
            except FalsificationError as exc:
                law.check(False, (F, exc.law, exc.witness))

    gs = enumerate_gfilters(L)
    for F, H in itertools.product(gs, gs):
        if not untwisted_relative(F, H):
            continue
        FH = filter_intersect(F, H)
        for G in f_boolean_filters(F):
            for K in f_boolean_filters(H):
                rel_inter.check(is_f_boolean(filter_intersect(G, K), FH), (F, H, G, K))
    booleans = [G for G in fs if is_boolean(G)]
    for G, K in itertools.product(booleans, repeat=2):
        bool_inter.check(is_boolean(filter_intersect(G, K)), (G, K))
    return rep


def check_delta_boolean_interaction(L: CubicAlgebra, sampling: Sampling | None = None) -> Report:
    rep = Report("delta-boolean")
    names = ("delta-arrow-delta", "delta-gives-boolean", "arrow-into-delta-h", "iterated-delta")
    if _skip_unless_mr(L, rep, names):
        return rep
    dad, dgb, aid, itd = (rep.law(n) for n in names)
    triples = [(G, H, F) for G, H, F in nested_triples(L) if is_f_boolean(G, F) and is_f_boolean(H, F)]
    for G, H, F in dad.over_list(triples, sampling):
        DGH, DGF, DHF = filter_delta(G, H), filter_delta(G, F), filter_delta(H, F)
        HF = rel_complement(H, F)
        dad.check(rel_complement(DGH, DGF) == delta_image(HF), (G, H, F))
        dgb.check(is_f_boolean(DGH, DGF), (G, H, F))
        aid.check(rel_complement(G, DHF) == filter_vee(rel_complement(G, H), delta_image(HF)), (G, H, F))
        itd.check(filter_delta(G, DHF) == filter_delta(DGH, DGF), (G, H, F))
    for r in (dgb, aid, itd):
        r.mode, r.seed = dad.mode, dad.seed
    return rep


def check_thm_lots(L: CubicAlgebra) -> Report:
    rep = Report("lots")
    names = ("intersection-boolean", "intersection-complement", "delta-recovers", "untwisted-iff-delta")
    if _skip_unless_mr(L, rep, names):
        return rep
    ib, ic, dr, iff = (rep.law(n) for n in names)
    gs = enumerate_gfilters(L)
    for F, H in itertools.product(gs, gs):
        if untwisted_relative(F, H):
            FH = filter_intersect(F, H)
            ib.check(is_f_boolean(FH, F), (F, H))
            ic.check(rel_complement(FH, F) == filter_intersect(delta_image(H), F), (F, H))
            dr.check(filter_delta(FH, F) == H, (F, H))
        witness = next((G for G in f_boolean_filters(F) if filter_delta(G, F) == H), None)
        iff.check(untwisted_relative(H, F) == (witness is not None), (F, H, witness))
    return rep


# -- L_sB ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BooleanFilterLattice:
    """Boolean filters under reverse inclusion as a cubic algebra.

    Id ``i`` of ``algebra`` is ``filters[i]``; ``e`` is ``g -> [g, 1]``.
    """

    source: CubicAlgebra
    algebra: CubicAlgebra
    filters: tuple[Filter, ...]
    e: CubicHom
    atoms: tuple[Filter, ...]

    @property
    def bijective(self) -> bool:
        return len(set(self.e.mapping)) == self.algebra.size

    def index(self, F: Filter) -> int:
        return self.filters.index(F)


@algebra_memo
def build_Lsb(L: CubicAlgebra) -> BooleanFilterLattice:
    """Collect the Boolean filters and install join ∩ and Δ = filter Δ, then
    verify the axioms, MR, the embedding and the atoms; failures raise."""
    fs = sorted((G for G in enumerate_filters(L) if is_boolean(G)),
                key=lambda G: (-len(G), sorted(G.members)))
    top = Filter(L, {L.one})
    if top not in fs:
        raise FalsificationError("lsb-contains-one", top)
    idx = {G: i for i, G in enumerate(fs)}
    try:
        join = [[idx[filter_intersect(a, b)] for b in fs] for a in fs]
    except KeyError:
        raise FalsificationError("lsb-join-closed", None) from None
    delta = {}
    for y, Y in enumerate(fs):
        for x, X in enumerate(fs):
            if Y <= X:
                D = filter_delta(Y, X)
                if D not in idx:
                    raise FalsificationError("lsb-delta-closed", (Y, X))
                delta[(y, x)] = idx[D]
    labels = [f"[{L.label(G.minimum)},1]" for G in fs]
    A = CubicAlgebra(join, idx[top], delta, tag="lsb", labels=labels)
    for rep in (check_cubic_axioms(A), check_mr_axiom(A)):
        if not rep.ok:
            bad = rep.failures()[0]
            raise FalsificationError(f"lsb-{bad.law}", bad.witness)
    try:
        e = CubicHom(L, A, tuple(idx[principal(L, g)] for g in L.elements))
    except KeyError:
        raise FalsificationError("lsb-principal-boolean", None) from None
    if not check_full_embedding(e):
        raise FalsificationError("lsb-full-embedding", None)
    atoms = tuple(fs[a] for a in A.atoms)
    if set(atoms) != set(enumerate_gfilters(L)):
        raise FalsificationError("lsb-atoms", [sorted(G.members) for G in atoms])
    return BooleanFilterLattice(L, A, tuple(fs), e, atoms)


def check_lsb(L: CubicAlgebra) -> Report:
    """Everything :func:`build_Lsb` asserts, as individual laws, plus the
    finite collapse, the vertex-interval isomorphism and the axiom (v) step."""
    rep = Report("lsb")
    built = rep.law("lsb-build")
    try:
        S = build_Lsb(L)
        built.check(True)
    except FalsificationError as exc:
        built.check(False, (exc.law, exc.witness))
        return rep
    A = S.algebra
    rep.extend(check_cubic_axioms(A))
    rep.extend(check_mr_axiom(A))
    rep.extend(check_vertex_interval_iso(A))
    rep.law("e-full-embedding").check(check_full_embedding(S.e))
    rep.law("atoms-are-gfilters").check(set(S.atoms) == set(enumerate_gfilters(L)),
                                        [sorted(G.members) for G in S.atoms])
    rep.law("e-bijective").check(S.bijective, len(S.filters))
    rep.law("all-filters-boolean").check(len(S.filters) == len(enumerate_filters(L)), len(S.filters))
    step = rep.law("lsb-step-v")
    for G, F in itertools.combinations_with_replacement(S.filters, 2):
        for a, b in ((G, F), (F, G)):
            if a <= b:
                step.check(filter_intersect(delta_image(filter_delta(a, b)), b) == rel_complement(a, b), (a, b))
    return rep
