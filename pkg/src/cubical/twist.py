"""Twisted filters, untwisting relative to a g-filter, and the ~ relation.

In a finite I(B) every filter ``[m, 1]`` has a vertex below ``m``, so nothing is
twisted and ~ has a single class.  The checks here assert that collapse
explicitly rather than assuming it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cubic import CubicAlgebra, CubicHom, algebra_memo, face_map
from .errors import ContractError
from .filters import (Filter, alpha_beta, delta_image, enumerate_filters,
                      enumerate_gfilters, filter_intersect, generated_closure,
                      is_principal, presentation_from_gfilter, principal)
from .interval import Envelope, IntervalAlgebra, lift_iota
from .laws import Report, Sampling


def vertex_witnesses(F: Filter, IA: IntervalAlgebra | None = None) -> list[int]:
    """Base elements ``b`` with ``⟨comp b, b⟩`` below every member of ``F``."""
    IA = IA if IA is not None else F.algebra
    if not isinstance(IA, IntervalAlgebra):
        raise ContractError("twisting is defined for interval algebras only")
    base = IA.base
    out = []
    for b in base.elements:
        v = IA.pair_id(base.complement(b), b)
        if all(IA.leq(v, f) for f in F.members):
            out.append(b)
    return out


def is_twisted(F: Filter) -> bool:
    return not vertex_witnesses(F)


@dataclass(frozen=True)
class TwistContext:
    """The natural embedding ``[[G]] ≅ I(G) -> I(B_G)`` of a filter ``G``."""

    filter: Filter
    envelope: Envelope = field(repr=False)
    mapping: dict = field(hash=False, compare=False, repr=False)

    @property
    def target(self) -> IntervalAlgebra:
        return self.envelope.target

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    @property
    def embedding(self) -> CubicHom:
        L = self.filter.algebra
        if len(self.mapping) != L.size:
            raise ContractError("embedding of a proper subalgebra is not total")
        return CubicHom(L, self.target, tuple(self.mapping[x] for x in L.elements))

    def image(self, F: Filter) -> Filter:
        return Filter(self.target, (self.mapping[f] for f in F.members))


@algebra_memo
def natural_embedding(G: Filter) -> TwistContext:
    pres = presentation_from_gfilter(G)
    env = lift_iota(pres.base)
    mapping = {x: env.hom(pres(x)) for x in pres.domain}
    return TwistContext(G, env, mapping)


def is_untwisted_along(e: CubicHom, F: Filter) -> bool:
    if not isinstance(e.target, IntervalAlgebra):
        raise ContractError("embedding target must be an interval algebra")
    return not is_twisted(Filter(e.target, (e(f) for f in F.members)))


@dataclass(frozen=True)
class TwistWitness:
    """A vertex ``⟨comp a, a⟩`` of I(B_G) below the image of F.

    ``a = ⟨g, i⟩`` in B_G; ``case`` is "eq4" when ``i = 1`` (then F ∩ G = [g, 1])
    and "eq5" when ``i = 0`` (then Δ(1, F) ∩ G = [g, 1]).
    """

    a: int
    g: int
    case: str


@dataclass(frozen=True)
class RelativeTwist:
    twisted: bool
    witnesses: tuple[TwistWitness, ...]


def is_twisted_relative(F: Filter, G: Filter) -> RelativeTwist:
    if F.algebra is not G.algebra:
        raise ContractError("filters belong to different algebras")
    if not F.members <= generated_closure(G):
        raise ContractError("F is not inside the subalgebra generated by G", sorted(F.members))
    ctx = natural_embedding(G)
    members = presentation_from_gfilter(G).members
    wit = []
    for a in vertex_witnesses(ctx.image(F), ctx.target):
        g, i = members[a // 2], a % 2
        wit.append(TwistWitness(a, g, "eq4" if i == 1 else "eq5"))
    return RelativeTwist(not wit, tuple(wit))


def untwisted_relative(F: Filter, G: Filter) -> bool:
    return not is_twisted_relative(F, G).twisted


def principality_criterion(F: Filter, G: Filter) -> bool:
    """One of F ∩ G and Δ(1, F) ∩ G is principal."""
    return is_principal(filter_intersect(F, G)) or is_principal(filter_intersect(delta_image(F), G))


@algebra_memo
def untwist_relation(L: CubicAlgebra) -> tuple[tuple[Filter, ...], tuple[tuple[bool, ...], ...]]:
    """The g-filters and the matrix ``rel[i][j] = gs[i] ~ gs[j]``."""
    gs = enumerate_gfilters(L)
    return gs, tuple(tuple(untwisted_relative(F, G) for G in gs) for F in gs)


def untwist_classes(L: CubicAlgebra) -> list[list[Filter]]:
    gs, rel = untwist_relation(L)
    classes: list[list[int]] = []
    for i in range(len(gs)):
        for c in classes:
            if rel[i][c[0]]:
                c.append(i)
                break
        else:
            classes.append([i])
    return [[gs[i] for i in c] for c in classes]


# -- law suites ---------------------------------------------------------------------


def check_untwist_characterization(L: CubicAlgebra) -> Report:
    rep = Report("untwist")
    gs = enumerate_gfilters(L)
    names = ("characterization", "symmetric", "witness-case", "witness-below-image",
             "finite-collapse")
    if not gs:
        for n in names:
            rep.law(n).skip("no g-filters")
        return rep
    char, sym, case, below, collapse = (rep.law(n) for n in names)
    for F, G in itertools.product(gs, gs):
        rt = is_twisted_relative(F, G)
        char.check((not rt.twisted) == principality_criterion(F, G), (F, G))
        sym.check(rt.twisted == is_twisted_relative(G, F).twisted, (F, G))
        ctx = natural_embedding(G)
        T = ctx.target
        for w in rt.witnesses:
            side = filter_intersect(F, G) if w.case == "eq4" else filter_intersect(delta_image(F), G)
            case.check(side == principal(L, w.g), (F, G, w.a, w.case))
            v = T.pair_id(T.base.complement(w.a), w.a)
            below.check(all(T.leq(v, ctx(f)) for f in F.members), (F, G, w.a))
        collapse.check(not rt.twisted and principality_criterion(F, G), (F, G))
    if isinstance(L, IntervalAlgebra):
        for F in enumerate_filters(L):
            collapse.check(not is_twisted(F), F)
    return rep


def check_relation(L: CubicAlgebra) -> Report:
    """~ is an equivalence relation; on finite instances it has one class."""
    rep = Report("untwist-relation")
    gs, rel = untwist_relation(L)
    n = len(gs)
    refl, sym, trans, one = (rep.law(x) for x in ("reflexive", "symmetric", "transitive", "single-class"))
    if not n:
        for r in (refl, sym, trans, one):
            r.skip("no g-filters")
        return rep
    for i in range(n):
        refl.check(rel[i][i], gs[i])
    for i, j in itertools.product(range(n), repeat=2):
        sym.check(rel[i][j] == rel[j][i], (gs[i], gs[j]))
    for i, j, k in itertools.product(range(n), repeat=3):
        trans.check(not (rel[i][j] and rel[j][k]) or rel[i][k], (gs[i], gs[j], gs[k]))
    one.check(len(untwist_classes(L)) == 1, len(untwist_classes(L)))
    return rep


def _is_interval_ultrafilter(T: IntervalAlgebra, a: int, S: frozenset[int]) -> bool:
    """``S`` is an ultrafilter of the Boolean interval ``[a, 1]`` of ``T``."""
    up = T.up(a)
    if not S <= up or a in S or T.one not in S:
        return False
    for x in S:
        if not T.up(x) <= S:
            return False
        for y in S:
            m = T.meet(x, y)
            if m is None or m not in S:
                return False
    for x in up:
        comps = [y for y in up if T.join(x, y) == T.one and T.meet(x, y) == a]
        if len(comps) != 1 or (x in S) == (comps[0] in S):
            return False
    return True


def _psi(F: Filter, H: Filter) -> tuple[int, ...]:
    """``⟨h, i⟩ -> ⟨β_F(h), i⟩`` as an id map B_H -> B_F."""
    mh = presentation_from_gfilter(H).members
    mf = presentation_from_gfilter(F).members
    idx = {x: i for i, x in enumerate(mf)}
    bF = alpha_beta(F).beta
    return tuple(2 * idx[bF[mh[k // 2]]] + (k % 2) for k in range(2 * len(mh)))


def check_face_map_lemmas(L: CubicAlgebra, sampling: Sampling | None = None) -> Report:
    """Face-map square, ultrafilter image, ψ-composite equality and transitivity."""
    rep = Report("face-map")
    gs = enumerate_gfilters(L)
    names = ("face-square", "image-ultrafilter", "psi-boolean-iso", "psi-composite",
             "transitivity-theorem", "transitivity-corollary")
    if not gs:
        for n in names:
            rep.law(n).skip("no g-filters")
        return rep
    square, ultra, psi_iso, comp, thm, cor = (rep.law(n) for n in names)
    for F, H in itertools.product(gs, gs):
        ctxH, ctxF = natural_embedding(H), natural_embedding(F)
        T = ctxH.target
        BH = ctxH.envelope.boolean
        zero = T.pair_id(BH.top, BH.bottom)
        psi = _psi(F, H)
        BF = ctxF.envelope.boolean
        psi_iso.check(sorted(psi) == list(BF.elements) and all(
            psi[BH.join(p, q)] == BF.join(psi[p], psi[q]) and psi[BH.meet(p, q)] == BF.meet(psi[p], psi[q])
            for p in BH.elements for q in BH.elements), (F, H))
        bH = alpha_beta(H).beta
        img = frozenset(ctxH(f) for f in F.members)
        for b in vertex_witnesses(Filter(T, img), T):
            a = T.pair_id(T.base.complement(b), b)
            ultra.check(_is_interval_ultrafilter(T, a, img), (F, H, a))
            for f in sorted(F.members):
                moved = face_map(T, a, zero, ctxH(f))
                square.check(moved == ctxH(bH[f]), (F, H, a, f))
                p, q = T.pairs[moved]
                Tf = ctxF.target
                comp.check(Tf.pair_id(psi[p], psi[q]) == ctxF(f), (F, H, a, f))

    gsl, rel = untwist_relation(L)
    n = len(gsl)
    for i, j, k in thm.over([range(n)] * 3, sampling):
        if rel[i][k] and rel[j][k]:
            thm.check(rel[j][i], (gsl[i], gsl[j], gsl[k]))
        if rel[i][j] and rel[j][k]:
            cor.check(rel[i][k], (gsl[i], gsl[j], gsl[k]))
    cor.mode, cor.seed = thm.mode, thm.seed
    return rep
