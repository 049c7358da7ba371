"""The group of g-filters, its basic opens, the ~ congruence and the +/· algebra."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .boolean_filters import filter_delta, rel_complement
from .cubic import CubicAlgebra, algebra_memo
from .errors import ContractError, FalsificationError
from .filters import (Filter, alpha_beta, arrow_element, delta_image, enumerate_gfilters,
                      filter_automorphism, filter_intersect, filter_shift, filter_vee,
                      is_gfilter, is_principal, principal, similar, subfilters)
from .laws import Report, Sampling
from .twist import untwist_relation, untwisted_relative


def star_formula(F: Filter, G: Filter, H: Filter) -> Filter:
    """``{Δ(β_G(α_F(h)), β_G(h)) | h in H}``."""
    L = F.algebra
    aF = alpha_beta(F).alpha
    bG = alpha_beta(G).beta
    return Filter(L, (L.delta(bG[aF[h]], bG[h]) for h in H.members))


def star_image(F: Filter, G: Filter, H: Filter) -> Filter:
    """``φ_⟨F,G⟩[H]``."""
    phi = filter_automorphism(F, G)
    return Filter(F.algebra, (phi(h) for h in H.members))


@dataclass(frozen=True)
class GFilterGroup:
    algebra: CubicAlgebra
    base: Filter
    elements: tuple[Filter, ...]
    star: tuple[tuple[int, ...], ...] = field(repr=False)

    def index(self, G: Filter) -> int:
        return self.elements.index(G)

    def mul(self, G: Filter, H: Filter) -> Filter:
        return self.elements[self.star[self.index(G)][self.index(H)]]

    @property
    def order(self) -> int:
        return len(self.elements)


def group_violations(grp: GFilterGroup) -> list[tuple[str, object]]:
    n, s = grp.order, grp.star
    e = grp.index(grp.base)
    out = []
    for a, b in itertools.product(range(n), repeat=2):
        if s[a][b] != s[b][a]:
            out.append(("commutative", (a, b)))
    for a, b, c in itertools.product(range(n), repeat=3):
        if s[s[a][b]][c] != s[a][s[b][c]]:
            out.append(("associative", (a, b, c)))
    for a in range(n):
        if s[e][a] != a:
            out.append(("identity", a))
        if s[a][a] != e:
            out.append(("two-torsion", a))
    return out


@algebra_memo
def build_group(L: CubicAlgebra, F: Filter) -> GFilterGroup:
    """Star on g-filters with identity F, computed two ways and verified."""
    if not is_gfilter(F):
        raise ContractError("the base must be a g-filter", sorted(F.members))
    gs = enumerate_gfilters(L)
    idx = {G: i for i, G in enumerate(gs)}
    table = []
    for G in gs:
        row = []
        for H in gs:
            a, b = star_image(F, G, H), star_formula(F, G, H)
            if a != b:
                raise FalsificationError("star-two-ways", (G, H))
            if a not in idx:
                raise FalsificationError("star-closed", (G, H))
            row.append(idx[a])
        table.append(tuple(row))
    grp = GFilterGroup(L, F, gs, tuple(table))
    bad = group_violations(grp)
    if bad:
        raise FalsificationError(bad[0][0], bad[0][1])
    return grp


def basic_open(L: CubicAlgebra, m: int) -> list[Filter]:
    """``O_m``: the g-filters containing ``m``."""
    return [H for H in enumerate_gfilters(L) if m in H]


def check_group(L: CubicAlgebra) -> Report:
    rep = Report("group")
    names = ("star-two-ways", "star-closed", "group-laws", "two-torsion")
    gs = enumerate_gfilters(L)
    if not gs:
        for n in names:
            rep.law(n).skip("no g-filters")
        return rep
    two, closed, laws, tors = (rep.law(n) for n in names)
    idx = {G: i for i, G in enumerate(gs)}
    for F in gs:
        table = []
        for G in gs:
            row = []
            for H in gs:
                a = star_image(F, G, H)
                two.check(a == star_formula(F, G, H), (F, G, H))
                closed.check(a in idx, (F, G, H))
                row.append(idx.get(a, 0))
            table.append(tuple(row))
        bad = group_violations(GFilterGroup(L, F, gs, tuple(table)))
        laws.check(not [b for b in bad if b[0] != "two-torsion"], (F, bad[:1]))
        tors.check(not [b for b in bad if b[0] == "two-torsion"], (F, bad[:1]))
    return rep


def check_congruence(L: CubicAlgebra, sampling: Sampling | None = None) -> Report:
    rep = Report("congruence")
    names = ("principal-transfer", "delta-image-commutes", "untwist-transfer", "congruence", "density")
    gs, rel = untwist_relation(L)
    if not gs:
        for n in names:
            rep.law(n).skip("no g-filters")
        return rep
    prin, commute, transfer, cong, dense = (rep.law(n) for n in names)
    n = len(gs)
    F = gs[0]
    grp = build_group(L, F)
    s = grp.star

    for i, j, k in prin.over([range(n)] * 3, sampling):
        G, H1, H2 = gs[i], gs[j], gs[k]
        I = filter_intersect(H1, H2)
        if is_principal(I):
            phi = filter_automorphism(F, G)
            out = filter_intersect(gs[s[i][j]], gs[s[i][k]])
            prin.check(out == principal(L, phi(I.minimum)), (G, H1, H2))
        if rel[j][k]:
            transfer.check(rel[s[i][j]][s[i][k]], (G, H1, H2))
    transfer.mode, transfer.seed = prin.mode, prin.seed

    for G, H in itertools.product(gs, gs):
        phi = filter_automorphism(F, G)
        commute.check(Filter(L, (phi(x) for x in delta_image(H).members))
                      == delta_image(Filter(L, (phi(x) for x in H.members))), (G, H))

    for a, b, c, d in cong.over([range(n)] * 4, sampling):
        if rel[a][b] and rel[c][d]:
            cong.check(rel[s[a][c]][s[b][d]], (gs[a], gs[b], gs[c], gs[d]))

    for G in gs:
        bG = alpha_beta(G).beta
        for m in L.elements:
            if not basic_open(L, m):
                continue
            g = L.join(m, bG[m])
            Gg = filter_shift(G, g)
            dense.check(g in G and m in Gg and is_gfilter(Gg) and untwisted_relative(Gg, G), (G, m))
    return rep


# -- the +/· algebra ----------------------------------------------------------------


def inner_plus(A: Filter, B: Filter, F: Filter) -> Filter:
    """``[(B -> F) ∨ A] ∩ [(A -> F) ∨ B]`` for subfilters A, B of F."""
    left = filter_vee(rel_complement(B, F), A)
    right = filter_vee(rel_complement(A, F), B)
    if left is None or right is None:
        raise FalsificationError("inner-plus-fip", (A, B))
    return filter_intersect(left, right)


def plus(F: Filter, H: Filter, G: Filter) -> Filter:
    """``H + G = Δ((H ∩ F) + (G ∩ F), F)``."""
    return filter_delta(inner_plus(filter_intersect(H, F), filter_intersect(G, F), F), F)


def dot(F: Filter, H: Filter, G: Filter) -> Filter:
    """``H · G = Δ((H ∩ F) ∨ (G ∩ F), F)``."""
    V = filter_vee(filter_intersect(H, F), filter_intersect(G, F))
    if V is None:
        raise FalsificationError("dot-fip", (H, G))
    return filter_delta(V, F)


@dataclass(frozen=True)
class PlusDotAlgebra:
    base: Filter
    elements: tuple[Filter, ...]
    plus: tuple[tuple[int, ...], ...] = field(repr=False)
    dot: tuple[tuple[int, ...], ...] = field(repr=False)
    zero: int
    one: int


def _symmetric_difference(L: CubicAlgebra, v: int, a: int, b: int) -> int:
    """Symmetric difference in the Boolean interval ``[v, 1]``."""
    def comp(x):
        return next(y for y in L.up(v) if L.join(x, y) == L.one and L.meet(x, y) == v)
    return L.join(L.meet(comp(b), a), L.meet(comp(a), b))


@algebra_memo
def plus_dot_algebra(L: CubicAlgebra, F: Filter) -> PlusDotAlgebra:
    if not is_gfilter(F):
        raise ContractError("the base must be a g-filter", sorted(F.members))
    gs = enumerate_gfilters(L)
    idx = {G: i for i, G in enumerate(gs)}
    try:
        pt = tuple(tuple(idx[plus(F, H, G)] for G in gs) for H in gs)
        dt = tuple(tuple(idx[dot(F, H, G)] for G in gs) for H in gs)
    except KeyError:
        raise FalsificationError("plus-dot-closed", F) from None
    return PlusDotAlgebra(F, gs, pt, dt, idx[F], idx[delta_image(F)])


def check_plus_dot(L: CubicAlgebra) -> Report:
    """Boolean-ring laws, the transport to subfilters of F, and the
    symmetric-difference oracle for the inner +."""
    rep = Report("plus-dot")
    names = ("boolean-ring", "interval-iso", "inner-plus-oracle")
    gs = enumerate_gfilters(L)
    if not gs:
        for n in names:
            rep.law(n).skip("no g-filters")
        return rep
    ring, iso, oracle = (rep.law(n) for n in names)
    for F in gs:
        A = plus_dot_algebra(L, F)
        p, d, z, o = A.plus, A.dot, A.zero, A.one
        n = len(gs)
        for a in range(n):
            ring.check(p[z][a] == a and p[a][a] == z and d[o][a] == a and d[a][a] == a, (F, a))
        for a, b, c in itertools.product(range(n), repeat=3):
            ring.check(p[a][b] == p[b][a] and d[a][b] == d[b][a]
                       and p[p[a][b]][c] == p[a][p[b][c]] and d[d[a][b]][c] == d[a][d[b][c]]
                       and d[a][p[b][c]] == p[d[a][b]][d[a][c]], (F, a, b, c))
        subs = subfilters(F)
        image = [filter_intersect(G, F) for G in gs]
        iso.check(sorted(map(sorted, (x.members for x in image))) == sorted(map(sorted, (x.members for x in subs)))
                  and all(filter_delta(filter_intersect(G, F), F) == G for G in gs), F)
        v = F.minimum
        for X, Y in itertools.product(subs, subs):
            K = inner_plus(X, Y, F)
            oracle.check(K == principal(L, _symmetric_difference(L, v, X.minimum, Y.minimum)), (F, X, Y))
    return rep


def check_same_ops(L: CubicAlgebra, F: Filter | None = None, sampling: Sampling | None = None) -> Report:
    """``G * H = G + H`` with the two inclusions and the ``∩ F`` step as sub-checks."""
    rep = Report("same-ops")
    names = ("k-in-star", "k-arrow-in-delta-star", "star-meet-f-in-k", "star-equals-plus")
    gs = enumerate_gfilters(L)
    if not gs:
        for n in names:
            rep.law(n).skip("no g-filters")
        return rep
    first, second, third, equal = (rep.law(n) for n in names)
    bases = [F] if F is not None else list(gs)
    for B, G, H in equal.over([bases, gs, gs], sampling):
        S = star_formula(B, G, H)
        K = inner_plus(filter_intersect(H, B), filter_intersect(G, B), B)
        first.check(K <= S, (B, G, H))
        second.check(rel_complement(K, B) <= delta_image(S), (B, G, H))
        third.check(filter_intersect(S, B) <= K, (B, G, H))
        equal.check(S == plus(B, G, H), (B, G, H))
    for r in (first, second, third):
        r.mode, r.seed = equal.mode, equal.seed
    return rep


@dataclass(frozen=True)
class SubgroupN:
    base: Filter
    members: tuple[Filter, ...]
    image: frozenset[Filter]
    predicted: frozenset[Filter]
    not_closed_witness: object


def subgroup_N(L: CubicAlgebra, F: Filter) -> SubgroupN:
    """``N = {K | K ~ F}``, its image ``{K ∩ F}`` in the interval of subfilters
    of F, and a witness that the image is not up- or down-closed (or a note)."""
    gs = enumerate_gfilters(L)
    N = tuple(K for K in gs if untwisted_relative(K, F))
    image = frozenset(filter_intersect(K, F) for K in N)
    predicted = frozenset([principal(L, g) for g in F.members] + [arrow_element(g, F) for g in F.members])
    subs = subfilters(F)
    witness = None
    for X in image:
        for Y in subs:
            if Y not in image and (Y <= X or X <= Y):
                witness = (X, Y)
                break
        if witness:
            break
    return SubgroupN(F, N, image, predicted, witness if witness else "no witness at this size")


def check_subgroup_N(L: CubicAlgebra) -> Report:
    rep = Report("subgroup-n")
    names = ("contains-base", "image-characterization", "subgroup")
    gs = enumerate_gfilters(L)
    if not gs:
        for n in names:
            rep.law(n).skip("no g-filters")
        return rep
    base, char, sub = (rep.law(n) for n in names)
    for F in gs:
        S = subgroup_N(L, F)
        base.check(F in S.members, F)
        char.check(S.image == S.predicted, F)
        grp = build_group(L, F)
        ok = all(grp.mul(a, b) in S.members for a in S.members for b in S.members)
        sub.check(ok and all(similar(K, F) for K in S.members), F)
    return rep
