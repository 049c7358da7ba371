"""Filters of a finite cubic algebra as explicit member sets.

A filter contains 1, is upward closed, and contains ``f ∧ g`` (which must
exist) for any two members.  In a finite algebra every filter is therefore
``[min, 1]``; the set-level operations here never rely on that, so the
element-level oracle in :mod:`cubical.oracle` can cross-check them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .cubic import CubicAlgebra, CubicHom, algebra_memo, check_cubic_axioms, is_mr
from .errors import ContractError, FalsificationError, FilterValidationError
from .interval import IntervalAlgebra, Presentation
from .lattice import ImplicationLattice
from .laws import Report, Sampling

#: Largest carrier for which :func:`scan_filters` enumerates every subset.
SCAN_LIMIT = 9


class Filter:
    """An id set of ``algebra``.  Equality and hashing use the members only,
    scoped to the identity of the algebra."""

    __slots__ = ("algebra", "members")

    def __init__(self, algebra: CubicAlgebra, members: Iterable[int]):
        self.algebra = algebra
        self.members = frozenset(members)

    def __eq__(self, other):
        if not isinstance(other, Filter):
            return NotImplemented
        return self.algebra is other.algebra and self.members == other.members

    def __hash__(self):
        return hash((id(self.algebra), self.members))

    def __contains__(self, x):
        return x in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __le__(self, other: "Filter") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "Filter") -> bool:
        return self.members < other.members

    @property
    def minimum(self) -> int:
        """The least member; raises if there is none."""
        for x in self.members:
            if all(self.algebra.leq(x, y) for y in self.members):
                return x
        raise ContractError("filter has no minimum", sorted(self.members))

    def __repr__(self):
        return f"Filter({sorted(self.members)})"


def filter_validate(L: CubicAlgebra, ids: Iterable[int]) -> Filter:
    s = frozenset(ids)
    if L.one not in s:
        raise FilterValidationError("missing-one", sorted(s))
    for x in s:
        if not 0 <= x < L.size:
            raise FilterValidationError("out-of-range", x)
    for x in s:
        for y in L.up(x):
            if y not in s:
                raise FilterValidationError("not-up-closed", (x, y))
    for x, y in itertools.combinations(sorted(s), 2):
        m = L.meet(x, y)
        if m is None:
            raise FilterValidationError("meet-missing", (x, y))
        if m not in s:
            raise FilterValidationError("meet-not-member", (x, y, m))
    return Filter(L, s)


def is_filter(L: CubicAlgebra, ids: Iterable[int]) -> bool:
    try:
        filter_validate(L, ids)
    except FilterValidationError:
        return False
    return True


def principal(L: CubicAlgebra, g: int) -> Filter:
    """``[g, 1]`` (a filter whenever the meets above ``g`` exist)."""
    return Filter(L, L.up(g))


def is_principal(F: Filter) -> bool:
    L = F.algebra
    return any(F.members == L.up(x) for x in F.members)


def weakly_principal(F: Filter) -> int | None:
    """Some ``g`` with ``F ⊆ [g, 1]``, preferring a member; ``None`` if none."""
    L = F.algebra
    cands = [g for g in L.elements if F.members <= L.up(g)]
    if not cands:
        return None
    inside = [g for g in cands if g in F.members]
    return inside[0] if inside else cands[0]


@algebra_memo
def enumerate_filters(L: CubicAlgebra) -> tuple[Filter, ...]:
    """All filters, found by principal generator (complete in the finite case)."""
    return tuple(principal(L, g) for g in L.elements if is_filter(L, L.up(g)))


def scan_filters(L: CubicAlgebra, limit: int = SCAN_LIMIT) -> tuple[Filter, ...]:
    """Brute-force subset scan; guards the principality assumption on small carriers."""
    if L.size > limit:
        raise ContractError(f"subset scan limited to {limit} elements", L.size)
    rest = [x for x in L.elements if x != L.one]
    out = []
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            s = frozenset(combo) | {L.one}
            if is_filter(L, s):
                out.append(Filter(L, s))
    return tuple(out)


def subfilters(F: Filter) -> list[Filter]:
    return [G for G in enumerate_filters(F.algebra) if G <= F]


# -- lattice operations ---------------------------------------------------------


def _same_algebra(F: Filter, G: Filter) -> CubicAlgebra:
    if F.algebra is not G.algebra:
        raise ContractError("filters belong to different algebras")
    return F.algebra


def filter_intersect(F: Filter, G: Filter) -> Filter:
    _same_algebra(F, G)
    return Filter(F.algebra, F.members & G.members)


def join_set(F: Filter, G: Filter) -> frozenset[int]:
    """``{f v g | f in F, g in G}``."""
    L = _same_algebra(F, G)
    return frozenset(L.join(f, g) for f in F.members for g in G.members)


def fip_witness(F: Filter, G: Filter) -> tuple[int, int] | None:
    """A cross pair without a meet, or ``None`` when F ∪ G has fip."""
    L = _same_algebra(F, G)
    for f in sorted(F.members):
        for g in sorted(G.members):
            if L.meet(f, g) is None:
                return (f, g)
    return None


def filter_vee(F: Filter, G: Filter) -> Filter | None:
    """``{f ∧ g}``, defined iff every cross meet exists; otherwise ``None``."""
    L = _same_algebra(F, G)
    out = set()
    for f in F.members:
        for g in G.members:
            m = L.meet(f, g)
            if m is None:
                return None
            out.add(m)
    return Filter(L, out)


def filter_vee_all(filters: Iterable[Filter], L: CubicAlgebra) -> Filter | None:
    acc = Filter(L, {L.one})
    for F in filters:
        acc = filter_vee(acc, F)
        if acc is None:
            return None
    return acc


def generated_filter(L: CubicAlgebra, ids: Iterable[int]) -> Filter | None:
    """Smallest filter containing ``ids``, or ``None`` if some needed meet is missing."""
    s = set(ids) | {L.one}
    frontier = list(s)
    while frontier:
        new = []
        for x in frontier:
            for y in list(s):
                m = L.meet(x, y)
                if m is None:
                    return None
                if m not in s:
                    s.add(m)
                    new.append(m)
        frontier = new
    up = set()
    for x in s:
        up |= L.up(x)
    return Filter(L, up)


def delta_image(F: Filter) -> Filter:
    """``Δ(1, F)`` taken pointwise."""
    L = F.algebra
    return Filter(L, (L.delta_one(x) for x in F.members))


# -- generation, g-filters and β ------------------------------------------------


@algebra_memo
def _closure(L: CubicAlgebra, ids: frozenset[int]) -> frozenset[int]:
    s = set(ids) | {L.one}
    changed = True
    while changed:
        changed = False
        cur = list(s)
        for a in cur:
            for b in cur:
                for v in (L.join(a, b), L.delta_map.get((a, b))):
                    if v is not None and v not in s:
                        s.add(v)
                        changed = True
    return frozenset(s)


def generated_closure(F: Filter) -> frozenset[int]:
    """Carrier of [[F]]: the closure of F under join and Δ."""
    return _closure(F.algebra, F.members)


def generated_subalgebra(F: Filter) -> tuple[CubicAlgebra, tuple[int, ...]]:
    return F.algebra.subalgebra(generated_closure(F))


def hat_filter(F: Filter) -> frozenset[int]:
    """``{Δ(x, y) | y <= x, x, y in F}``."""
    L = F.algebra
    return frozenset(L.delta(x, y) for x in F.members for y in F.members if L.leq(y, x))


def is_gfilter(F: Filter) -> bool:
    return len(generated_closure(F)) == F.algebra.size


@algebra_memo
def enumerate_gfilters(L: CubicAlgebra) -> tuple[Filter, ...]:
    return tuple(F for F in enumerate_filters(L) if is_gfilter(F))


def similar(F: Filter, G: Filter) -> bool:
    _same_algebra(F, G)
    return generated_closure(F) == generated_closure(G)


@dataclass(frozen=True)
class AlphaBeta:
    """``x = Δ(alpha[x], beta[x])`` with ``beta[x] <= alpha[x]`` both in ``gfilter``,
    for every ``x`` in the generated subalgebra."""

    gfilter: Filter
    alpha: dict = field(hash=False)
    beta: dict = field(hash=False)


@algebra_memo
def alpha_beta(G: Filter) -> AlphaBeta:
    L = G.algebra
    found: dict[int, list[tuple[int, int]]] = {}
    for a in G.members:
        for b in G.members:
            if L.leq(b, a):
                found.setdefault(L.delta(a, b), []).append((a, b))
    alpha, beta = {}, {}
    for x in generated_closure(G):
        pairs = found.get(x, [])
        if len(pairs) != 1:
            raise FalsificationError("alpha-beta-unique", (x, pairs))
        alpha[x], beta[x] = pairs[0]
    return AlphaBeta(G, alpha, beta)


def beta(G: Filter, x: int) -> int:
    return alpha_beta(G).beta[x]


def alpha(G: Filter, x: int) -> int:
    return alpha_beta(G).alpha[x]


@algebra_memo
def filter_lattice(F: Filter) -> ImplicationLattice:
    """F as an implication lattice; lattice id ``i`` is member ``sorted(F)[i]``."""
    L = F.algebra
    mem = sorted(F.members)
    idx = {x: i for i, x in enumerate(mem)}
    try:
        meet = [[idx[L.meet(a, b)] for b in mem] for a in mem]
        imp = [[idx[L.imp(a, b)] for b in mem] for a in mem]
    except KeyError:
        raise ContractError("members are not closed under meet and implication") from None
    join = [[idx[L.join(a, b)] for b in mem] for a in mem]
    return ImplicationLattice(join, meet, imp, idx[L.one], [L.label(x) for x in mem])


@algebra_memo
def presentation_from_gfilter(F: Filter) -> Presentation:
    """``x -> ⟨Δ(1, x) v β(x), x v β(x)⟩`` from [[F]] onto I(F), verified."""
    L = F.algebra
    mem = tuple(sorted(F.members))
    idx = {x: i for i, x in enumerate(mem)}
    base = filter_lattice(F)
    target = IntervalAlgebra(base)
    b = alpha_beta(F).beta
    mapping = {}
    for x in generated_closure(F):
        p = (idx.get(L.join(L.delta_one(x), b[x])), idx.get(L.join(x, b[x])))
        if p not in target.pair_index:
            raise FalsificationError("presentation-pair", (x, p))
        mapping[x] = target.pair_index[p]
    pres = Presentation(L, generated_closure(F), mem, base, target, mapping)
    bad = pres.violations()
    if bad:
        raise FalsificationError(f"presentation-{bad[0][0]}", bad[0][1])
    return pres


def is_filter_algebra(L: CubicAlgebra) -> tuple[bool, tuple[Filter, Presentation] | None]:
    """A filter algebra is exactly one with a g-filter; the witness is the
    first g-filter and its presentation.  An algebra failing the cubic axioms
    is never one, whatever its join closure looks like."""
    if not check_cubic_axioms(L).ok:
        return False, None
    gs = enumerate_gfilters(L)
    if not gs:
        return False, None
    return True, (gs[0], presentation_from_gfilter(gs[0]))


@algebra_memo
def filter_automorphism(F: Filter, G: Filter) -> CubicHom:
    """The composite L ≅ I(F) --I(β_G)--> I(G) ≅ L."""
    L = _same_algebra(F, G)
    if not (is_gfilter(F) and is_gfilter(G)):
        raise ContractError("filter automorphisms need two g-filters")
    pf, pg = presentation_from_gfilter(F), presentation_from_gfilter(G)
    bG = alpha_beta(G).beta
    g_idx = {x: i for i, x in enumerate(pg.members)}
    back = pg.inverse
    out = []
    for x in L.elements:
        a, b = pf.target.pairs[pf(x)]
        a2, b2 = g_idx[bG[pf.members[a]]], g_idx[bG[pf.members[b]]]
        out.append(back[pg.target.pair_id(a2, b2)])
    hom = CubicHom(L, L, tuple(out))
    if not hom.is_isomorphism():
        raise FalsificationError("automorphism", hom.violations()[:1])
    return hom


def intersect_via_beta(F: Filter, G: Filter) -> Filter:
    """``{f v β_G(f) | f in F}``; requires [[F]] = [[G]]."""
    L = _same_algebra(F, G)
    if not similar(F, G):
        raise ContractError("filters generate different subalgebras")
    b = alpha_beta(G).beta
    return Filter(L, (L.join(f, b[f]) for f in F.members))


def filter_shift(F: Filter, g: int) -> Filter:
    """``F_g = {Δ(g v f, f) | f in F}``."""
    L = F.algebra
    return Filter(L, (L.delta(L.join(g, f), f) for f in F.members))


def arrow_element(g: int, F: Filter) -> Filter:
    """``g -> F = {g -> f | f in F}``."""
    L = F.algebra
    return Filter(L, (L.imp(g, f) for f in F.members))


# -- law suites ---------------------------------------------------------------------


def check_principality(L: CubicAlgebra, limit: int = SCAN_LIMIT) -> Report:
    rep = Report("principality")
    filters = enumerate_filters(L)
    prin = rep.law("filters-principal")
    for F in filters:
        prin.check(F.members == L.up(F.minimum), F)
    scan = rep.law("subset-scan-agrees")
    if L.size <= limit:
        scan.check(set(scan_filters(L, limit)) == set(filters), L.size)
    else:
        scan.skip(f"carrier larger than {limit}")
    return rep


def check_filter_operations(L: CubicAlgebra, sampling: Sampling | None = None) -> Report:
    """Intersection and ∨ formulas, lattice laws and weak distributivity."""
    rep = Report("filter-ops")
    fs = enumerate_filters(L)
    inter = rep.law("intersection-join-set")
    vee = rep.law("vee-meet-set")
    comm = rep.law("commutative")
    idem = rep.law("idempotent")
    absorb = rep.law("absorption")
    for F, G in itertools.product(fs, fs):
        I = filter_intersect(F, G)
        inter.check(I.members == join_set(F, G) and is_filter(L, I.members), (F, G))
        V = filter_vee(F, G)
        gen = generated_filter(L, F.members | G.members)
        vee.check((V is None) == (fip_witness(F, G) is not None)
                  and (V is None or (gen is not None and V == gen)), (F, G))
        comm.check(I == filter_intersect(G, F) and V == filter_vee(G, F), (F, G))
        absorb.check(filter_vee(F, I) == F and (V is None or filter_intersect(F, V) == F), (F, G))
    for F in fs:
        idem.check(filter_intersect(F, F) == F and filter_vee(F, F) == F, F)

    assoc = rep.law("associative")
    for F, G, H in assoc.over([fs, fs, fs], sampling):
        ok = filter_intersect(filter_intersect(F, G), H) == filter_intersect(F, filter_intersect(G, H))
        FG, GH = filter_vee(F, G), filter_vee(G, H)
        left = filter_vee(FG, H) if FG is not None else None
        right = filter_vee(F, GH) if GH is not None else None
        if left is not None and right is not None:
            ok = ok and left == right
        assoc.check(ok, (F, G, H))
    rep.extend(check_distributivity(L, sampling))
    return rep


def check_distributivity(L: CubicAlgebra, sampling: Sampling | None = None) -> Report:
    """Weak distributivity over subfilters G, H, K of each filter F, in both
    directions: ``G ∩ (H ∨ K) = (G ∩ H) ∨ (G ∩ K)`` and its dual."""
    rep = Report("distributivity")
    law = rep.law("weak-distributivity")
    dual = rep.law("weak-distributivity-dual")
    triples = [(F, G, H, K) for F in enumerate_filters(L)
               for G, H, K in itertools.product(subfilters(F), repeat=3)]
    for F, G, H, K in law.over_list(triples, sampling):
        HK, GH, GK = filter_vee(H, K), filter_vee(G, H), filter_vee(G, K)
        if None in (HK, GH, GK):
            law.check(False, (F, G, H, K))
            continue
        law.check(filter_intersect(G, HK) == filter_vee(filter_intersect(G, H), filter_intersect(G, K)),
                  (F, G, H, K))
        dual.check(filter_vee(G, filter_intersect(H, K)) == filter_intersect(GH, GK), (F, G, H, K))
    dual.mode, dual.seed = law.mode, law.seed
    return rep


def literal_distributivity_witness(L: CubicAlgebra) -> tuple[Filter, ...] | None:
    """First subfilter triple where ``G ∩ (H ∨ K) = (G ∨ H) ∩ (G ∨ K)`` fails."""
    for F in enumerate_filters(L):
        for G, H, K in itertools.product(subfilters(F), repeat=3):
            HK, GH, GK = filter_vee(H, K), filter_vee(G, H), filter_vee(G, K)
            if filter_intersect(G, HK) != filter_intersect(GH, GK):
                return (F, G, H, K)
    return None


def check_generation(L: CubicAlgebra) -> Report:
    """[[F]] = F-hat, α/β uniqueness and transfer, presentations, automorphisms."""
    rep = Report("generation")
    fs = enumerate_filters(L)
    hat = rep.law("hat-equals-generated")
    for F in fs:
        hat.check(hat_filter(F) == generated_closure(F), F)

    gs = enumerate_gfilters(L)
    ab = rep.law("alpha-beta-unique")
    pres = rep.law("presentation-iso")
    for F in fs:
        try:
            alpha_beta(F)
            ab.check(True)
        except FalsificationError as exc:
            ab.check(False, exc.witness)
    for G in gs:
        try:
            p = presentation_from_gfilter(G)
            pres.check(len(p.domain) == L.size and p.as_hom().is_isomorphism(), G)
        except FalsificationError as exc:
            pres.check(False, (G, exc.law, exc.witness))

    iso = rep.law("beta-implication-iso")
    hom = rep.law("alpha-implication-hom")
    inv = rep.law("beta-round-trip")
    for F, G in itertools.product(gs, gs):
        bF, aF, bG = alpha_beta(F).beta, alpha_beta(F).alpha, alpha_beta(G).beta
        img = {bF[g] for g in G.members}
        ok = img == F.members and len(img) == len(G)
        ok_a = True
        for g, h in itertools.product(sorted(G.members), repeat=2):
            ok = ok and bF[L.imp(g, h)] == L.imp(bF[g], bF[h]) and bF[L.join(g, h)] == L.join(bF[g], bF[h])
            ok_a = ok_a and aF[L.imp(g, h)] == L.imp(aF[g], aF[h])
        iso.check(ok, (G, F))
        hom.check(ok_a, (G, F))
        inv.check(all(bF[bG[f]] == f for f in F.members), (F, G))

    auto = rep.law("filter-automorphism")
    via = rep.law("intersect-via-beta")
    for F, G in itertools.product(gs, gs):
        phi = filter_automorphism(F, G)
        bG = alpha_beta(G).beta
        auto.check({phi(f) for f in F.members} == G.members
                   and all(phi(f) == bG[f] for f in F.members), (F, G))
    for F, G in itertools.product(fs, fs):
        if similar(F, G):
            via.check(intersect_via_beta(F, G) == filter_intersect(F, G), (F, G))

    fa = rep.law("filter-algebra-iff-gfilter")
    ok, wit = is_filter_algebra(L)
    fa.check(ok == bool(gs) and (wit is None or wit[1].as_hom().is_isomorphism()), ok)
    return rep


def check_shift_laws(L: CubicAlgebra, sampling: Sampling | None = None) -> Report:
    """The F_g construction: filter-ness, generation, intersections, idempotence."""
    rep = Report("shift")
    if not is_mr(L):
        for name in ("shift-filter", "shift-intersection", "shift-converse", "shift-idempotent"):
            rep.law(name).skip("algebra is not MR")
        return rep
    fs = enumerate_filters(L)
    E = list(L.elements)

    is_f = rep.law("shift-filter")
    one = rep.law("shift-by-one")
    prin = rep.law("shift-principal")
    inter = rep.law("shift-intersection")
    member = rep.law("shift-member-intersection")
    arrow = rep.law("arrow-element")
    for F, g in is_f.over([fs, E], sampling):
        Fg = filter_shift(F, g)
        is_f.check(is_filter(L, Fg.members) and similar(Fg, F), (F, g))
        inter.check(filter_intersect(F, Fg) == filter_intersect(principal(L, g), F), (F, g))
        if g in F:
            member.check(filter_intersect(F, Fg) == principal(L, g), (F, g))
        A = arrow_element(g, F)
        arrow.check(is_filter(L, A.members) and A == filter_intersect(delta_image(Fg), F), (F, g))
    for F in fs:
        one.check(filter_shift(F, L.one) == delta_image(F), F)
    for h, g in itertools.product(E, E):
        if is_filter(L, L.up(h)):
            prin.check(filter_shift(principal(L, h), g) == principal(L, L.delta(L.join(g, h), h)), (h, g))

    conv = rep.law("shift-converse")
    for F, G in conv.over([fs, fs], sampling):
        if similar(F, G):
            I = filter_intersect(F, G)
            if is_principal(I):
                conv.check(G == filter_shift(F, I.minimum), (F, G))

    idem = rep.law("shift-idempotent")
    absorb = rep.law("shift-join")
    triples = [(F, g, h) for F in fs for g in F.members for h in F.members]
    for F, g, h in idem.over_list(triples, sampling):
        Fg = filter_shift(F, g)
        idem.check(filter_shift(Fg, g) == F, (F, g))
        absorb.check(filter_shift(Fg, h) == filter_shift(Fg, L.join(g, h)), (F, g, h))
    absorb.mode, absorb.seed = idem.mode, idem.seed

    weak = rep.law("weakly-principal-minimum")
    for F in fs:
        w = weakly_principal(F)
        weak.check(w is not None and w == F.minimum, F)
    return rep
