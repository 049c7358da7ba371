"""Interval algebras I(F), the enveloping Boolean algebra B_F and the maps
between them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .cubic import CubicAlgebra, CubicHom
from .errors import ContractError, FalsificationError
from .lattice import (ImplicationLattice, check_lattice_laws, is_ultrafilter,
                      mk_boolean_algebra)


class IntervalAlgebra(CubicAlgebra):
    """I(F): pairs ⟨a, b⟩ with a v b = 1, ids in lexicographic pair order."""

    def __init__(self, base: ImplicationLattice):
        pairs = tuple((a, b) for a in base.elements for b in base.elements
                      if base.join(a, b) == base.top)
        index = {p: i for i, p in enumerate(pairs)}
        join = [[index[(base.join(a, c), base.join(b, d))] for (c, d) in pairs]
                for (a, b) in pairs]
        m, imp = base.meet, base.imp
        delta = {}
        for y, (a, b) in enumerate(pairs):
            for x, (c, d) in enumerate(pairs):
                if base.leq(c, a) and base.leq(d, b):
                    delta[(y, x)] = index[(m(a, imp(b, d)), m(b, imp(a, c)))]
        labels = [f"<{base.label(a)},{base.label(b)}>" for a, b in pairs]
        super().__init__(join, index[(base.top, base.top)], delta, tag="interval", labels=labels)
        self.base = base
        self.pairs = pairs
        self.pair_index = index

    def pair_id(self, a: int, b: int) -> int:
        return self.pair_index[(a, b)]


def build_interval_algebra(I: ImplicationLattice) -> IntervalAlgebra:
    return IntervalAlgebra(I)


@lru_cache(maxsize=None)
def interval_algebra(n: int) -> IntervalAlgebra:
    """I(B_n) over the powerset algebra on ``n`` atoms."""
    return IntervalAlgebra(mk_boolean_algebra(n))


def embed_e(IA: IntervalAlgebra) -> tuple[int, ...]:
    """``a -> ⟨1, a⟩`` as an id map from the base lattice into I(base)."""
    base = IA.base
    return tuple(IA.pair_id(base.top, a) for a in base.elements)


def atoms_of_interval_algebra(IA: IntervalAlgebra) -> list[int]:
    """The vertices ⟨comp a, a⟩, one per base element."""
    base = IA.base
    return [IA.pair_id(base.complement(a), a) for a in base.elements]


# -- the enveloping Boolean algebra -------------------------------------------


def build_enveloping_boolean(F: ImplicationLattice) -> tuple[ImplicationLattice, tuple[int, ...]]:
    """B_F = F x {0, 1} built from the case tables, then verified Boolean.

    Element ⟨f, i⟩ has id ``2 * f + i``.  Returns ``(B_F, iota)`` where
    ``iota[f]`` is the id of ⟨f, 1⟩.
    """
    j, m, imp = F.join, F.meet, F.imp
    elems = [(f, i) for f in F.elements for i in (0, 1)]

    def eid(f, i):
        return 2 * f + i

    def join(p, q):
        (a, i), (b, k) = p, q
        if i == k == 1:
            return eid(j(a, b), 1)
        if i == k == 0:
            return eid(m(a, b), 0)
        if i == 1:
            return eid(imp(b, a), 1)
        return eid(imp(a, b), 1)

    def meet(p, q):
        (a, i), (b, k) = p, q
        if i == k == 1:
            return eid(m(a, b), 1)
        if i == k == 0:
            return eid(j(a, b), 0)
        if i == 1:
            return eid(imp(a, b), 0)
        return eid(imp(b, a), 0)

    def comp(p):
        return eid(p[0], 1 - p[1])

    join_t = [[join(p, q) for q in elems] for p in elems]
    meet_t = [[meet(p, q) for q in elems] for p in elems]
    imp_t = [[join_t[comp(p)][eid(*q)] for q in elems] for p in elems]
    labels = [f"<{F.label(f)},{i}>" for f, i in elems]
    BF = ImplicationLattice(join_t, meet_t, imp_t, eid(F.top, 1), labels)

    rep = check_lattice_laws(BF)
    if not rep.ok:
        bad = rep.failures()[0]
        raise FalsificationError(f"envelope-{bad.law}", bad.witness)
    if BF.bottom != eid(F.top, 0):
        raise FalsificationError("envelope-zero", BF.bottom)
    for p in elems:
        if BF.complement(eid(*p)) != comp(p):
            raise FalsificationError("envelope-complement", p)

    iota = tuple(eid(f, 1) for f in F.elements)
    for a, b in itertools.product(F.elements, F.elements):
        if (iota[imp(a, b)] != BF.imp(iota[a], iota[b]) or iota[j(a, b)] != BF.join(iota[a], iota[b])
                or iota[m(a, b)] != BF.meet(iota[a], iota[b])):
            raise FalsificationError("iota-implication-embedding", (a, b))
    if not is_ultrafilter(BF, frozenset(iota)):
        raise FalsificationError("iota-ultrafilter", iota)
    return BF, iota


@dataclass(frozen=True)
class Envelope:
    """I(F) -> I(B_F) together with the pieces it is built from."""

    lattice: ImplicationLattice
    boolean: ImplicationLattice
    iota: tuple[int, ...]
    source: IntervalAlgebra
    target: IntervalAlgebra
    hom: CubicHom = field(repr=False)


def lift_iota(F: ImplicationLattice) -> Envelope:
    """``⟨a, b⟩ -> ⟨⟨a, 1⟩, ⟨b, 1⟩⟩``; verified embedding with the commuting square
    ``e_{B_F} ∘ iota = I(iota) ∘ e_F``."""
    BF, iota = build_enveloping_boolean(F)
    src, tgt = IntervalAlgebra(F), IntervalAlgebra(BF)
    mapping = tuple(tgt.pair_id(iota[a], iota[b]) for a, b in src.pairs)
    hom = CubicHom(src, tgt, mapping)
    if not hom.is_embedding():
        raise FalsificationError("lift-iota-embedding", hom.violations()[:1])
    e_src, e_tgt = embed_e(src), embed_e(tgt)
    for f in F.elements:
        if e_tgt[iota[f]] != hom(e_src[f]):
            raise FalsificationError("lift-iota-square", f)
    return Envelope(F, BF, iota, src, tgt, hom)


# -- presentations ------------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    """A cubic isomorphism from the subalgebra ``domain`` of ``source`` onto I(base).

    ``base`` is indexed by ``members`` (lattice id ``i`` is source element
    ``members[i]``).
    """

    source: CubicAlgebra
    domain: frozenset[int]
    members: tuple[int, ...]
    base: ImplicationLattice
    target: IntervalAlgebra
    mapping: dict = field(hash=False, compare=False)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    @property
    def inverse(self) -> dict[int, int]:
        return {v: k for k, v in self.mapping.items()}

    def violations(self) -> list[tuple[str, object]]:
        S, T, f = self.source, self.target, self.mapping
        out = []
        if set(f) != set(self.domain):
            out.append(("domain", sorted(set(self.domain) ^ set(f))))
            return out
        if sorted(f.values()) != list(T.elements):
            out.append(("bijective", None))
        if f.get(S.one) != T.one:
            out.append(("one", S.one))
        dom = sorted(self.domain)
        for a, b in itertools.product(dom, dom):
            if f.get(S.join(a, b)) != T.join(f[a], f[b]):
                out.append(("join", (a, b)))
            if S.leq(b, a) and f.get(S.delta(a, b)) != T.delta_map.get((f[a], f[b])):
                out.append(("delta", (a, b)))
        return out

    def as_hom(self) -> CubicHom:
        if len(self.domain) != self.source.size:
            raise ContractError("presentation of a proper subalgebra has no total hom")
        return CubicHom(self.source, self.target, tuple(self.mapping[x] for x in self.source.elements))
