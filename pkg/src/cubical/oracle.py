"""Element-level oracle for the set-level filter operations.

Every filter of a finite filter algebra is ``[m, 1]`` for its minimum ``m``, so
each filter operation has a counterpart on generators:

    F ∩ G      <->  [f v g, 1]
    F ∨ G      <->  [f ∧ g, 1], undefined exactly when f ∧ g is
    G -> F     <->  [g -> f, 1]
    Δ(G, F)    <->  [Δ(g, f), 1]
    F_h        <->  [Δ(h v f, f), 1]
    h -> F     <->  [h -> f, 1]
    Δ(1, F)    <->  [Δ(1, f), 1]
    cl(G)      <->  [(g -> f) -> f, 1]

The oracle recomputes each side independently and reports any divergence.
"""

from __future__ import annotations

import itertools

from .boolean_filters import closure, filter_delta, rel_complement
from .cubic import CubicAlgebra
from .errors import CubicalError
from .filters import (arrow_element, delta_image, enumerate_filters, filter_intersect,
                      filter_shift, filter_vee)
from .laws import Report


def principal_filters(L: CubicAlgebra) -> dict[int, frozenset[int]]:
    """Generator -> up-set, for every element whose up-set is meet-closed."""
    out = {}
    for x in L.elements:
        up = L.up(x)
        if all(L.meet(a, b) in up for a, b in itertools.combinations(up, 2)):
            out[x] = up
    return out


def _attempt(fn, *args):
    try:
        return fn(*args)
    except CubicalError as exc:
        return exc


def oracle_cross_check(L: CubicAlgebra) -> Report:
    rep = Report("oracle")
    up = L.up
    gens = principal_filters(L)
    fs = enumerate_filters(L)
    by_min = {F.minimum if F.members else None: F for F in fs}

    law = rep.law("filters-are-principal")
    law.check({F.members for F in fs} == set(gens.values()) and len(by_min) == len(fs),
              sorted(sorted(F.members) for F in fs))

    def agree(name, got, gen, witness):
        want = None if gen is None else up(gen)
        have = got if got is None or isinstance(got, Exception) else got.members
        rep_laws[name].check(have == want, witness)

    names = ("intersection", "vee", "complement", "delta", "closure", "shift",
             "arrow-element", "delta-one")
    rep_laws = {n: rep.law(n) for n in names}
    pairs = [(by_min[f], f, by_min[g], g) for f in gens for g in gens]
    for F, f, G, g in pairs:
        agree("intersection", filter_intersect(F, G), L.join(f, g), (f, g))
        agree("vee", filter_vee(F, G), L.meet(f, g), (f, g))
        if L.leq(f, g):
            agree("complement", _attempt(rel_complement, G, F), L.imp(g, f), (g, f))
            agree("delta", _attempt(filter_delta, G, F), L.delta(g, f), (g, f))
            agree("closure", _attempt(closure, G, F), L.imp(L.imp(g, f), f), (g, f))
    for (f, F), h in itertools.product(((f, by_min[f]) for f in gens), L.elements):
        agree("shift", filter_shift(F, h), L.delta(L.join(h, f), f), (h, f))
        agree("arrow-element", arrow_element(h, F), L.imp(h, f), (h, f))
    for f in gens:
        agree("delta-one", delta_image(by_min[f]), L.delta_one(f), f)
    return rep


def divergences(L: CubicAlgebra) -> list[tuple[str, object]]:
    return [(r.law, r.witness) for r in oracle_cross_check(L).failures()]
