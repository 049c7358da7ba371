"""Finite cubic algebras: tables, axiom checkers, ≼/≃, meets, face maps, homs.

Order is always derived from the join table (``x <= y`` iff ``x v y == y``).
Δ is a partial table keyed by ``(y, x)`` and must be defined exactly when
``x <= y``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import ContractError, MRViolationError, StructureError
from .laws import Report


def algebra_memo(fn):
    """Memoize ``fn`` on the algebra object its first argument belongs to.

    The first argument is an algebra or anything with an ``algebra`` attribute.
    Keeping the cache on the object (rather than in a global table keyed by
    table equality) means equal-but-distinct algebras never share results.
    """
    key = fn.__qualname__

    @functools.wraps(fn)
    def wrapper(*args):
        owner = getattr(args[0], "algebra", args[0])
        cache = owner.__dict__.setdefault("_memo", {}).setdefault(key, {})
        try:
            return cache[args]
        except KeyError:
            out = cache[args] = fn(*args)
            return out
    return wrapper


class CubicAlgebra:
    """Carrier ``0..size-1`` with a total join table, a top ``one`` and partial Δ."""

    def __init__(self, join: Sequence[Sequence[int]], one: int,
                 delta: Mapping[tuple[int, int], int], tag: str = "imported",
                 labels: Sequence[str] | None = None):
        self.join_table = tuple(tuple(int(v) for v in row) for row in join)
        n = len(self.join_table)
        if any(len(row) != n for row in self.join_table):
            raise StructureError("join table is not square")
        if any(not 0 <= v < n for row in self.join_table for v in row):
            raise StructureError("join table entry out of range")
        self.one = int(one)
        if not 0 <= self.one < n:
            raise StructureError("one out of range", one)
        self.delta_map = {(int(y), int(x)): int(v) for (y, x), v in delta.items()}
        for (y, x), v in self.delta_map.items():
            if not (0 <= y < n and 0 <= x < n and 0 <= v < n):
                raise StructureError("delta entry out of range", (y, x, v))
        self.tag = tag
        self.labels = tuple(labels) if labels is not None else None

    # -- basic access -----------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.join_table)

    @property
    def elements(self) -> range:
        return range(self.size)

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def leq(self, x: int, y: int) -> bool:
        return self.join_table[x][y] == y

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.join_table[x][y] == y

    def delta(self, y: int, x: int) -> int:
        try:
            return self.delta_map[(y, x)]
        except KeyError:
            raise ContractError(f"Δ({y}, {x}) undefined", (y, x)) from None

    def delta_one(self, x: int) -> int:
        return self.delta_map[(self.one, x)]

    def imp(self, g: int, f: int) -> int:
        """Element implication ``g -> f = Δ(1, Δ(g v f, f)) v f``."""
        return self.join(self.delta(self.one, self.delta(self.join(g, f), f)), f)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    # -- derived order data -----------------------------------------------

    @cached_property
    def _down_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << x for x in self.elements if self.leq(x, y)) for y in self.elements)

    @cached_property
    def _meet_table(self) -> tuple[tuple[int | None, ...], ...]:
        by_mask = {m: y for y, m in enumerate(self._down_masks)}
        d = self._down_masks
        return tuple(tuple(by_mask.get(d[a] & d[b]) for b in self.elements) for a in self.elements)

    def meet(self, a: int, b: int) -> int | None:
        """Greatest lower bound, or ``None`` when it does not exist."""
        return self._meet_table[a][b]

    @cached_property
    def up_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(y for y in self.elements if self.leq(x, y)) for x in self.elements)

    def up(self, x: int) -> frozenset[int]:
        return self.up_sets[x]

    def down(self, x: int) -> frozenset[int]:
        m = self._down_masks[x]
        return frozenset(y for y in self.elements if m >> y & 1)

    @cached_property
    def atoms(self) -> tuple[int, ...]:
        """Minimal elements."""
        return tuple(x for x in self.elements if self._down_masks[x] == 1 << x)

    def comparable_pairs(self) -> Iterable[tuple[int, int]]:
        """All ``(y, x)`` with ``x <= y``."""
        return ((y, x) for y in self.elements for x in self.down(y))

    # -- derived algebras ---------------------------------------------------

    def with_delta(self, y: int, x: int, value: int) -> "CubicAlgebra":
        d = dict(self.delta_map)
        d[(y, x)] = value
        return CubicAlgebra(self.join_table, self.one, d, tag="mutant", labels=self.labels)

    def with_join(self, x: int, y: int, value: int) -> "CubicAlgebra":
        rows = [list(r) for r in self.join_table]
        rows[x][y] = rows[y][x] = value
        return CubicAlgebra(rows, self.one, self.delta_map, tag="mutant", labels=self.labels)

    def relabel(self, perm: Sequence[int]) -> "CubicAlgebra":
        """Copy with element ``x`` renamed ``perm[x]``; the result is a plain table."""
        inv = [0] * self.size
        for old, new in enumerate(perm):
            inv[new] = old
        join = [[perm[self.join(inv[a], inv[b])] for b in self.elements] for a in self.elements]
        delta = {(perm[y], perm[x]): perm[v] for (y, x), v in self.delta_map.items()}
        return CubicAlgebra(join, perm[self.one], delta, tag="imported")

    def subalgebra(self, ids: Iterable[int]) -> tuple["CubicAlgebra", tuple[int, ...]]:
        """Restriction to a join/Δ-closed subset, re-indexed densely.

        Returns the subalgebra and the tuple of original ids (new id -> old id).
        """
        old = tuple(sorted(ids))
        new = {x: i for i, x in enumerate(old)}
        try:
            join = [[new[self.join(a, b)] for b in old] for a in old]
            delta = {(new[y], new[x]): new[self.delta(y, x)]
                     for y in old for x in old if self.leq(x, y)}
        except KeyError as exc:
            raise ContractError("subset is not closed under join and Δ", exc.args[0]) from None
        labels = [self.label(x) for x in old] if self.labels else None
        return CubicAlgebra(join, new[self.one], delta, tag="subalgebra", labels=labels), old

    def __eq__(self, other):
        if not isinstance(other, CubicAlgebra):
            return NotImplemented
        return (self.one == other.one and self.join_table == other.join_table
                and self.delta_map == other.delta_map)

    def __hash__(self):
        return hash((self.size, self.one, self.join_table))

    def __repr__(self):
        return f"{type(self).__name__}(size={self.size}, tag={self.tag!r})"


def one_element_algebra() -> CubicAlgebra:
    return CubicAlgebra([[0]], 0, {(0, 0): 0}, tag="trivial")


def check_structure(L: CubicAlgebra) -> None:
    """Raise :class:`StructureError` if Δ is defined on an incomparable pair."""
    for (y, x) in L.delta_map:
        if not L.leq(x, y):
            raise StructureError(f"Δ({y}, {x}) defined on an incomparable pair", (y, x))


# -- axiom checkers -------------------------------------------------------


def _semilattice(L: CubicAlgebra, rep: Report) -> bool:
    E = list(L.elements)
    j = L.join
    idem, comm, assoc, top = (rep.law(n) for n in
                              ("join-idempotent", "join-commutative", "join-associative", "one-is-top"))
    for a in E:
        idem.check(j(a, a) == a, a)
        top.check(j(a, L.one) == L.one, a)
    for a, b in itertools.product(E, E):
        comm.check(j(a, b) == j(b, a), (a, b))
    for a, b, c in itertools.product(E, E, E):
        assoc.check(j(j(a, b), c) == j(a, j(b, c)), (a, b, c))
    return all(r.failures == 0 for r in (idem, comm, assoc, top))


def check_cubic_axioms(L: CubicAlgebra) -> Report:
    """Exhaustively test the semilattice laws and cubic axioms (a)-(f).

    A Δ that is undefined where an axiom needs it counts as a violation of
    that axiom.  Raises :class:`StructureError` for Δ on incomparable pairs.
    """
    rep = Report("cubic")
    if not _semilattice(L, rep):
        for name in "abcdef":
            rep.law(f"axiom-{name}").skip("join is not a semilattice with top")
        return rep
    check_structure(L)
    d = L.delta_map.get
    j, leq, one = L.join, L.leq, L.one
    E = list(L.elements)

    dom = rep.law("delta-domain")
    for y, x in L.comparable_pairs():
        dom.check((y, x) in L.delta_map, (y, x))

    ax = {k: rep.law(f"axiom-{k}") for k in "abcdef"}
    for y, x in L.comparable_pairs():
        v = d((y, x))
        ax["a"].check(v is not None and j(v, x) == y, (x, y))
        ax["c"].check(v is not None and d((y, v)) == x, (x, y))
    for z in E:
        for y in L.down(z):
            for x in L.down(y):
                zx, zy, yx = d((z, x)), d((z, y)), d((y, x))
                ax["d"].check(None not in (zx, zy) and leq(zx, zy), (x, y, z))
                lhs = d((z, yx)) if yx is not None else None
                rhs = d((zy, zx)) if None not in (zx, zy) else None
                ax["b"].check(lhs is not None and lhs == rhs, (x, y, z))

    def dot(x, y):
        inner = d((j(x, y), y))
        outer = d((one, inner)) if inner is not None else None
        return j(outer, y) if outer is not None else None

    for x, y in itertools.product(E, E):
        xy = dot(x, y)
        ax["e"].check(xy is not None and dot(xy, y) == j(x, y), (x, y))
    for x, y, z in itertools.product(E, E, E):
        yz, xz = dot(y, z), dot(x, z)
        ok = None not in (yz, xz) and dot(x, yz) is not None and dot(x, yz) == dot(y, xz)
        ax["f"].check(ok, (x, y, z))
    return rep


def check_mr_axiom(L: CubicAlgebra) -> Report:
    """For all x and a, b < x: Δ(x, a) v b < x iff a ∧ b does not exist."""
    rep = Report("mr")
    law = rep.law("mr-axiom")
    for x in L.elements:
        below = [a for a in L.down(x) if a != x]
        for a, b in itertools.product(below, below):
            v = L.delta_map.get((x, a))
            lhs = v is not None and L.lt(L.join(v, b), x)
            law.check(lhs == (L.meet(a, b) is None), (x, a, b))
    return rep


def is_mr(L: CubicAlgebra) -> bool:
    return check_mr_axiom(L).ok


# -- relations and derived operations ---------------------------------------


def preceq(L: CubicAlgebra, a: int, b: int) -> bool:
    return L.leq(L.delta(L.join(a, b), a), b)


def simeq(L: CubicAlgebra, a: int, b: int) -> bool:
    return L.delta(L.join(a, b), a) == b


def meet_if_exists(L: CubicAlgebra, a: int, b: int) -> int | None:
    return L.meet(a, b)


def face_map(L: CubicAlgebra, a: int, b: int, x: int) -> int:
    """``f_ab(x) = (x v b) ∧ (Δ(1, x) v b)``, mapping ``[a, 1]`` onto ``[b, 1]``."""
    atoms = L.atoms
    if a not in atoms or b not in atoms:
        raise ContractError("face maps are indexed by atoms", (a, b))
    if not L.leq(a, x):
        raise ContractError(f"{x} is not above {a}", (a, x))
    p, q = L.join(x, b), L.join(L.delta_one(x), b)
    m = L.meet(p, q)
    if m is None:
        raise MRViolationError(f"meet of {p} and {q} does not exist", (p, q))
    return m


def check_prop_triv_suite(L: CubicAlgebra) -> Report:
    """≼ with an existing meet forces ≤; ≃ with an existing meet forces =;
    MR iff every pair has a common ≼-lower bound; and the meet form of ≼."""
    rep = Report("prop-triv")
    E = list(L.elements)
    pre = [[preceq(L, a, b) for b in E] for a in E]
    le = rep.law("preceq-meet-implies-leq")
    eq = rep.law("simeq-meet-implies-eq")
    form = rep.law("preceq-meet-form")
    for p, q in itertools.product(E, E):
        m = L.meet(p, q)
        if m is not None:
            le.check(not pre[p][q] or L.leq(p, q), (p, q))
            eq.check(not simeq(L, p, q) or p == q, (p, q))
        rhs = L.meet(L.join(q, p), L.join(q, L.delta_one(p)))
        form.check(pre[p][q] == (rhs == q), (p, q))

    common = all(any(pre[z][x] and pre[z][y] for z in E) for x, y in itertools.product(E, E))
    mr = rep.law("mr-iff-common-lower-bound")
    mr.check(is_mr(L) == common, {"mr": is_mr(L), "common_lower_bound": common})
    return rep


def check_vertex_interval_iso(L: CubicAlgebra) -> Report:
    """In an atomic MR-algebra, ``x -> Δ(x, v)`` maps ``[v, 1]`` onto the atoms,
    inverse ``w -> w v v``."""
    rep = Report("vertex-interval")
    law = rep.law("vertex-interval-iso")
    atoms = set(L.atoms)
    for v in L.atoms:
        up = sorted(L.up(v))
        image = [L.delta(x, v) for x in up]
        law.check(set(image) == atoms and len(image) == len(atoms), v)
        for x, w in zip(up, image):
            law.check(L.join(w, v) == x, (v, x))
    atomic = rep.law("atomic")
    for x in L.elements:
        atomic.check(any(L.leq(a, x) for a in atoms), x)
    return rep


# -- homomorphisms ----------------------------------------------------------


@dataclass(frozen=True)
class CubicHom:
    source: CubicAlgebra
    target: CubicAlgebra
    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def violations(self) -> list[tuple[str, object]]:
        S, T, f = self.source, self.target, self.mapping
        out = []
        if len(f) != S.size:
            return [("domain", len(f))]
        if f[S.one] != T.one:
            out.append(("one", S.one))
        for a, b in itertools.product(S.elements, S.elements):
            if f[S.join(a, b)] != T.join(f[a], f[b]):
                out.append(("join", (a, b)))
        for (y, x), v in S.delta_map.items():
            if T.delta_map.get((f[y], f[x])) != f[v]:
                out.append(("delta", (y, x)))
        return out

    def is_hom(self) -> bool:
        return not self.violations()

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def is_embedding(self) -> bool:
        return self.is_injective() and self.is_hom()

    def is_isomorphism(self) -> bool:
        return self.is_embedding() and len(set(self.mapping)) == self.target.size

    def inverse(self) -> "CubicHom":
        if not self.is_isomorphism():
            raise ContractError("only isomorphisms have inverses")
        inv = [0] * self.target.size
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return CubicHom(self.target, self.source, tuple(inv))

    def compose(self, after: "CubicHom") -> "CubicHom":
        """``after ∘ self``."""
        return CubicHom(self.source, after.target, tuple(after(self(x)) for x in self.source.elements))


def identity_hom(L: CubicAlgebra) -> CubicHom:
    return CubicHom(L, L, tuple(L.elements))


def check_full_embedding(f: CubicHom) -> bool:
    """Every non-top target element lies below the image of a non-top source element."""
    if not f.is_embedding():
        raise ContractError("not a cubic embedding", f.violations()[:1] or "non-injective")
    S, T = f.source, f.target
    images = [f(l) for l in S.elements if l != S.one]
    return all(any(T.leq(m, i) for i in images) for m in T.elements if m != T.one)
