"""Finite Boolean algebras and implication lattices.

Every finite implication lattice has a bottom and is therefore Boolean, so the
table-backed :class:`ImplicationLattice` is the only general structure needed.
:class:`BooleanAlgebra` is the powerset special case with bitmask ids: bit ``i``
of an id is atom ``i``, id 0 is bottom and id ``2**n - 1`` is top.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import SizeError
from .laws import Report

#: Largest atom count accepted by :func:`mk_boolean_algebra`.  Filter-pair
#: enumeration downstream grows like 9**n, so the cap is kept small.
MAX_ATOMS = 5

Table = tuple[tuple[int, ...], ...]


def _freeze(rows: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


class ImplicationLattice:
    """A finite lattice with a relative implication ``imp(a, b)`` and a top."""

    def __init__(self, join, meet, imp, top: int, labels: Sequence[str] | None = None):
        self.join_table = _freeze(join)
        self.meet_table = _freeze(meet)
        self.imp_table = _freeze(imp)
        self.top = int(top)
        n = len(self.join_table)
        for t in (self.join_table, self.meet_table, self.imp_table):
            if len(t) != n or any(len(row) != n for row in t):
                raise ValueError("operation tables must be square and of equal size")
        if not 0 <= self.top < n:
            raise ValueError("top out of range")
        self.labels = tuple(labels) if labels is not None else None

    @property
    def size(self) -> int:
        return len(self.join_table)

    @property
    def elements(self) -> range:
        return range(self.size)

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def imp(self, a: int, b: int) -> int:
        return self.imp_table[a][b]

    def leq(self, a: int, b: int) -> bool:
        return self.join_table[a][b] == b

    @cached_property
    def bottom(self) -> int:
        b = self.top
        for x in self.elements:
            b = self.meet(b, x)
        return b

    def complement(self, a: int) -> int:
        return self.imp(a, self.bottom)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def _key(self):
        return (self.join_table, self.meet_table, self.imp_table, self.top)

    def __eq__(self, other):
        if not isinstance(other, ImplicationLattice):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash((self.size, self.top, self.join_table))

    def __repr__(self):
        return f"{type(self).__name__}(size={self.size})"


class BooleanAlgebra(ImplicationLattice):
    """The powerset algebra on ``atom_count`` atoms."""

    def __init__(self, atom_count: int):
        n = 1 << atom_count
        top = n - 1
        ids = range(n)
        super().__init__(
            join=[[a | b for b in ids] for a in ids],
            meet=[[a & b for b in ids] for a in ids],
            imp=[[(top ^ a) | b for b in ids] for a in ids],
            top=top,
        )
        self.atom_count = atom_count

    def complement(self, a: int) -> int:
        return self.top ^ a

    @property
    def bottom(self) -> int:
        return 0

    def __repr__(self):
        return f"BooleanAlgebra(atoms={self.atom_count})"


def mk_boolean_algebra(n: int) -> BooleanAlgebra:
    if not 0 <= n <= MAX_ATOMS:
        raise SizeError(f"atom count {n} outside [0, {MAX_ATOMS}]", n)
    return BooleanAlgebra(n)


def as_implication_lattice(B: ImplicationLattice) -> ImplicationLattice:
    """View ``B`` through its implication ``a -> b = comp(a) v b``."""
    ids = B.elements
    imp = [[B.join(B.complement(a), b) for b in ids] for a in ids]
    return ImplicationLattice(B.join_table, B.meet_table, imp, B.top, B.labels)


@dataclass(frozen=True)
class LatticeFilter:
    members: frozenset[int]
    generator: int
    ultra: bool


def principal_up(lat: ImplicationLattice, a: int) -> frozenset[int]:
    return frozenset(x for x in lat.elements if lat.leq(a, x))


def is_lattice_filter(lat: ImplicationLattice, s: frozenset[int]) -> bool:
    if not s:
        return False
    for x in s:
        if any(lat.leq(x, y) and y not in s for y in lat.elements):
            return False
    return all(lat.meet(x, y) in s for x in s for y in s)


def is_ultrafilter(lat: ImplicationLattice, s: frozenset[int]) -> bool:
    """Proper filter containing exactly one of each complementary pair."""
    if not is_lattice_filter(lat, s) or lat.bottom in s:
        return False
    return all((x in s) != (lat.complement(x) in s) for x in lat.elements)


def enumerate_filters(lat: ImplicationLattice) -> list[LatticeFilter]:
    """All filters of a finite lattice; each is the principal up-set of its meet."""
    out = []
    for a in lat.elements:
        s = principal_up(lat, a)
        out.append(LatticeFilter(s, a, is_ultrafilter(lat, s)))
    return out


def check_lattice_laws(lat: ImplicationLattice, boolean: bool = True) -> Report:
    """Exhaustive lattice, distributive, implication and (optionally) complement laws."""
    rep = Report("lattice")
    E = list(lat.elements)
    j, m = lat.join, lat.meet

    idem = rep.law("idempotent")
    comm = rep.law("commutative")
    absorb = rep.law("absorption")
    imp = rep.law("implication")
    for a, b in itertools.product(E, E):
        idem.check(j(a, a) == a and m(a, a) == a, a)
        comm.check(j(a, b) == j(b, a) and m(a, b) == m(b, a), (a, b))
        absorb.check(j(a, m(a, b)) == a and m(a, j(a, b)) == a, (a, b))
        imp.check(j(a, lat.imp(a, b)) == lat.top and m(a, lat.imp(a, b)) == m(a, b), (a, b))
    top = rep.law("top")
    for a in E:
        top.check(j(a, lat.top) == lat.top, a)

    assoc = rep.law("associative")
    dist = rep.law("distributive")
    for a, b, c in itertools.product(E, E, E):
        assoc.check(j(j(a, b), c) == j(a, j(b, c)) and m(m(a, b), c) == m(a, m(b, c)), (a, b, c))
        dist.check(m(a, j(b, c)) == j(m(a, b), m(a, c))
                   and j(a, m(b, c)) == m(j(a, b), j(a, c)), (a, b, c))

    if boolean:
        comp = rep.law("complement")
        dm = rep.law("de-morgan")
        bot = lat.bottom
        for a in E:
            ca = lat.complement(a)
            comp.check(j(a, ca) == lat.top and m(a, ca) == bot, a)
        for a, b in itertools.product(E, E):
            ca, cb = lat.complement(a), lat.complement(b)
            dm.check(lat.complement(j(a, b)) == m(ca, cb)
                     and lat.complement(m(a, b)) == j(ca, cb), (a, b))
    return rep
