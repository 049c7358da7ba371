"""Named test instances and the single-table mutations of I(B1)."""

from __future__ import annotations

import random
from typing import Callable, NamedTuple

from .cubic import CubicAlgebra, one_element_algebra
from .errors import ContractError
from .interval import interval_algebra

#: Permutation seed for the relabelled ("imported") copy of I(B2).
IMPORT_SEED = 7


def chain3() -> CubicAlgebra:
    """The 3-chain 0 < 1 < 2 with Δ(y, x) = x: a join table that is no cubic algebra."""
    join = [[max(a, b) for b in range(3)] for a in range(3)]
    delta = {(y, x): x for y in range(3) for x in range(y + 1)}
    return CubicAlgebra(join, 2, delta, tag="chain", labels=["0", "1", "2"])


def imported_b2() -> CubicAlgebra:
    """I(B2) with its element ids shuffled, stripped of the interval structure."""
    L = interval_algebra(2)
    perm = list(L.elements)
    random.Random(IMPORT_SEED).shuffle(perm)
    return L.relabel(perm)


def lsb1() -> CubicAlgebra:
    from .boolean_filters import build_Lsb
    return build_Lsb(interval_algebra(1)).algebra


INSTANCES: dict[str, Callable[[], CubicAlgebra]] = {
    "one": one_element_algebra,
    "b0": lambda: interval_algebra(0),
    "b1": lambda: interval_algebra(1),
    "b2": lambda: interval_algebra(2),
    "b3": lambda: interval_algebra(3),
    "imported": imported_b2,
    "lsb1": lsb1,
    "chain3": chain3,
}

#: Instances on which every suite is expected to pass.
GOOD_INSTANCES = ("one", "b0", "b1", "b2", "b3", "imported", "lsb1")


def get_instance(name: str) -> CubicAlgebra:
    try:
        return INSTANCES[name]()
    except KeyError:
        raise ContractError(f"unknown instance {name!r}; known: {', '.join(INSTANCES)}") from None


class Mutation(NamedTuple):
    name: str
    algebra: CubicAlgebra
    expected: str


def b1_mutations() -> list[Mutation]:
    """Six single-entry edits of I(B1) (u = 0, w = 1, top = 2), each breaking axiom (c)."""
    L = interval_algebra(1)
    return [
        Mutation("delta(1,u)=u", L.with_delta(2, 0, 0), "axiom-c"),
        Mutation("delta(1,w)=1", L.with_delta(2, 1, 2), "axiom-c"),
        Mutation("delta(1,1)=u", L.with_delta(2, 2, 0), "axiom-c"),
        Mutation("delta(u,u)=w", L.with_delta(0, 0, 1), "axiom-c"),
        Mutation("delta(w,w)=1", L.with_delta(1, 1, 2), "axiom-c"),
        Mutation("u v w = u", L.with_join(0, 1, 0), "axiom-c"),
    ]
