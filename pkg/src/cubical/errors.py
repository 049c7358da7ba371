"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CubicalError(Exception):
    """Base class; ``witness`` carries the offending tuple when there is one."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeError(CubicalError, ValueError):
    pass


class StructureError(CubicalError):
    """A table is malformed (e.g. Δ defined on an incomparable pair)."""


class ContractError(CubicalError):
    """An operation was called outside its precondition."""


class MRViolationError(ContractError):
    """A meet the MR axiom promises does not exist."""


class FalsificationError(CubicalError):
    """A checked law failed on a concrete instance."""

    def __init__(self, law: str, witness=None, message: str = ""):
        super().__init__(message or f"law {law!r} failed at {witness!r}", witness)
        self.law = law


class FilterValidationError(CubicalError):
    """A candidate id set is not a filter; ``invariant`` names the broken rule."""

    def __init__(self, invariant: str, witness=None):
        super().__init__(f"not a filter: {invariant} (witness {witness!r})", witness)
        self.invariant = invariant
