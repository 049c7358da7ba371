"""Law reports and the exhaustive-or-sampled tuple iteration used by every suite."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Sequence

from .errors import FalsificationError

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class Sampling:
    """Tuple spaces larger than ``budget`` are sampled uniformly with ``seed``."""

    budget: int = DEFAULT_BUDGET
    seed: int = 0


@dataclass
class LawResult:
    law: str
    checked: int = 0
    failures: int = 0
    witness: Any = None
    mode: str = "exhaustive"
    seed: int | None = None
    note: str = ""
    skipped: bool = False

    @property
    def status(self) -> str:
        if self.skipped:
            return "skip"
        return "pass" if self.failures == 0 else "fail"

    def check(self, ok: bool, witness=None) -> bool:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.witness is None:
                self.witness = witness if witness is not None else "unspecified"
        return ok

    def skip(self, note: str) -> None:
        self.skipped = True
        self.note = note

    def over(self, pools: Sequence[Sequence], sampling: Sampling | None = None) -> Iterator[tuple]:
        """Iterate the product of ``pools``; sample it when it exceeds the budget."""
        sampling = sampling or Sampling()
        pools = [list(p) for p in pools]
        total = math.prod(len(p) for p in pools)
        if total <= sampling.budget:
            return itertools.product(*pools)
        self.mode, self.seed = "sampled", sampling.seed
        rng = random.Random(sampling.seed)
        return (tuple(rng.choice(p) for p in pools) for _ in range(sampling.budget))

    def over_list(self, items: Sequence, sampling: Sampling | None = None) -> Iterable:
        """Iterate a materialised hypothesis list, sampling when it is too long."""
        sampling = sampling or Sampling()
        if len(items) <= sampling.budget:
            return items
        self.mode, self.seed = "sampled", sampling.seed
        rng = random.Random(sampling.seed)
        return [rng.choice(items) for _ in range(sampling.budget)]

    def to_dict(self) -> dict:
        d = {"law": self.law, "status": self.status, "witness": _jsonable(self.witness),
             "checked": self.checked, "failures": self.failures, "mode": self.mode}
        if self.seed is not None:
            d["seed"] = self.seed
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "LawResult":
        return cls(law=d["law"], checked=d.get("checked", 0), failures=d.get("failures", 0),
                   witness=d.get("witness"), mode=d.get("mode", "exhaustive"),
                   seed=d.get("seed"), note=d.get("note", ""), skipped=d["status"] == "skip")


@dataclass
class Report:
    suite: str
    instance: str = ""
    results: list[LawResult] = field(default_factory=list)
    elapsed: float = 0.0

    def law(self, name: str, note: str = "") -> LawResult:
        res = LawResult(name, note=note)
        self.results.append(res)
        return res

    def extend(self, other: "Report") -> "Report":
        self.results.extend(other.results)
        return self

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if r.status == "fail"]

    def __getitem__(self, name: str) -> LawResult:
        for r in self.results:
            if r.law == name:
                return r
        raise KeyError(name)

    def raise_on_failure(self) -> None:
        bad = self.failures()
        if bad:
            raise FalsificationError(bad[0].law, bad[0].witness)

    def to_dict(self, timing: bool = True) -> dict:
        d = {"suite": self.suite, "instance": self.instance, "ok": self.ok,
             "laws": [r.to_dict() for r in self.results]}
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(suite=d["suite"], instance=d.get("instance", ""),
                   results=[LawResult.from_dict(x) for x in d["laws"]],
                   elapsed=d.get("elapsed", 0.0))


def _jsonable(w):
    if w is None or isinstance(w, (bool, int, float, str)):
        return w
    if isinstance(w, dict):
        return {str(k): _jsonable(v) for k, v in w.items()}
    if isinstance(w, (frozenset, set)):
        return sorted(_jsonable(x) for x in w)
    if isinstance(w, (list, tuple)):
        return [_jsonable(x) for x in w]
    members = getattr(w, "members", None)
    if members is not None:
        return sorted(members)
    return repr(w)
