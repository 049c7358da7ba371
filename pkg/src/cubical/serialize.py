"""JSON forms of every artifact, with exact round trips.

``to_json`` produces plain dicts and ``from_json`` rebuilds the objects;
``dumps``/``loads`` wrap them with a fixed layout so that
``dumps(loads(text)) == text`` for anything ``dumps`` wrote.  Filters, groups
and L_sB refer to their algebra either by instance name or inline.
"""

from __future__ import annotations

import json
from typing import Any

from .boolean_filters import BooleanFilterLattice
from .cubic import CubicAlgebra, CubicHom
from .errors import ContractError, StructureError
from .filters import Filter
from .group import GFilterGroup, group_violations
from .interval import IntervalAlgebra, Presentation
from .lattice import BooleanAlgebra, ImplicationLattice, mk_boolean_algebra
from .laws import Report
from .twist import RelativeTwist, TwistWitness


def _lattice(lat: ImplicationLattice) -> dict:
    if isinstance(lat, BooleanAlgebra):
        return {"kind": "boolean_algebra", "atoms": lat.atom_count}
    d = {"kind": "implication_lattice", "size": lat.size, "top": lat.top,
         "join": [list(r) for r in lat.join_table], "meet": [list(r) for r in lat.meet_table],
         "imp": [list(r) for r in lat.imp_table]}
    if lat.labels:
        d["labels"] = list(lat.labels)
    return d


def _cubic(L: CubicAlgebra) -> dict:
    d: dict[str, Any] = {"kind": "cubic_algebra", "tag": L.tag, "size": L.size, "one": L.one,
                         "join": [list(r) for r in L.join_table],
                         "delta": [[y, x, v] for (y, x), v in sorted(L.delta_map.items())]}
    if L.labels:
        d["labels"] = list(L.labels)
    if isinstance(L, IntervalAlgebra):
        d["base"] = _lattice(L.base)
        d["pairs"] = [list(p) for p in L.pairs]
    return d


def _ref(L: CubicAlgebra, ref: str | None):
    return ref if ref is not None else _cubic(L)


def to_json(obj, ref: str | None = None) -> dict:
    """Plain-dict form of ``obj``; ``ref`` names the algebra instead of inlining it."""
    if isinstance(obj, (ImplicationLattice,)):
        return _lattice(obj)
    if isinstance(obj, CubicAlgebra):
        return _cubic(obj)
    if isinstance(obj, Filter):
        return {"filter": {"algebra": _ref(obj.algebra, ref), "members": sorted(obj.members)}}
    if isinstance(obj, GFilterGroup):
        return {"kind": "gfilter_group", "algebra": _ref(obj.algebra, ref),
                "base": sorted(obj.base.members),
                "elements": [sorted(G.members) for G in obj.elements],
                "star": [list(r) for r in obj.star]}
    if isinstance(obj, BooleanFilterLattice):
        d = _cubic(obj.algebra)
        d["source"] = _ref(obj.source, ref)
        d["filters"] = [sorted(G.members) for G in obj.filters]
        d["atoms"] = [obj.index(G) for G in obj.atoms]
        d["e"] = list(obj.e.mapping)
        return d
    if isinstance(obj, Presentation):
        return {"kind": "presentation", "source": _ref(obj.source, ref),
                "members": list(obj.members), "base": _lattice(obj.base),
                "map": [[x, obj.mapping[x]] for x in sorted(obj.mapping)]}
    if isinstance(obj, RelativeTwist):
        return {"kind": "relative_twist", "twisted": obj.twisted,
                "witnesses": [{"a": w.a, "g": w.g, "case": w.case} for w in obj.witnesses]}
    if isinstance(obj, Report):
        return {"kind": "law_report", **obj.to_dict()}
    if isinstance(obj, list) and all(isinstance(r, Report) for r in obj):
        return {"kind": "report_set", "reports": [to_json(r) for r in obj]}
    raise ContractError(f"cannot serialize {type(obj).__name__}")


def _resolve(ref, algebra: CubicAlgebra | None) -> CubicAlgebra:
    if algebra is not None:
        return algebra
    if isinstance(ref, str):
        from .instances import get_instance
        return get_instance(ref)
    if isinstance(ref, dict):
        return from_json(ref)
    raise ContractError("missing algebra reference")


def _parse_lattice(d: dict) -> ImplicationLattice:
    if d["kind"] == "boolean_algebra":
        return mk_boolean_algebra(int(d["atoms"]))
    return ImplicationLattice(d["join"], d["meet"], d["imp"], d["top"], d.get("labels"))


def _parse_cubic(d: dict) -> CubicAlgebra:
    n = int(d["size"])
    if len(d["join"]) != n:
        raise StructureError("size does not match the join table", n)
    delta = {}
    for y, x, v in d["delta"]:
        if (y, x) in delta:
            raise StructureError("duplicate Δ entry", (y, x))
        delta[(y, x)] = v
    if "base" in d:
        IA = IntervalAlgebra(_parse_lattice(d["base"]))
        if (IA.join_table != tuple(map(tuple, d["join"])) or IA.delta_map != delta
                or IA.one != d["one"]):
            raise ContractError("tables disagree with the interval algebra of the base")
        return IA
    return CubicAlgebra(d["join"], d["one"], delta, tag=d.get("tag", "imported"),
                        labels=d.get("labels"))


def from_json(d: dict, algebra: CubicAlgebra | None = None):
    """Inverse of :func:`to_json`.  ``algebra`` overrides any algebra reference."""
    if not isinstance(d, dict):
        raise ContractError("expected a JSON object")
    if "filter" in d:
        f = d["filter"]
        return Filter(_resolve(f["algebra"], algebra), f["members"])
    kind = d.get("kind")
    try:
        if kind in ("boolean_algebra", "implication_lattice"):
            return _parse_lattice(d)
        if kind == "cubic_algebra" and "source" in d:
            L = _resolve(d["source"], algebra)
            A = _parse_cubic(d)
            fs = tuple(Filter(L, m) for m in d["filters"])
            return BooleanFilterLattice(L, A, fs, CubicHom(L, A, tuple(d["e"])),
                                        tuple(fs[a] for a in d["atoms"]))
        if kind == "cubic_algebra":
            return _parse_cubic(d)
        if kind == "gfilter_group":
            L = _resolve(d["algebra"], algebra)
            grp = GFilterGroup(L, Filter(L, d["base"]), tuple(Filter(L, m) for m in d["elements"]),
                               tuple(tuple(r) for r in d["star"]))
            if group_violations(grp):
                raise ContractError("star table violates the group laws")
            return grp
        if kind == "presentation":
            L = _resolve(d["source"], algebra)
            base = _parse_lattice(d["base"])
            mapping = {x: y for x, y in d["map"]}
            return Presentation(L, frozenset(mapping), tuple(d["members"]), base,
                                IntervalAlgebra(base), mapping)
        if kind == "relative_twist":
            return RelativeTwist(d["twisted"], tuple(TwistWitness(w["a"], w["g"], w["case"])
                                                     for w in d["witnesses"]))
        if kind == "law_report":
            return Report.from_dict(d)
        if kind == "report_set":
            return [Report.from_dict(r) for r in d["reports"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ContractError(f"malformed {kind} document: {exc!r}") from None
    raise ContractError(f"unknown document kind {kind!r}")


def dumps(obj, ref: str | None = None) -> str:
    return json.dumps(to_json(obj, ref), indent=1) + "\n"


def loads(text: str, algebra: CubicAlgebra | None = None):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ContractError(f"invalid JSON: {exc}") from None
    return from_json(d, algebra)
