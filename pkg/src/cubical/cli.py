"""Command-line interface: ``cubical gen|check|filters|group|report``.

Exit codes: 0 everything passed, 1 a law failed, 2 bad input or a broken
contract (argparse usage errors also exit 2).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import serialize
from .boolean_filters import BooleanFilterLattice, build_Lsb
from .cubic import CubicAlgebra
from .errors import CubicalError, FalsificationError
from .filters import enumerate_filters, enumerate_gfilters, filter_validate, is_gfilter
from .group import build_group
from .instances import INSTANCES, get_instance
from .interval import build_enveloping_boolean, interval_algebra
from .laws import DEFAULT_BUDGET, Report, Sampling
from .lattice import ImplicationLattice, mk_boolean_algebra
from .suites import SUITE_NAMES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CubicalError(f"cannot read {path}: {exc.strerror}") from None
    return serialize.loads(text)


def _algebra(args) -> tuple[CubicAlgebra, str]:
    """The algebra named by ``--instance`` or stored in ``args.input``."""
    if args.instance:
        return get_instance(args.instance), args.instance
    if not args.input:
        raise CubicalError("give an input file or --instance")
    obj = _read(args.input)
    if isinstance(obj, BooleanFilterLattice):
        obj = obj.algebra
    if not isinstance(obj, CubicAlgebra):
        raise CubicalError(f"{args.input} does not hold a cubic algebra")
    return obj, Path(args.input).stem


def _seed(args) -> int:
    env = os.environ.get("CUBICAL_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CubicalError(f"CUBICAL_SEED must be an integer, got {env!r}") from None
    return args.seed


# -- verbs --------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.envelope:
        lat = _read(args.envelope)
        if not isinstance(lat, ImplicationLattice):
            raise CubicalError(f"{args.envelope} does not hold an implication lattice")
        BF, _ = build_enveloping_boolean(lat)
        _emit(serialize.dumps(BF), args.out)
        return EXIT_OK
    if args.instance:
        L, ref = get_instance(args.instance), args.instance
    else:
        mk_boolean_algebra(args.atoms)  # size cap
        L, ref = interval_algebra(args.atoms), None
    if args.lsb:
        _emit(serialize.dumps(build_Lsb(L), ref=ref), args.out)
    else:
        _emit(serialize.dumps(L), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    L, name = _algebra(args)
    sampling = Sampling(budget=args.budget, seed=_seed(args))
    reports = run_suites(L, args.suite, sampling, instance=name)
    if args.no_timing:
        text = json.dumps({"kind": "report_set",
                           "reports": [{"kind": "law_report", **r.to_dict(timing=False)}
                                       for r in reports]}, indent=1) + "\n"
    else:
        text = serialize.dumps(reports)
    _emit(text, args.out)
    if not args.quiet:
        for r in reports:
            for x in r.results:
                extra = f" witness={json.dumps(x.to_dict()['witness'])}" if x.status == "fail" else ""
                mode = f" sampled(seed={x.seed})" if x.mode == "sampled" else ""
                print(f"{name}\t{r.suite}\t{x.law}\t{x.status}\t{x.checked}{mode}{extra}",
                      file=sys.stderr)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_filters(args) -> int:
    L, name = _algebra(args)
    if args.action == "validate":
        F = filter_validate(L, args.members)
        _emit(json.dumps({"valid": True, "gfilter": is_gfilter(F),
                          **serialize.to_json(F, ref=name)}, indent=1) + "\n", args.out)
        return EXIT_OK
    fs = enumerate_gfilters(L) if args.gfilters else enumerate_filters(L)
    _emit(json.dumps([serialize.to_json(F, ref=name) for F in fs], indent=1) + "\n", args.out)
    return EXIT_OK


def cmd_group(args) -> int:
    L, name = _algebra(args)
    gs = enumerate_gfilters(L)
    if not gs:
        raise CubicalError("algebra has no g-filters")
    if not 0 <= args.base < len(gs):
        raise CubicalError(f"--base must be in [0, {len(gs) - 1}]")
    grp = build_group(L, gs[args.base])
    _emit(serialize.dumps(grp, ref=name if args.instance else None), args.out)
    return EXIT_OK


def load_reports(paths: list[str]) -> list[Report]:
    out: list[Report] = []
    for p in paths:
        obj = _read(p)
        if isinstance(obj, Report):
            out.append(obj)
        elif isinstance(obj, list):
            out.extend(obj)
        else:
            raise CubicalError(f"{p} does not hold law reports")
    return out


def write_summary(reports: list[Report], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["instance", "suite", "law", "status", "checked", "failures", "mode", "seed",
                    "witness"])
        for r in reports:
            for x in r.results:
                d = x.to_dict()
                w.writerow([r.instance, r.suite, x.law, x.status, x.checked, x.failures, x.mode,
                            "" if x.seed is None else x.seed,
                            "" if d["witness"] is None else json.dumps(d["witness"])])


def cmd_report(args) -> int:
    from .plotting import plot_grid
    reports = load_reports(args.reports)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "merged.json").write_text(serialize.dumps(reports))
    write_summary(reports, out / "summary.tsv")
    plot_grid(reports, str(out / "grid.png"))
    bad = sum(not r.ok for r in reports)
    print(f"{len(reports)} reports, {bad} with failures -> {out}", file=sys.stderr)
    return EXIT_OK if not bad else EXIT_FAIL


# -- parser -------------------------------------------------------------------


def _source(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="algebra JSON file")
    p.add_argument("--instance", choices=sorted(INSTANCES), help="use a built-in instance")
    p.add_argument("--out", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubical", description="Finite cubic algebra law checker.")
    sub = ap.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("gen", help="emit an algebra as JSON")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--atoms", type=int, help="I(B_n) for n atoms")
    src.add_argument("--instance", choices=sorted(INSTANCES))
    src.add_argument("--envelope", metavar="FILE", help="B_F for the implication lattice in FILE")
    g.add_argument("--lsb", action="store_true", help="emit L_sB of the algebra instead")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="run law suites")
    _source(c)
    c.add_argument("--suite", nargs="+", default=["all"], choices=("all",) + SUITE_NAMES)
    c.add_argument("--seed", type=int, default=0, help="sampling seed (CUBICAL_SEED overrides)")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="largest tuple space checked exhaustively")
    c.add_argument("--no-timing", action="store_true", help="omit elapsed times from the JSON")
    c.add_argument("-q", "--quiet", action="store_true", help="no per-law lines on stderr")
    c.set_defaults(func=cmd_check)

    f = sub.add_parser("filters", help="list or validate filters")
    f.add_argument("action", choices=("list", "validate"))
    _source(f)
    f.add_argument("--members", type=int, nargs="*", default=[], help="ids to validate")
    f.add_argument("--gfilters", action="store_true", help="list g-filters only")
    f.set_defaults(func=cmd_filters)

    gp = sub.add_parser("group", help="dump the g-filter group table")
    _source(gp)
    gp.add_argument("--base", type=int, default=0, help="index of the identity g-filter")
    gp.set_defaults(func=cmd_group)

    r = sub.add_parser("report", help="merge JSON reports into summary.tsv and grid.png")
    r.add_argument("reports", nargs="+")
    r.add_argument("--out-dir", default="report")
    r.set_defaults(func=cmd_report)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", 1) < 1:
        print("cubical: --budget must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except FalsificationError as exc:
        print(f"cubical: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except CubicalError as exc:
        print(f"cubical: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
