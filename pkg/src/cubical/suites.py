"""The named law suites and the runner behind ``cubical check``.

Each suite is a list of checkers ``L -> Report`` (some also take a
:class:`Sampling`).  The runner merges their results into one report per
suite, in a fixed order, so reports are deterministic given the instance and
seed.  Suites past ``cubic`` need a cubic algebra; those past ``filters`` also
need MR, and are skipped with a note otherwise.
"""

from __future__ import annotations

import inspect
import time
from typing import Callable

from . import boolean_filters as bf
from . import filters as fl
from . import group as gr
from . import twist as tw
from .cubic import (CubicAlgebra, check_cubic_axioms, check_mr_axiom, check_prop_triv_suite,
                    check_vertex_interval_iso, is_mr)
from .errors import FalsificationError
from .laws import Report, Sampling
from .oracle import oracle_cross_check

Checker = Callable[..., Report]

SUITES: dict[str, tuple[Checker, ...]] = {
    "cubic": (check_cubic_axioms,),
    "mr": (check_mr_axiom, check_prop_triv_suite, check_vertex_interval_iso),
    "filters": (fl.check_principality, fl.check_filter_operations, fl.check_generation,
                fl.check_shift_laws, oracle_cross_check),
    "twist": (tw.check_untwist_characterization, tw.check_relation, tw.check_face_map_lemmas),
    "group": (gr.check_group, gr.check_congruence, gr.check_plus_dot, gr.check_same_ops,
              gr.check_subgroup_N),
    "boolean": (bf.check_complement_equalities, bf.check_arrow_monotonicity, bf.check_delta_laws,
                bf.check_boolean_transfer, bf.check_boolean_closure,
                bf.check_delta_boolean_interaction, bf.check_thm_lots),
    "lsb": (bf.check_lsb,),
}
SUITE_NAMES = tuple(SUITES)
NEEDS_MR = ("mr", "twist", "group", "boolean", "lsb")


def _call(check: Checker, L: CubicAlgebra, sampling: Sampling) -> Report:
    if "sampling" in inspect.signature(check).parameters:
        return check(L, sampling=sampling)
    return check(L)


def _gate(L: CubicAlgebra, name: str) -> str | None:
    if name == "cubic":
        return None
    if not check_cubic_axioms(L).ok:
        return "algebra fails the cubic axioms"
    if name != "mr" and name in NEEDS_MR and not is_mr(L):
        return "algebra is not an MR-algebra"
    return None


def run_suite(L: CubicAlgebra, name: str, sampling: Sampling | None = None,
              instance: str = "") -> Report:
    """Run one suite.  A falsification raised by a builder becomes a failed law."""
    if name not in SUITES:
        raise KeyError(name)
    sampling = sampling or Sampling()
    rep = Report(name, instance)
    t0 = time.perf_counter()
    reason = _gate(L, name)
    if reason:
        rep.law(f"{name}-suite").skip(reason)
    else:
        for check in SUITES[name]:
            if name == "mr" and check is not check_mr_axiom and not is_mr(L):
                rep.law(check.__name__.removeprefix("check_").replace("_", "-")).skip(
                    "algebra is not an MR-algebra")
                continue
            try:
                rep.extend(_call(check, L, sampling))
            except FalsificationError as exc:
                rep.law(exc.law).check(False, exc.witness if exc.witness is not None else str(exc))
    rep.elapsed = time.perf_counter() - t0
    return rep


def expand(names: str | list[str]) -> list[str]:
    if isinstance(names, str):
        names = [names]
    out: list[str] = []
    for n in names:
        for s in (SUITE_NAMES if n == "all" else (n,)):
            if s not in SUITES:
                raise KeyError(s)
            if s not in out:
                out.append(s)
    return out


def run_suites(L: CubicAlgebra, names: str | list[str] = "all", sampling: Sampling | None = None,
               instance: str = "") -> list[Report]:
    return [run_suite(L, s, sampling, instance) for s in expand(names)]
