"""Finite cubic algebras, their filters, and executable checks of their laws."""

from .boolean_filters import (build_Lsb, classify_boolean, filter_delta, is_boolean,
                              rel_complement)
from .cubic import (CubicAlgebra, CubicHom, check_cubic_axioms, check_mr_axiom, face_map,
                    is_mr, one_element_algebra)
from .errors import (ContractError, CubicalError, FalsificationError, FilterValidationError,
                     SizeError, StructureError)
from .filters import (Filter, alpha_beta, enumerate_filters, enumerate_gfilters, filter_intersect,
                      filter_shift, filter_vee, hat_filter, is_gfilter, principal)
from .group import build_group, plus, dot
from .interval import IntervalAlgebra, build_enveloping_boolean, interval_algebra, lift_iota
from .lattice import BooleanAlgebra, ImplicationLattice, mk_boolean_algebra
from .laws import LawResult, Report, Sampling
from .oracle import oracle_cross_check
from .suites import run_suite, run_suites
from .twist import is_twisted, is_twisted_relative, untwist_classes

__version__ = "0.1.0"
