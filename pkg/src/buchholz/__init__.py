"""Buchholz ordinal notations, monotone double forests and the term to
double-tree reduction, with a finite verification harness."""

from buchholz.term import OMEGA, D, Sum, Term, Zero, ZERO, make_sum, norm, order, parse, show
from buchholz.order import Comparison, compare, leq, lt
from buchholz.ot import enumerate_ot, g_set, in_ot_restricted, is_ot, u_subterms
from buchholz.forest import DoubleForest, covering_exists, canonical_form
from buchholz.collapse import coll, exp, psi, rho, translate, translate_sum

__all__ = [
    "OMEGA", "D", "Sum", "Term", "Zero", "ZERO", "make_sum", "norm", "order", "parse", "show",
    "Comparison", "compare", "leq", "lt",
    "enumerate_ot", "g_set", "in_ot_restricted", "is_ot", "u_subterms",
    "DoubleForest", "covering_exists", "canonical_form",
    "coll", "exp", "psi", "rho", "translate", "translate_sum",
]
