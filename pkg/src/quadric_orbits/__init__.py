"""Exact enumeration of Borel orbits on complete quadrics."""

from .arith import IntPolynomial, factorial, is_unimodal, multinomial
from .coxeter import b_poly, descent_scan, eulerian_poly, min_coset_reps, special_subsets
from .errors import CutoffExceeded, InvariantFailure
from .hermite import b_via_hermite, hermite_eval, hermite_poly
from .orbits import (
    asymptotic_ratios, b_equivariant, b_via_compositions, b_via_descents, b_via_skew,
    borel_orbits, check_bounds, fibonacci, ordered_bell, psi,
)
from .tableaux import involution_count, num_skew_syt, num_syt

__version__ = "0.1.0"
