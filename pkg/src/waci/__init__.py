"""Exact computations with weighted artinian complete intersections (WACIs):
Groebner bases and Hilbert series, derivations, pseudo-homotopy groups,
Poincare duality and middle forms, rational smoothability, and the
characteristic-polynomial argument for invariant geodesics."""

from .poly import Polynomial, Presentation, WeightedRing, parse
from .quotient import QuotientAlgebra, ci_series, groebner, is_waci, normal_form, quotient
from .derivations import Derivation, derivation_space, euler_derivation, negative_derivations_vanish
from .homotopy import is_simple, k_invariant, pi0, pi1, pseudo_homotopy
from .duality import Orientation, formal_dimension, is_pda, middle_form, orientation
from .quadform import diagonalize, integrality, is_sum_of_signed_squares, residue, signature
from .smoothing import (
    PontrjaginClass,
    check_signature_formula,
    cp_pontrjagin_coeffs,
    el_pontrjagin_class,
    l_polynomial,
    pontrjagin_numbers,
    smoothability_report,
    truncated_divisibility,
)
from .geodesic import MonomialAction, char_poly, gamma_integrality, geodesic_report, unimodular_pair_exists
from .families import (
    SplitParams,
    eisenbud_levine,
    el_basis,
    flag_presentation,
    multiplicity_ok,
    nonhomogeneity_check,
    split_family,
    split_isotropic,
    truncated,
    weyl_degrees,
)

__version__ = "0.1.0"
