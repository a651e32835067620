"""Exact workbench for quadratic algebras on four generators that map onto
twisted coordinate rings of a rank-two quadric."""

from .linalg import QMatrix, Subspace, span_compare, rref_rank, kernel_basis
from .polynomials import CommPoly, LinearForm, poly_partial, poly_divisible, restrict_to_line
from .tensor import (QuadraticPresentation, TensorElement, ideal_component, graded_dim,
                     hilbert_coefficients, normal_form, multiply_nf, right_ideal_dims)
from .coordinate_rings import (QuadricSpec, thcr_relation_space, check_surjection,
                               extract_omega, omega_multiple_check)
from .catalog import catalog

__version__ = "0.1.0"
