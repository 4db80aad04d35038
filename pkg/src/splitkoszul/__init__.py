"""Splitting algebras of layered graphs: Hilbert series, quadratic duals and Koszulness tests."""

from .builders import (BuildError, SimplicialComplex, Surface2D, build_cassidy_shelton, build_cell_poset,
                       build_complete, build_simplicial, build_surface, surface_fixtures)
from .dual_algebra import (dual_component_dim, dual_dims, dual_hilbert, enumerate_admissible, enumerate_linked,
                           membership, simplicial_dual_formula, simplicial_sab)
from .graph_core import (BOTTOM, GraphValidationError, LayeredGraph, is_uniform, isomorphic, mobius,
                         validate_graph)
from .hilbert import chain_sums, expand_series, grw_inverse, hilbert_inverse, surface_closed_forms
from .koszul import (KoszulReport, Verdict, distributivity_check, koszul_verdict, numerical_koszul,
                     positivity_screen, sufficient_condition)
from .oriented import (conjugate, functional_span_check, orbit_decomposition, orient_surface,
                       transitivity_check)
from .poly import IntPolynomial

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
