"""Exact computations with n-ary totally and partially associative operads.

Planar trees and the free operad on one generator, quadratic presentations
and their Koszul duals, bases of quotient components by linear algebra over
the rationals or a prime field, totally associative n-ary algebras, and
cup products of decomposable cochains.
"""

from .algebra import NAryAlgebra, check_total_associativity, evaluate_tree, sample_algebra
from .cochain import (ContextMonomial, Cup, DecomposableCochain, cup, evaluate_cochain,
                      nested_symbolic_eval, pa_defect_numeric, theorem_check_symbolic)
from .components import component_basis, dims, groebner_check_even, reduce
from .fields import GF, QQ, field_from_tag
from .freeops import Element, GeneratorSpec, Monomial, compose, pair
from .quadratic import (QuadraticPresentation, koszul_dual, pa_presentation, presentation,
                        ta_presentation)
from .trees import PlanarTree, catalan, enumerate_trees, graft, path_glex_compare

__all__ = [
    "NAryAlgebra", "check_total_associativity", "evaluate_tree", "sample_algebra",
    "ContextMonomial", "Cup", "DecomposableCochain", "cup", "evaluate_cochain",
    "nested_symbolic_eval", "pa_defect_numeric", "theorem_check_symbolic",
    "component_basis", "dims", "groebner_check_even", "reduce",
    "GF", "QQ", "field_from_tag",
    "Element", "GeneratorSpec", "Monomial", "compose", "pair",
    "QuadraticPresentation", "koszul_dual", "pa_presentation", "presentation", "ta_presentation",
    "PlanarTree", "catalan", "enumerate_trees", "graft", "path_glex_compare",
]
