"""su(N) tensor product multiplicities from generalized (virtual) BZ triangles."""

from .closed_form import (
    su3_multiplicity,
    su3_nonvanishing,
    su3_threshold,
    su4_multiplicity,
    su4_nonvanishing,
)
from .enumerator import (
    count_polytope,
    list_true_triangles,
    multiplicity_sum,
    polytope_of,
)
from .lattice import compose, highest_triangle, initial_triangle, root_triangle, virtual_basis
from .oracle import tensor_decompose, triple_multiplicity, weight_multiplicities
from .polytope import InequalitySystem, count_integer_points
from .triangle import GeneralTriangle, is_true, outer_weights, render
from .weights import Weight, conjugate, derived_quantities, dual_labels, integrality_ok, weyl_dimension

__all__ = [
    "GeneralTriangle", "InequalitySystem", "Weight",
    "compose", "conjugate", "count_integer_points", "count_polytope", "derived_quantities",
    "dual_labels", "highest_triangle", "initial_triangle", "integrality_ok", "is_true",
    "list_true_triangles", "multiplicity_sum", "outer_weights", "polytope_of", "render",
    "root_triangle", "su3_multiplicity", "su3_nonvanishing", "su3_threshold",
    "su4_multiplicity", "su4_nonvanishing", "tensor_decompose", "triple_multiplicity",
    "virtual_basis", "weight_multiplicities", "weyl_dimension",
]
