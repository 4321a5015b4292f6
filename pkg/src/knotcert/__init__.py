"""knotcert: exact certification of smooth 4-genus bounds, Legendrian
front calculus, satellite constructions, and handle-diagram homology.

Everything is exact integer / rational arithmetic; no floating point is
used anywhere in the certification paths.
"""

from knotcert.laurent import LaurentPoly, poly_matrix_det
from knotcert.intmat import (
    cokernel_invariants,
    int_det,
    smith_normal_form,
    sym_rank_nullity,
    sym_signature,
)

__all__ = [
    "LaurentPoly",
    "poly_matrix_det",
    "cokernel_invariants",
    "int_det",
    "smith_normal_form",
    "sym_rank_nullity",
    "sym_signature",
]
