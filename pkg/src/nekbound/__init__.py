"""Diagonal-dominance classes and upper bounds on the infinity norm of a matrix inverse."""

__version__ = "0.1.0"

from .bounds import BoundReport, best_bound, nekrasov_bound_2, nekrasov_bound_3, varah_bound
from .classify import (
    Classification,
    GudkovResult,
    classify,
    classify_h_matrix,
    classify_nekrasov,
    classify_nekrasov_szulc,
    classify_sdd,
    find_gudkov_permutation,
)
from .core import Splitting, as_matrix, comparison_matrix, deleted_row_sums, permute, split
from .errors import (
    NekboundError,
    NotNekrasov,
    NotSDD,
    NotSquare,
    ParseError,
    Singular,
    UnknownName,
    UnsupportedFormat,
    ZeroDiagonal,
)
from .oracle import LuFactors, exact_inverse_inf_norm, inverse_entrywise, lu_factor
from .rowsums import RowSums, h_via_triangular_solve, nekrasov_row_sums, row_sums, z_weights
