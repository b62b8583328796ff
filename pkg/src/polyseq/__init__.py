"""Exact polynomial sequences from truncated Hessenberg matrices."""

from .errors import (
    BasisError,
    FamilyError,
    InsufficientMomentsError,
    MismatchError,
    NotInvertibleError,
    PolyseqError,
    PropertyViolationError,
    SchemaError,
    SpecTooShortError,
    StructureError,
    WindowError,
    ZeroAlphaError,
)
from .families import (
    FamilyParams,
    cheby_series_p,
    family_pnh_closed,
    family_slice_closed,
    family_tridiagonal,
    hermite_exp_p,
)
from .linearize import (
    LinTensor,
    connection_matrix,
    lin_tensor_direct,
    lin_tensor_recurrence,
    linearize_with_w,
    mixed_tensor,
    recurrence_poly_matrices,
    required_size,
    tensors_agree,
    verify_inverse_connection,
)
from .matrix import (
    TruncMatrix,
    equal_on_window,
    identity,
    lower_tri_inverse,
    make_operator,
    mat_mul,
    poly_of_matrix,
    transpose,
    window_rows,
    zeros,
)
from .oracle import BasisExpansion, expand_in_basis, lin_tensor_oracle, poly_mul
from .orthogonal import (
    ThreeTermRecurrence,
    op_lin_recurrence,
    op_sequence,
    orthogonality_table,
    partial_orthogonality_check,
    squared_norms,
    support_check,
)
from .polynomial import Polynomial
from .sequences import (
    HSpec,
    SequencePair,
    build_A_rows,
    build_Hhat,
    build_P_columns,
    build_P_recurrence,
    check_unit_hessenberg,
    realize_H,
    row_poly,
    tau_apply,
    tau_moments,
)
from .verify import CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "BasisError",
    "BasisExpansion",
    "CheckResult",
    "FamilyError",
    "FamilyParams",
    "HSpec",
    "InsufficientMomentsError",
    "LinTensor",
    "MismatchError",
    "NotInvertibleError",
    "Polynomial",
    "PolyseqError",
    "PropertyViolationError",
    "SchemaError",
    "SequencePair",
    "SpecTooShortError",
    "StructureError",
    "ThreeTermRecurrence",
    "TruncMatrix",
    "WindowError",
    "ZeroAlphaError",
    "build_A_rows",
    "build_Hhat",
    "build_P_columns",
    "build_P_recurrence",
    "check_unit_hessenberg",
    "cheby_series_p",
    "connection_matrix",
    "equal_on_window",
    "expand_in_basis",
    "family_pnh_closed",
    "family_slice_closed",
    "family_tridiagonal",
    "hermite_exp_p",
    "identity",
    "lin_tensor_direct",
    "lin_tensor_oracle",
    "lin_tensor_recurrence",
    "linearize_with_w",
    "lower_tri_inverse",
    "make_operator",
    "mat_mul",
    "mixed_tensor",
    "op_lin_recurrence",
    "op_sequence",
    "orthogonality_table",
    "partial_orthogonality_check",
    "poly_mul",
    "poly_of_matrix",
    "realize_H",
    "recurrence_poly_matrices",
    "required_size",
    "row_poly",
    "run_suite",
    "squared_norms",
    "support_check",
    "tau_apply",
    "tau_moments",
    "tensors_agree",
    "transpose",
    "verify_inverse_connection",
    "window_rows",
    "zeros",
]
