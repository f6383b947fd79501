from .c_matrix import (
    c_matrix,
    c_matrix_from_fusion,
    c_matrix_from_s,
    check_dehn,
    CMatrix,
    dehn_closed_form,
    dehn_coefficients,
    fusion_product_check,
    inverse_dehn_coefficients,
)
from .torus import (
    check_curve_chain,
    check_curve_torus_unit,
    contractible_scalar,
    curve_chain_scalar,
    curve_op_torus,
    curve_op_unlabeled,
    summand_offsets,
    torus_summands,
    TorusBlockOperator,
)
