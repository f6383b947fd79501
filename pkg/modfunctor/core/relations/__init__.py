from .genus_zero import (
    abba_matrix,
    check_abba,
    check_dagger_symmetry,
    check_e_nonzero,
    check_ess,
    check_f_invertible,
    check_flip_dimension,
    check_fusion_commute,
    check_pentagon_consistency,
    check_pentagon_delta,
    check_pentsum,
    check_s_row_nonzero,
    check_unit_F_cases,
    pentagon_matrix,
    pentsum_scalar,
    run_all,
)
from .report import RelationReport, ReportTable
