from .framed import canonical_line, compose_framed, FramedMapClass, omega, wall_sigma
from .s_lambda import (
    AnomalyReport,
    mcg_relation_check,
    reconstruct_s,
    s_column,
    s_from_twist_sandwich,
    s_lambda_main,
    s_lambda_routes,
    SLambdaResult,
    twist_operator,
)
from .torus_checks import run_torus_checks
