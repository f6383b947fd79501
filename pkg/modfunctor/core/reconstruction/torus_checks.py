import logging
from functools import partial
from typing import List, Optional, Tuple

import numpy as np

from modfunctor.core.basic_data import BasicData
from modfunctor.core.config import ModFunctorConfig
from modfunctor.core.curve_operators import (
    c_matrix,
    check_curve_chain,
    check_curve_torus_unit,
    check_dehn,
    fusion_product_check,
)
from modfunctor.core.errors import ModularFunctorError
from modfunctor.core.multiprocessing.pool import sweep
from modfunctor.core.relations import RelationReport
from modfunctor.core.types import Reading, Relations
from .s_lambda import mcg_relation_check, reconstruct_s, s_from_twist_sandwich, s_lambda_main

logger = logging.getLogger(__name__)


def _failed(relation: str, labels, error: Exception) -> RelationReport:
    logger.info("%s at %s failed: %s", relation, labels, error)
    return RelationReport(relation, tuple(labels), np.inf, False)


def _check_point_label(bd: BasicData, reading: Reading, lam: str
                       ) -> Tuple[List[RelationReport], Optional[complex]]:
    reports = [check_curve_chain(bd, lam)]
    try:
        main = s_lambda_main(bd, lam, reading=reading)
    except ModularFunctorError as error:
        return reports + [_failed(Relations.MAIN_SELF_CONSISTENCY, (lam,), error)], None
    reports.append(RelationReport.from_residual(
        Relations.S_INVERTIBLE, (lam,), main.inverse_residual(), 10 * bd.tol))
    try:
        sandwich = s_from_twist_sandwich(bd, lam, reading)
        residual = np.abs(main.matrix - sandwich.matrix).max() if main.matrix.size else 0.0
        reports.append(RelationReport.from_residual(
            Relations.ROUTE_EQUIVALENCE, (lam,), residual, bd.tol))
    except ModularFunctorError as error:
        reports.append(_failed(Relations.ROUTE_EQUIVALENCE, (lam,), error))
    anomaly = mcg_relation_check(bd, lam, main)
    reports.append(anomaly.to_report())
    return reports, anomaly.rho if main.matrix.size else None


def run_torus_checks(bd: BasicData, reading: Optional[Reading]=None, jobs: Optional[int]=None
                     ) -> List[RelationReport]:
    """Checks on the once-punctured torus: curve-operator calibrations, the C-matrix and Dehn
    coefficients, S(λ) self-consistency, agreement of the two S(λ) routes, and the modular
    relation with the same anomaly ρ at every point label.

    Failures, including computations that raise, are returned as failing reports.
    """
    reading = ModFunctorConfig().reading if reading is None else Reading(reading)
    ls = bd.label_set
    reports: List[RelationReport] = []
    for kappa in ls:
        try:
            reports.append(check_curve_torus_unit(bd, kappa, reading))
        except ModularFunctorError as error:
            reports.append(_failed(Relations.CURVE_TORUS_UNIT, (kappa,), error))

    try:
        c = c_matrix(bd)
        reports.extend(fusion_product_check(bd, c))
        reports.extend(check_dehn(bd, reading))
    except ModularFunctorError as error:
        reports.append(_failed(Relations.FUSION_PRODUCT, (), error))

    if bd.has_s:
        try:
            main = s_lambda_main(bd, ls.unit, reading=reading)
            reports.append(RelationReport.from_residual(
                Relations.MAIN_SELF_CONSISTENCY, (ls.unit,), main.residual, bd.tol))
        except ModularFunctorError as error:
            reports.append(_failed(Relations.MAIN_SELF_CONSISTENCY, (ls.unit,), error))
    try:
        reconstructed = reconstruct_s(bd)
        residual = reconstructed.residual if bd.has_s else 0.0
        reports.append(RelationReport.from_residual(
            Relations.RECONSTRUCTION, (ls.unit,), residual, bd.tol))
    except ModularFunctorError as error:
        reports.append(_failed(Relations.RECONSTRUCTION, (ls.unit,), error))

    per_label = sweep(partial(_check_point_label, bd, reading), list(ls), jobs=jobs,
                      description="point labels")
    anomalies = {}
    for lam, (chunk, rho) in zip(ls, per_label):
        reports.extend(chunk)
        if rho is not None:
            anomalies[lam] = rho
    if ls.unit in anomalies:
        rho = anomalies[ls.unit]
        for lam, other in anomalies.items():
            if lam != ls.unit:
                reports.append(RelationReport.from_residual(
                    Relations.MCG, (lam, ls.unit), abs(other - rho), bd.tol))

    n_failed = sum(not report.passed for report in reports)
    logger.info("torus checks (%s reading): %d checks, %d failed", reading, len(reports),
                n_failed)
    return reports
