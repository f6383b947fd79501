"""Relations among F, R, B, E and S that hold on the genus-zero surfaces.

Every check returns :py:class:`RelationReport` objects rather than raising, so a corrupted theory
produces a named list of failures. Contractions are written with the conventions documented on
:py:class:`~modfunctor.core.basic_data.BasicData`.
"""
import itertools
import logging
from functools import partial
from typing import List, Optional, Tuple

import numpy as np

from modfunctor.core.basic_data import BasicData
from modfunctor.core.errors import RelationError
from modfunctor.core.labels import check_flip_dim_consistency
from modfunctor.core.multiprocessing.pool import sweep
from modfunctor.core.types import Relations, Triple
from .report import RelationReport

logger = logging.getLogger(__name__)


def _max_abs(array: np.ndarray) -> float:
    return float(np.abs(array).max()) if array.size else 0.0


def _raw_e(bd: BasicData, lam: str) -> complex:
    """E_λ without the nonvanishing check, so that a broken theory still yields reports."""
    ls = bd.label_set
    block = bd.f_block(lam, ls.dual(lam), ls.dual(lam), lam, ls.unit, ls.unit)
    return complex(block[0, 0, 0, 0]) if block.size else 0j


# ---------------------------------------------------------------------------- contractions

def pentagon_matrix(bd: BasicData, lam: str, mu: str, nu: str) -> np.ndarray:
    """The pentagon contraction P[s, l] on Z_{ν†,μ,λ†}, built from F_{0,μ}[λ ν; λ† ν†], R on
    Z_{μ†,ν,λ}, F_{ν,0}[λ λ†; μ† μ] and R² on Z_{μ,λ†,ν†}. It equals E_{λ†} times the
    identity."""
    ls = bd.label_set
    unit, dual = ls.unit, ls.dual
    f1 = bd.f_block(lam, nu, dual(lam), dual(nu), unit, mu)[0, 0]
    r = bd.r_matrix(dual(mu), nu, lam)
    f2 = bd.f_block(lam, dual(lam), dual(mu), mu, nu, unit)[:, :, 0, 0]
    r2 = bd.r2_matrix(mu, dual(lam), dual(nu))
    return np.einsum("ij,jr,rl,is->sl", f1, r, f2, r2)


def abba_matrix(bd: BasicData, lam: str, mu: str, nu: str) -> np.ndarray:
    """The contraction Q[t, m] on Z_{μ†,ν†,λ} built from F_{0,μ}[λ ν†; λ† ν], R² on
    Z_{μ,λ†,ν}, F_{ν†,0}[λ λ†; μ† μ] and R on Z_{μ†,ν†,λ}. It equals E_{λ†} times the
    identity."""
    ls = bd.label_set
    unit, dual = ls.unit, ls.dual
    f1 = bd.f_block(lam, dual(nu), dual(lam), nu, unit, mu)[0, 0]
    r2 = bd.r2_matrix(mu, dual(lam), nu)
    f2 = bd.f_block(lam, dual(lam), dual(mu), mu, dual(nu), unit)[:, :, 0, 0]
    r = bd.r_matrix(dual(mu), dual(nu), lam)
    return np.einsum("lm,lu,vu,tv->tm", f1, r2, f2, r)


def pentsum_scalar(bd: BasicData, lam: str, mu: str, nu: str) -> complex:
    """The fully contracted pentagon, evaluated in one pass rather than as the trace of
    :py:func:`pentagon_matrix`."""
    ls = bd.label_set
    unit, dual = ls.unit, ls.dual
    f1 = bd.f_block(lam, nu, dual(lam), dual(nu), unit, mu)[0, 0]
    r = bd.r_matrix(dual(mu), nu, lam)
    f2 = bd.f_block(lam, dual(lam), dual(mu), mu, nu, unit)[:, :, 0, 0]
    r2 = bd.r2_matrix(mu, dual(lam), dual(nu))
    if not (f1.size and f2.size):
        return 0j
    return complex(np.einsum("ij,jr,rl,il->", f1, r, f2, r2))


# ---------------------------------------------------------------------------- checks

def check_unit_F_cases(bd: BasicData) -> List[RelationReport]:
    """F blocks with a unit external label reduce to R or R².

    - λ = 0: F_{μ†,κ†}[μ ξ; 0 κ] is R on Z_{μ,κ,ξ}
    - μ = 0: F_{λ†,ξ}[0 ξ; λ κ] is R² on Z_{λ,κ,ξ}
    - ξ = 0: F_{κ,μ}[μ 0; λ κ] is R on Z_{κ,μ,λ}
    - κ = 0: F_{ξ,λ†}[μ ξ; λ 0] is R² on Z_{ξ,μ,λ}
    """
    ls, dims, tol = bd.label_set, bd.dims, bd.tol
    unit, dual = ls.unit, ls.dual
    reports = []
    for a, b, c in itertools.product(ls, repeat=3):
        # λ = 0 with (μ, ξ, κ) = (a, b, c)
        if dims.dim(a, c, b):
            block = bd.f_block(a, b, unit, c, dual(a), dual(c))[0, :, 0, :]
            reports.append(RelationReport.from_residual(
                Relations.UNIT_F, (a, b, unit, c),
                _max_abs(block - bd.r_matrix(a, c, b)), tol))
        # μ = 0 with (ξ, λ, κ) = (a, b, c)
        if dims.dim(b, c, a):
            block = bd.f_block(unit, a, b, c, dual(b), a)[0, :, :, 0]
            reports.append(RelationReport.from_residual(
                Relations.UNIT_F, (unit, a, b, c),
                _max_abs(block - bd.r2_matrix(b, c, a)), tol))
        # ξ = 0 with (μ, λ, κ) = (a, b, c)
        if dims.dim(c, a, b):
            block = bd.f_block(a, unit, b, c, c, a)[:, 0, :, 0]
            reports.append(RelationReport.from_residual(
                Relations.UNIT_F, (a, unit, b, c),
                _max_abs(block - bd.r_matrix(c, a, b)), tol))
        # κ = 0 with (μ, ξ, λ) = (a, b, c)
        if dims.dim(b, a, c):
            block = bd.f_block(a, b, c, unit, b, dual(c))[:, 0, 0, :]
            reports.append(RelationReport.from_residual(
                Relations.UNIT_F, (a, b, c, unit),
                _max_abs(block - bd.r2_matrix(b, a, c)), tol))
    return reports


def check_ess(bd: BasicData) -> List[RelationReport]:
    """S_{0,0} E_λ = S_{0,λ†} for every λ.

    Raises
    ------
    RelationError :
        if the theory carries no S-matrix, or if S_{0,0} vanishes
    """
    if not bd.has_s:
        raise RelationError("S required")
    ls, s, tol = bd.label_set, bd.s, bd.tol
    u = ls.unit_index
    s00 = s[u, u]
    if abs(s00) <= tol:
        raise RelationError(f"S_00 vanishes ({abs(s00):.2e})")
    return [
        RelationReport.from_residual(
            Relations.ESS, (lam,),
            abs(s00 * _raw_e(bd, lam) - s[u, ls.index(ls.dual(lam))]), tol)
        for lam in ls
    ]


def check_pentagon_delta(bd: BasicData, lam: str, mu: str, nu: str) -> RelationReport:
    """The pentagon contraction equals E_{λ†} times the identity on Z_{ν†,μ,λ†}."""
    p = pentagon_matrix(bd, lam, mu, nu)
    e = _raw_e(bd, bd.label_set.dual(lam))
    return RelationReport.from_residual(
        Relations.PENTAGON, (lam, mu, nu), _max_abs(p - e * np.eye(p.shape[0])), bd.tol)


def check_abba(bd: BasicData, lam: str, mu: str, nu: str) -> RelationReport:
    """The ABBA contraction equals E_{λ†} times the identity on Z_{μ†,ν†,λ}."""
    q = abba_matrix(bd, lam, mu, nu)
    e = _raw_e(bd, bd.label_set.dual(lam))
    return RelationReport.from_residual(
        Relations.ABBA, (lam, mu, nu), _max_abs(q - e * np.eye(q.shape[0])), bd.tol)


def check_pentsum(bd: BasicData, lam: str, mu: str, nu: str) -> RelationReport:
    """The full pentagon contraction equals E_{λ†} times dim Z_{ν†,μ,λ†}, and vanishes when that
    space does."""
    ls = bd.label_set
    expected = _raw_e(bd, ls.dual(lam)) * bd.dims.dim(ls.dual(nu), mu, ls.dual(lam))
    return RelationReport.from_residual(
        Relations.PENTSUM, (lam, mu, nu), abs(pentsum_scalar(bd, lam, mu, nu) - expected), bd.tol)


def check_pentagon_consistency(bd: BasicData, lam: str, mu: str, nu: str) -> RelationReport:
    """The one-pass full contraction agrees with the trace of the pentagon matrix."""
    p = pentagon_matrix(bd, lam, mu, nu)
    trace = np.trace(p) if p.size else 0j
    return RelationReport.from_residual(
        Relations.PENTAGON_CONSISTENCY, (lam, mu, nu),
        abs(pentsum_scalar(bd, lam, mu, nu) - trace), bd.tol)


def check_e_nonzero(bd: BasicData) -> List[RelationReport]:
    return [RelationReport.nonvanishing(Relations.E_NONZERO, (lam,), _raw_e(bd, lam), bd.tol)
            for lam in bd.label_set]


def check_s_row_nonzero(bd: BasicData) -> List[RelationReport]:
    """S_{0,λ} ≠ 0 for every λ. Empty when the theory carries no S."""
    if not bd.has_s:
        return []
    u = bd.label_set.unit_index
    return [RelationReport.nonvanishing(Relations.S_ROW_NONZERO, (lam,), bd.s[u, i], bd.tol)
            for i, lam in enumerate(bd.label_set)]


def check_f_invertible(bd: BasicData, quad: Tuple[str, str, str, str]) -> RelationReport:
    """The assembled F-move at ``quad`` has condition number within the configured limit. The
    residual is 0 when it does and infinite otherwise."""
    assembled = bd.assembled_f(*quad)
    invertible = not assembled.size or np.linalg.cond(assembled) <= bd.cond_limit
    return RelationReport.from_residual(
        Relations.F_INVERTIBLE, quad, 0.0 if invertible else np.inf, bd.tol)


def check_dagger_symmetry(bd: BasicData) -> RelationReport:
    """dim Z_{λ,μ,ν} = dim Z_{ν†,μ†,λ†}. The residual counts violating triples."""
    violations = bd.dims.dagger_violations()
    for triple in violations:
        logger.debug("dagger symmetry violated at %s", triple)
    return RelationReport.from_residual(
        Relations.DAGGER_SYMMETRY, (), float(len(violations)), bd.tol)


def check_flip_dimension(bd: BasicData, quad: Tuple[str, str, str, str]) -> RelationReport:
    consistent = check_flip_dim_consistency(bd.dims, *quad)
    return RelationReport.from_residual(
        Relations.FLIP_DIMENSION, quad, 0.0 if consistent else np.inf, bd.tol)


def check_fusion_commute(bd: BasicData) -> RelationReport:
    """The fusion matrices N^λ commute pairwise."""
    return RelationReport.from_residual(
        Relations.FUSION_COMMUTE, (), float(bd.dims.fusion_matrices().max_commutator()), bd.tol)


# ---------------------------------------------------------------------------- sweeps

def _check_triple(bd: BasicData, triple: Triple) -> List[RelationReport]:
    lam, mu, nu = triple
    ls = bd.label_set
    reports = [check_pentsum(bd, lam, mu, nu)]
    if bd.dims.dim(ls.dual(nu), mu, ls.dual(lam)):
        reports.append(check_pentagon_delta(bd, lam, mu, nu))
        reports.append(check_pentagon_consistency(bd, lam, mu, nu))
    if bd.dims.dim(ls.dual(mu), ls.dual(nu), lam):
        reports.append(check_abba(bd, lam, mu, nu))
    return reports


def _check_quad(bd: BasicData, quad: Tuple[str, str, str, str]) -> List[RelationReport]:
    return [check_f_invertible(bd, quad), check_flip_dimension(bd, quad)]


def run_all(bd: BasicData, jobs: Optional[int]=None) -> List[RelationReport]:
    """Run the whole genus-zero suite over every label tuple.

    Parameters
    ----------
    bd : BasicData
        theory to check
    jobs : int
        number of worker processes; defaults to the configured value

    Returns
    -------
    List[RelationReport] :
        reports in a fixed order: structural checks, unit cases, E and S nonvanishing, ESS, then
        per-triple and per-quad checks in label order
    """
    ls = bd.label_set
    reports: List[RelationReport] = [check_dagger_symmetry(bd), check_fusion_commute(bd)]
    reports.extend(check_unit_F_cases(bd))
    reports.extend(check_e_nonzero(bd))
    reports.extend(check_s_row_nonzero(bd))
    if bd.has_s and abs(bd.s[ls.unit_index, ls.unit_index]) > bd.tol:
        reports.extend(check_ess(bd))

    triples = list(itertools.product(ls, repeat=3))
    for chunk in sweep(partial(_check_triple, bd), triples, jobs=jobs, description="triples"):
        reports.extend(chunk)
    quads = list(itertools.product(ls, repeat=4))
    for chunk in sweep(partial(_check_quad, bd), quads, jobs=jobs, description="quads"):
        reports.extend(chunk)

    n_failed = sum(not report.passed for report in reports)
    logger.info("genus-zero suite: %d checks, %d failed", len(reports), n_failed)
    return reports
