"""The torus S-matrix S(λ) from genus-zero data.

S(λ) acts on ⊕_μ Z_{λ,μ,μ†}. It is computed two independent ways: directly from twisted F-moves
(:py:func:`s_lambda_main`), and by sandwiching the inverse Dehn twist about the second curve
between inverse twist operators (:py:func:`s_from_twist_sandwich`).
"""
import logging
from functools import partial
from typing import Any, Dict, NamedTuple, Optional

import numpy as np

from modfunctor.core.basic_data import BasicData, encode_matrix
from modfunctor.core.config import ModFunctorConfig
from modfunctor.core.curve_operators import (
    curve_op_torus,
    inverse_dehn_coefficients,
    summand_offsets,
    torus_summands,
    TorusBlockOperator,
)
from modfunctor.core.errors import ReconstructionError, RelationError
from modfunctor.core.multiprocessing.pool import sweep
from modfunctor.core.relations import RelationReport
from modfunctor.core.types import Reading, Relations, Route, SColumn
from modfunctor.core.util.projective import projective_fit

logger = logging.getLogger(__name__)


class SLambdaResult:
    """S(λ) together with how it was obtained.

    ``residual`` is the max-norm distance to the theory's own S when λ is the unit label and S is
    known, and ``None`` otherwise.
    """

    def __init__(
            self,
            operator: TorusBlockOperator,
            route: Route,
            reading: Optional[Reading]=None,
            residual: Optional[float]=None,
    ) -> None:
        self._operator = operator
        self._route = route
        self._reading = reading
        self._residual = residual

    @property
    def point_label(self) -> str:
        return self._operator.point_label

    @property
    def operator(self) -> TorusBlockOperator:
        return self._operator

    @property
    def matrix(self) -> np.ndarray:
        return self._operator.matrix

    @property
    def route(self) -> Route:
        return self._route

    @property
    def reading(self) -> Optional[Reading]:
        return self._reading

    @property
    def residual(self) -> Optional[float]:
        return self._residual

    def inverse_residual(self) -> float:
        """max|S(λ) S(λ)⁻¹ − Id|, or infinity if S(λ) is singular."""
        matrix = self.matrix
        if not matrix.size:
            return 0.0
        try:
            inverse = np.linalg.inv(matrix)
        except np.linalg.LinAlgError:
            return np.inf
        return float(np.abs(matrix @ inverse - np.eye(matrix.shape[0])).max())

    def to_fragment(self) -> Dict[str, Any]:
        """S(λ) in the basic-data matrix encoding, with its summand index list."""
        return {
            "label": self.point_label,
            "route": str(self._route),
            "reading": None if self._reading is None else str(self._reading),
            "summands": [[mu, i] for mu, i in self._operator.summands],
            "S": encode_matrix(self.matrix),
            "residual": self._residual,
        }

    def __repr__(self) -> str:
        return (f"<SLambdaResult label={self.point_label!r} route={self._route} "
                f"size={len(self._operator.summands)}>")


def twist_operator(bd: BasicData, lam: str) -> TorusBlockOperator:
    """T(λ): the diagonal operator d_μ on each summand Z_{λ,μ,μ†}."""
    summands = torus_summands(bd, lam)
    return TorusBlockOperator(lam, summands, np.diag([bd.twist(mu) for mu, _ in summands]))


def _unit_residual(bd: BasicData, operator: TorusBlockOperator) -> Optional[float]:
    if operator.point_label != bd.label_set.unit or not bd.has_s:
        return None
    return float(np.abs(operator.matrix - bd.s).max())


def _main_statement(bd: BasicData, lam: str, column: SColumn) -> np.ndarray:
    ls = bd.label_set
    dual = ls.dual
    summands = torus_summands(bd, lam)
    offsets = summand_offsets(summands)
    sizes = {mu: bd.dims.dim(lam, mu, dual(mu)) for mu in offsets}
    matrix = np.zeros((len(summands), len(summands)), dtype=complex)
    for mu, row in offsets.items():
        for nu_target, col in offsets.items():
            nu = dual(nu_target)
            block = np.zeros((sizes[mu], sizes[nu_target]), dtype=complex)
            for kappa in ls:
                twisted = bd.twisted_f_block(kappa, dual(mu), dual(nu), lam, dual(mu), nu)
                if not twisted.size:
                    continue
                closing = bd.r_matrix(dual(nu), dual(mu), kappa)
                weight = bd.twist(mu) * column[dual(kappa)] / bd.twist(kappa)
                block += weight * np.einsum("kijm,mk->ij", twisted, closing)
            matrix[row:row + sizes[mu], col:col + sizes[nu_target]] = block
    return matrix


def _main_proof(bd: BasicData, lam: str, column: SColumn) -> np.ndarray:
    dual = bd.label_set.dual
    twists = np.diag(twist_operator(bd, lam).matrix)
    total = sum(
        bd.twist(dual(kappa)) * column[dual(kappa)]
        * curve_op_torus(bd, lam, kappa, Reading.PROOF, cross_check=False).matrix
        for kappa in bd.label_set)
    return twists[:, np.newaxis] * total * twists[np.newaxis, :]


def s_lambda_main(
        bd: BasicData,
        lam: str,
        column: Optional[SColumn]=None,
        reading: Optional[Reading]=None,
) -> SLambdaResult:
    """S(λ) from twisted F-moves and the column S_{κ,0}.

    Under :py:attr:`Reading.STATEMENT`, the ((μ, i), (ν†, j)) entry is
    Σ_κ d_κ⁻¹ d_μ S_{κ†,0} Σ_{k,m} F̃_{μ†,ν}[κ μ†; ν† λ][k, i, j, m] R(ν†, μ†, κ)[m, k].
    Under :py:attr:`Reading.PROOF`, it is d_{ν†} d_μ Σ_κ c_κ Z(β, κ) with
    c_κ = d_{κ†} S_{κ†,0} and the curve operators taken in the proof reading.

    Parameters
    ----------
    bd : BasicData
        theory
    lam : str
        point label
    column : Mapping[str, complex]
        κ → S_{κ,0}; defaults to :py:func:`s_column`
    reading : Reading
        defaults to the configured reading

    Raises
    ------
    ReconstructionError :
        ``column`` lacks an entry
    """
    reading = ModFunctorConfig().reading if reading is None else Reading(reading)
    column = s_column(bd) if column is None else column
    missing = [kappa for kappa in bd.label_set if kappa not in column]
    if missing:
        raise ReconstructionError(f"missing S column entries for {missing}")
    if reading == Reading.STATEMENT:
        matrix = _main_statement(bd, lam, column)
    else:
        matrix = _main_proof(bd, lam, column)
    operator = TorusBlockOperator(lam, torus_summands(bd, lam), matrix)
    return SLambdaResult(operator, Route.MAIN, reading, _unit_residual(bd, operator))


def s_from_twist_sandwich(bd: BasicData, lam: str, reading: Optional[Reading]=None
                          ) -> SLambdaResult:
    """S(λ) as the inverse of T(λ)⁻¹ (Σ_κ c̃_κ Z(β, κ)) T(λ)⁻¹, where c̃ expands the inverse
    Dehn twist: d_μ⁻¹ = Σ_κ c̃_κ C_{κ,μ}.

    Raises
    ------
    RelationError :
        the candidate is singular
    """
    reading = ModFunctorConfig().reading if reading is None else Reading(reading)
    coefficients = inverse_dehn_coefficients(bd)
    summands = torus_summands(bd, lam)
    total = np.zeros((len(summands), len(summands)), dtype=complex)
    for kappa, c in coefficients.items():
        total += c * curve_op_torus(bd, lam, kappa, reading, cross_check=False).matrix
    inverse_twists = 1 / np.diag(twist_operator(bd, lam).matrix)
    candidate = inverse_twists[:, np.newaxis] * total * inverse_twists[np.newaxis, :]
    if candidate.size:
        if np.linalg.cond(candidate) > bd.cond_limit:
            raise RelationError(f"singular S({lam}) candidate")
        matrix = np.linalg.inv(candidate)
    else:
        matrix = candidate
    operator = TorusBlockOperator(lam, summands, matrix)
    return SLambdaResult(operator, Route.SANDWICH, reading, _unit_residual(bd, operator))


def _by_route(bd: BasicData, lam: str, reading: Optional[Reading], route: Route) -> SLambdaResult:
    if route == Route.MAIN:
        return s_lambda_main(bd, lam, reading=reading)
    return s_from_twist_sandwich(bd, lam, reading)


def s_lambda_routes(bd: BasicData, lam: str, reading: Optional[Reading]=None,
                    jobs: Optional[int]=None) -> Dict[Route, SLambdaResult]:
    """S(λ) by both routes, one worker process per route when ``jobs`` allows."""
    routes = [Route.MAIN, Route.SANDWICH]
    results = sweep(partial(_by_route, bd, lam, reading), routes, jobs=jobs)
    return dict(zip(routes, results))


class AnomalyReport(NamedTuple):
    """The projective fit (S(λ) T(λ)⁻¹)³ = ρ S(λ)²."""

    point_label: str
    rho: complex
    residual: float
    passed: bool

    def to_report(self) -> RelationReport:
        return RelationReport(Relations.MCG, (self.point_label,), self.residual, self.passed)


def mcg_relation_check(bd: BasicData, lam: str, result: Optional[SLambdaResult]=None
                       ) -> AnomalyReport:
    """Fit the once-punctured torus relation (S T⁻¹)³ = ρ S² at point label λ.

    ``result`` defaults to :py:func:`s_lambda_main` at λ. The residual is relative to max|S²|.
    """
    result = s_lambda_main(bd, lam) if result is None else result
    s = result.matrix
    t = np.diag(twist_operator(bd, lam).matrix)
    if not s.size:
        return AnomalyReport(lam, 1 + 0j, 0.0, True)
    st = s / t[np.newaxis, :]
    rho, residual = projective_fit(np.linalg.matrix_power(st, 3), s @ s)
    logger.debug("anomaly at %s: rho=%s residual=%.2e", lam, rho, residual)
    return AnomalyReport(lam, rho, residual, residual < bd.tol)


def reconstruct_s(bd: BasicData) -> SLambdaResult:
    """Recover S = S(0) without using the theory's S.

    The column is taken proportional to E_{κ†}, which gives S / S_{0,0} through
    :py:func:`s_lambda_main`; the scale is fixed by requiring (S T⁻¹)³ = S². When the theory
    carries S, the result's ``residual`` is max|S_rec − S|; it is logged, and a warning is
    logged when it is not within tolerance.

    Raises
    ------
    ReconstructionError :
        the unscaled matrix does not satisfy the projective relation within tolerance
    """
    ls = bd.label_set
    column = {kappa: bd.e_scalar(ls.dual(kappa)) for kappa in ls}
    unscaled = s_lambda_main(bd.without_s(), ls.unit, column, Reading.STATEMENT)
    anomaly = mcg_relation_check(bd, ls.unit, unscaled)
    if not anomaly.passed:
        raise ReconstructionError(
            f"no S satisfies the modular relation for this data (residual "
            f"{anomaly.residual:.2e})")
    if abs(anomaly.rho) <= bd.tol:
        raise ReconstructionError("vanishing anomaly in S reconstruction")
    operator = TorusBlockOperator(ls.unit, unscaled.operator.summands,
                                  unscaled.matrix / anomaly.rho)
    residual = _unit_residual(bd, operator)
    if residual is not None:
        logger.info("reconstructed S differs from the given S by %.2e", residual)
        if residual >= bd.tol:
            logger.warning(
                "reconstructed S disagrees with the given S (max difference %.2e), is S "
                "symmetric?", residual)
    return SLambdaResult(operator, Route.MAIN, Reading.STATEMENT, residual)


def s_column(bd: BasicData) -> Dict[str, complex]:
    """κ → S_{κ,0}, from the theory's S when present and from :py:func:`reconstruct_s`
    otherwise."""
    ls = bd.label_set
    s = bd.s if bd.has_s else reconstruct_s(bd).matrix
    return {kappa: complex(s[ls.index(kappa), ls.unit_index]) for kappa in ls}