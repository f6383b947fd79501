"""Curve operators on the once-punctured torus.

Operators act on the graded space ⊕_μ Z_{λ,μ,μ†} of a torus with one puncture labeled λ. A basis
vector is indexed by a summand (μ, i) with 0 ≤ i < dim Z_{λ,μ,μ†}.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from modfunctor.core.basic_data import BasicData
from modfunctor.core.config import ModFunctorConfig
from modfunctor.core.errors import CalibrationError
from modfunctor.core.relations import RelationReport
from modfunctor.core.types import Reading, Relations

logger = logging.getLogger(__name__)

Summand = Tuple[str, int]


def torus_summands(bd: BasicData, lam: str) -> List[Summand]:
    """Basis index (μ, i) of ⊕_μ Z_{λ,μ,μ†}, in label order."""
    ls = bd.label_set
    return [(mu, i) for mu in ls for i in range(bd.dims.dim(lam, mu, ls.dual(mu)))]


class TorusBlockOperator:
    """A square matrix on ⊕_μ Z_{λ,μ,μ†} for a point label λ.

    Rows are source summands and columns target summands, so ``matrix[a, b]`` is the coefficient
    of target basis vector b in the image of source basis vector a.
    """

    def __init__(self, point_label: str, summands: Sequence[Summand], matrix: np.ndarray) -> None:
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (len(summands), len(summands)):
            raise ValueError(
                f"operator at {point_label!r} has shape {matrix.shape}, expected "
                f"{(len(summands), len(summands))}")
        self._point_label = point_label
        self._summands = tuple(summands)
        self._matrix = matrix

    @property
    def point_label(self) -> str:
        return self._point_label

    @property
    def summands(self) -> Tuple[Summand, ...]:
        return self._summands

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def block(self, mu: str, nu: str) -> np.ndarray:
        """The block mapping the μ summand into the ν summand."""
        rows = [n for n, (x, _) in enumerate(self._summands) if x == mu]
        cols = [n for n, (x, _) in enumerate(self._summands) if x == nu]
        return self._matrix[np.ix_(rows, cols)]

    def __repr__(self) -> str:
        return f"<TorusBlockOperator point_label={self._point_label!r} size={len(self._summands)}>"


def summand_offsets(summands: Sequence[Summand]) -> Dict[str, int]:
    """Row of the first basis vector of each summand label."""
    offsets: Dict[str, int] = {}
    for n, (mu, _) in enumerate(summands):
        offsets.setdefault(mu, n)
    return offsets


def contractible_scalar(bd: BasicData, lam: str) -> complex:
    """The scalar S_{0,λ}/S_{0,0} by which a contractible curve labeled λ acts, computed from F as
    E_{λ†}. When the theory carries S the two are compared.

    Raises
    ------
    RelationError :
        vanishing E
    CalibrationError :
        E_{λ†} disagrees with S_{0,λ}/S_{0,0}
    """
    ls = bd.label_set
    value = bd.e_scalar(ls.dual(lam))
    if bd.has_s:
        u = ls.unit_index
        expected = bd.s[u, ls.index(lam)] / bd.s[u, u]
        if abs(value - expected) >= bd.tol:
            raise CalibrationError(
                f"contractible curve {lam!r}: E gives {value:.6g}, S gives {expected:.6g}")
    return value


def curve_chain_scalar(bd: BasicData, lam: str, mu: str, nu: str) -> complex:
    """Σ F_{0,ν}[λ μ†; λ† μ] R²(ν,λ†,μ) R(ν†,μ†,λ) F_{μ†,0}[λ λ†; ν† ν], which equals
    E_{λ†} dim Z_{μ,ν,λ†}."""
    ls = bd.label_set
    unit, dual = ls.unit, ls.dual
    f1 = bd.f_block(lam, dual(mu), dual(lam), mu, unit, nu)[0, 0]
    r2 = bd.r2_matrix(nu, dual(lam), mu)
    r = bd.r_matrix(dual(nu), dual(mu), lam)
    f2 = bd.f_block(lam, dual(lam), dual(nu), nu, dual(mu), unit)[:, :, 0, 0]
    if not (f1.size and f2.size):
        return 0j
    return complex(np.einsum("ji,jr,it,tr->", f1, r2, r, f2))


def curve_op_unlabeled(bd: BasicData, lam: str) -> TorusBlockOperator:
    """Z(β, λ) on the unpunctured torus: the fusion matrix N^λ, with N^λ_{μ,ν} = dim Z_{λ,μ,ν†}.

    The matrix is recomputed from F and R as E_λ⁻¹ times the curve chain at (λ†, μ, ν†).

    Raises
    ------
    CalibrationError :
        "COF-chain calibration failure" when the two computations disagree
    """
    ls = bd.label_set
    n_lam = bd.dims.fusion_matrices()[lam].astype(complex)
    e = bd.e_scalar(lam)
    chain = np.array([
        [curve_chain_scalar(bd, ls.dual(lam), mu, ls.dual(nu)) for nu in ls] for mu in ls
    ]) / e
    residual = float(np.abs(chain - n_lam).max())
    if residual >= bd.tol:
        raise CalibrationError(
            f"COF-chain calibration failure at label {lam!r} (residual {residual:.2e})")
    return TorusBlockOperator(ls.unit, torus_summands(bd, ls.unit), n_lam)


def _torus_block(bd: BasicData, lam: str, kappa: str, mu: str, nu_target: str, reading: Reading
                 ) -> np.ndarray:
    dual = bd.label_set.dual
    nu = dual(nu_target)
    into_f = bd.r_matrix(lam, mu, dual(mu)) @ bd.b_matrix(mu, dual(mu), lam)
    out_of_f = bd.r2_matrix(nu, dual(nu), lam) @ bd.b_matrix(lam, nu, dual(nu))
    closing = bd.r_matrix(dual(nu), dual(mu), dual(kappa))
    f = bd.f_block(dual(kappa), dual(mu), dual(nu), lam, dual(mu), nu)
    block = np.einsum("ir,krsm,mk,sj->ij", into_f, f, closing, out_of_f)
    prefactor = bd.twist(nu) if reading == Reading.STATEMENT else bd.twist(mu)
    return block / prefactor


def curve_op_torus(
        bd: BasicData,
        lam: str,
        kappa: str,
        reading: Optional[Reading]=None,
        cross_check: bool=True,
) -> TorusBlockOperator:
    """Z(β, κ) on the torus with one puncture labeled λ.

    Writing ν for the dual of the target summand label, the block between summands μ and ν†
    contracts B R out of Z_{λ,μ,μ†}, the block F_{μ†,ν}[κ† μ†; ν† λ] closed up by R on
    Z_{ν†,μ†,κ†}, and B R² into Z_{λ,ν†,ν}. It is divided by a
    twist scalar: d_ν under :py:attr:`Reading.STATEMENT`, d_μ under :py:attr:`Reading.PROOF`.

    Parameters
    ----------
    bd : BasicData
        theory
    lam : str
        point label
    kappa : str
        curve label
    reading : Reading
        which twist prefactor to use; defaults to the configured reading
    cross_check : bool
        at λ = 0 compare the result with N^κ

    Raises
    ------
    CalibrationError :
        the λ = 0 result differs from N^κ
    """
    reading = ModFunctorConfig().reading if reading is None else Reading(reading)
    summands = torus_summands(bd, lam)
    offsets = summand_offsets(summands)
    matrix = np.zeros((len(summands), len(summands)), dtype=complex)
    for mu, row in offsets.items():
        for nu_target, col in offsets.items():
            block = _torus_block(bd, lam, kappa, mu, nu_target, reading)
            matrix[row:row + block.shape[0], col:col + block.shape[1]] = block
    operator = TorusBlockOperator(lam, summands, matrix)
    if cross_check and lam == bd.label_set.unit:
        residual = _unit_residual(bd, kappa, operator)
        if residual >= bd.tol:
            raise CalibrationError(
                f"curve operator at point label 0 differs from N^{kappa} "
                f"(residual {residual:.2e}, reading {reading})")
    return operator


def _unit_residual(bd: BasicData, kappa: str, operator: TorusBlockOperator) -> float:
    n_kappa = bd.dims.fusion_matrices()[kappa]
    return float(np.abs(operator.matrix - n_kappa).max())


def check_curve_chain(bd: BasicData, lam: str) -> RelationReport:
    """Report form of the λ calibration performed by :py:func:`curve_op_unlabeled`."""
    ls = bd.label_set
    e = complex(bd.f_block(lam, ls.dual(lam), ls.dual(lam), lam, ls.unit, ls.unit)[0, 0, 0, 0])
    if abs(e) <= bd.tol:
        return RelationReport.nonvanishing(Relations.CURVE_CHAIN, (lam,), e, bd.tol)
    chain = np.array([
        [curve_chain_scalar(bd, ls.dual(lam), mu, ls.dual(nu)) for nu in ls] for mu in ls])
    residual = np.abs(chain / e - bd.dims.fusion_matrices()[lam]).max()
    return RelationReport.from_residual(Relations.CURVE_CHAIN, (lam,), residual, bd.tol)


def check_curve_torus_unit(bd: BasicData, kappa: str, reading: Optional[Reading]=None
                           ) -> RelationReport:
    """Report form of the point-label-0 cross-check of :py:func:`curve_op_torus`."""
    reading = ModFunctorConfig().reading if reading is None else Reading(reading)
    operator = curve_op_torus(bd, bd.label_set.unit, kappa, reading, cross_check=False)
    return RelationReport.from_residual(
        Relations.CURVE_TORUS_UNIT, (kappa,), _unit_residual(bd, kappa, operator),
        bd.tol)
