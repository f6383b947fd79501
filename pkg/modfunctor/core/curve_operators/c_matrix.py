import itertools
import logging
import warnings
from typing import Dict, Iterator, List, Optional, Sequence

import numpy as np
from scipy.linalg import eig

from modfunctor.core.basic_data import BasicData
from modfunctor.core.config import ModFunctorConfig
from modfunctor.core.errors import (
    AmbiguityWarning,
    CalibrationError,
    EigenvectorExtractionError,
    RelationError,
)
from modfunctor.core.labels import LabelSet
from modfunctor.core.relations import RelationReport
from modfunctor.core.types import Reading, Relations
from modfunctor.core.util.projective import modular_relation

logger = logging.getLogger(__name__)

_MAX_ASSIGNMENTS = 64


class CMatrix:
    """C_{λ,μ}, the scalar by which the curve operator Z(γ, λ) acts on the μ-labeled torus
    summand. Rows are indexed by λ and columns by μ, both in label order."""

    def __init__(self, label_set: LabelSet, matrix: np.ndarray) -> None:
        matrix = np.asarray(matrix, dtype=complex)
        n = len(label_set)
        if matrix.shape != (n, n):
            raise ValueError(f"C has shape {matrix.shape}, expected ({n}, {n})")
        self._label_set = label_set
        self._matrix = matrix

    @property
    def label_set(self) -> LabelSet:
        return self._label_set

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def __getitem__(self, item) -> complex:
        lam, mu = item
        ls = self._label_set
        return complex(self._matrix[ls.index(lam), ls.index(mu)])

    def column(self, mu: str) -> np.ndarray:
        return self._matrix[:, self._label_set.index(mu)]

    def cond(self) -> float:
        return float(np.linalg.cond(self._matrix))

    def unit_row_residual(self) -> float:
        """max_μ |C_{0,μ} − 1|."""
        return float(np.abs(self._matrix[self._label_set.index(self._label_set.unit)] - 1).max())

    def __repr__(self) -> str:
        return f"<CMatrix labels={list(self._label_set)}>"


def c_matrix_from_s(bd: BasicData) -> CMatrix:
    """C_{λ,μ} = S_{μ,λ} / S_{μ,0}.

    Raises
    ------
    RelationError :
        the theory has no S, or some S_{μ,0} vanishes
    """
    if not bd.has_s:
        raise RelationError("S required")
    s = bd.s
    first_column = s[:, bd.label_set.unit_index]
    vanishing = np.flatnonzero(np.abs(first_column) <= bd.tol)
    if vanishing.size:
        raise RelationError(
            f"S_{{mu,0}} vanishes at mu={list(bd.label_set)[vanishing[0]]!r}")
    return CMatrix(bd.label_set, (s / first_column[:, np.newaxis]).T)


def _fusion_eigencolumns(bd: BasicData) -> List[np.ndarray]:
    """Joint eigenvalue vectors of the fusion family, one per common left eigenvector.

    Raises
    ------
    EigenvectorExtractionError :
        the eigenvectors of a generic combination of the N^λ do not diagonalize the family
    """
    ls = bd.label_set
    family = bd.dims.fusion_matrices()
    stack = family.stack().astype(complex)
    weights = np.sqrt(np.arange(2, len(ls) + 2))
    combination = np.tensordot(weights, stack, axes=1)
    _, left = eig(combination, left=True, right=False)
    vectors = left.conj()
    if np.linalg.cond(vectors) > bd.cond_limit:
        raise EigenvectorExtractionError(
            "eigenvector extraction failed: fusion family is not diagonalizable")
    scale = max(1.0, float(np.abs(stack).max()))
    columns = []
    for vector in vectors.T:
        vector = vector / np.linalg.norm(vector)
        values = np.array([np.vdot(vector, n.T @ vector) for n in stack])
        residual = max(np.abs(n.T @ vector - value * vector).max()
                       for n, value in zip(stack, values))
        if residual >= bd.tol * scale:
            raise EigenvectorExtractionError(
                f"eigenvector extraction failed: fusion matrices share no common eigenbasis "
                f"(residual {residual:.2e})")
        columns.append(values)
    return columns


def _symmetric_assignments(
        columns: Sequence[np.ndarray], unit_index: int, unit_column: int, tol: float
) -> Iterator[List[int]]:
    """Assignments label index → column index with C_{λ,μ} C_{μ,0} = C_{μ,λ} C_{λ,0}."""
    n = len(columns)
    first = columns[unit_column]

    def consistent(assigned: Dict[int, int], mu: int, col: int) -> bool:
        for lam, other in assigned.items():
            lhs = columns[col][lam] * first[mu]
            rhs = columns[other][mu] * first[lam]
            if abs(lhs - rhs) >= tol * max(1.0, abs(lhs)):
                return False
        return True

    def extend(assigned: Dict[int, int], free: List[int], remaining: List[int]):
        if not remaining:
            yield [assigned[mu] for mu in range(n)]
            return
        mu = remaining[0]
        for col in free:
            if consistent(assigned, mu, col):
                assigned[mu] = col
                yield from extend(assigned, [c for c in free if c != col], remaining[1:])
                del assigned[mu]

    yield from extend(
        {unit_index: unit_column},
        [c for c in range(n) if c != unit_column],
        [mu for mu in range(n) if mu != unit_index])


def c_matrix_from_fusion(bd: BasicData) -> CMatrix:
    """C from the joint spectrum of the fusion matrices, without using S.

    The column of the unit label is the one equal to (E_{λ†})_λ. The other columns are matched to
    labels by the symmetry C_{λ,μ} C_{μ,0} = C_{μ,λ} C_{λ,0}. When several matchings survive, the
    ones for which S_{μ,λ} ∝ C_{λ,μ} E_{μ†} satisfies the modular relation with the theory's
    twists are kept, and an :py:class:`AmbiguityWarning` is issued if they still differ.

    Raises
    ------
    EigenvectorExtractionError :
        defective joint spectrum
    CalibrationError :
        no eigenvalue vector matches E, or no symmetric matching exists
    """
    ls = bd.label_set
    columns = _fusion_eigencolumns(bd)
    e_dagger = np.array([bd.e_scalar(ls.dual(lam)) for lam in ls])
    distances = [float(np.abs(column - e_dagger).max()) for column in columns]
    unit_column = int(np.argmin(distances))
    if distances[unit_column] >= bd.tol * max(1.0, float(np.abs(e_dagger).max())):
        raise CalibrationError(
            f"no fusion eigenvalue vector matches E (closest residual "
            f"{distances[unit_column]:.2e})")

    candidates = list(itertools.islice(
        _symmetric_assignments(columns, ls.index(ls.unit), unit_column, bd.tol),
        _MAX_ASSIGNMENTS))
    if not candidates:
        raise CalibrationError("fusion eigenvalue vectors admit no symmetric label matching")
    matrices = [np.stack([columns[col] for col in assignment], axis=1)
                for assignment in candidates]
    if len(matrices) > 1:
        twists = bd.twists()
        modular = [m for m in matrices
                   if modular_relation((m * e_dagger[np.newaxis, :]).T, twists)[1] < bd.tol]
        if modular:
            matrices = modular
    chosen = matrices[0]
    if any(np.abs(m - chosen).max() >= bd.tol for m in matrices[1:]):
        warnings.warn(
            f"C-matrix columns are determined only up to {len(matrices)} relabelings; "
            f"using the first", AmbiguityWarning)
    return CMatrix(ls, chosen)


def c_matrix(bd: BasicData) -> CMatrix:
    """The C-matrix of ``bd``.

    With S present, C is read off S and compared column by column, up to permutation, with the
    joint spectrum of the fusion matrices. Without S it is built by
    :py:func:`c_matrix_from_fusion`.

    Raises
    ------
    RelationError :
        C is singular
    CalibrationError :
        the two constructions disagree
    """
    if bd.has_s:
        c = c_matrix_from_s(bd)
        unmatched = list(_fusion_eigencolumns(bd))
        for mu in bd.label_set:
            column = c.column(mu)
            residuals = [float(np.abs(column - other).max()) for other in unmatched]
            best = int(np.argmin(residuals))
            if residuals[best] >= bd.tol * max(1.0, float(np.abs(column).max())):
                raise CalibrationError(
                    f"C column {mu!r} from S is not a joint eigenvalue vector of the fusion "
                    f"matrices (residual {residuals[best]:.2e})")
            unmatched.pop(best)
    else:
        c = c_matrix_from_fusion(bd)
    if c.cond() > bd.cond_limit:
        raise RelationError(f"C is singular (condition number {c.cond():.2e})")
    logger.debug("C-matrix condition number %.3g", c.cond())
    return c


def fusion_product_check(bd: BasicData, c: CMatrix) -> List[RelationReport]:
    """C_{λ,μ} C_{λ',μ} = Σ_ν D(λ, λ', ν†) C_{ν,μ}, one report per (λ, λ')."""
    ls = bd.label_set
    reports = []
    for lam, lam_prime in itertools.product(ls, repeat=2):
        lhs = c.matrix[ls.index(lam)] * c.matrix[ls.index(lam_prime)]
        weights = np.array([bd.dims.n(lam, lam_prime, nu) for nu in ls])
        rhs = weights @ c.matrix
        reports.append(RelationReport.from_residual(
            Relations.FUSION_PRODUCT, (lam, lam_prime), np.abs(lhs - rhs).max(), bd.tol))
    return reports


def _solve(bd: BasicData, c: CMatrix, target: np.ndarray) -> np.ndarray:
    if c.cond() > bd.cond_limit:
        raise RelationError(f"C is singular (condition number {c.cond():.2e})")
    coefficients = np.linalg.solve(c.matrix.T, target)
    residual = float(np.abs(coefficients @ c.matrix - target).max())
    if residual >= bd.tol:
        raise CalibrationError(f"Dehn coefficient solve left residual {residual:.2e}")
    return coefficients


def dehn_closed_form(bd: BasicData, reading: Optional[Reading]=None) -> Dict[str, complex]:
    """Dehn coefficients read off S: S_{κ†,0} / d_{κ†} under :py:attr:`Reading.STATEMENT`,
    d_{κ†} S_{κ†,0} under :py:attr:`Reading.PROOF`."""
    if not bd.has_s:
        raise RelationError("S required")
    reading = ModFunctorConfig().reading if reading is None else Reading(reading)
    ls = bd.label_set
    closed = {}
    for kappa in ls:
        dagger = ls.dual(kappa)
        s_value = bd.s[ls.index(dagger), ls.unit_index]
        if reading == Reading.STATEMENT:
            closed[kappa] = complex(s_value / bd.twist(dagger))
        else:
            closed[kappa] = complex(s_value * bd.twist(dagger))
    return closed


def dehn_coefficients(bd: BasicData, c: Optional[CMatrix]=None, cross_check: bool=True
                      ) -> Dict[str, complex]:
    """Coefficients c_κ expressing the Dehn twist as Σ_κ c_κ Z(γ, κ), i.e. the solution of
    d_μ = Σ_κ c_κ C_{κ,μ}.

    When the theory carries S and ``cross_check`` is set, the solution is compared with the closed
    form S_{κ†,0} / d_{κ†}.

    Raises
    ------
    RelationError :
        C is singular
    CalibrationError :
        the solve or the closed-form comparison leaves a residual
    """
    c = c_matrix(bd) if c is None else c
    coefficients = _solve(bd, c, bd.twists())
    result = dict(zip(bd.label_set, (complex(x) for x in coefficients)))
    if cross_check and bd.has_s:
        closed = dehn_closed_form(bd, Reading.STATEMENT)
        residual = max(abs(result[k] - closed[k]) for k in result)
        if residual >= bd.tol:
            raise CalibrationError(
                f"Dehn coefficients disagree with their closed form in S "
                f"(residual {residual:.2e})")
    return result


def inverse_dehn_coefficients(bd: BasicData, c: Optional[CMatrix]=None) -> Dict[str, complex]:
    """Coefficients c̃_κ of the inverse Dehn twist: d_μ⁻¹ = Σ_κ c̃_κ C_{κ,μ}."""
    c = c_matrix(bd) if c is None else c
    coefficients = _solve(bd, c, 1 / bd.twists())
    return dict(zip(bd.label_set, (complex(x) for x in coefficients)))


def check_dehn(bd: BasicData, reading: Optional[Reading]=None) -> List[RelationReport]:
    """Reports for the Dehn-twist expansion: the definitional residual of the solve and, when S is
    present, the agreement with the closed form in the given reading."""
    reading = ModFunctorConfig().reading if reading is None else Reading(reading)
    c = c_matrix(bd)
    coefficients = np.linalg.solve(c.matrix.T, bd.twists())
    reports = [RelationReport.from_residual(
        Relations.DEHN, (), np.abs(coefficients @ c.matrix - bd.twists()).max(), bd.tol)]
    if bd.has_s:
        closed = dehn_closed_form(bd, reading)
        for kappa, value in zip(bd.label_set, coefficients):
            reports.append(RelationReport.from_residual(
                Relations.CERNE, (kappa,), abs(value - closed[kappa]), bd.tol))
    return reports
