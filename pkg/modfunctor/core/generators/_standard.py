"""Shared construction for multiplicity-free theories in the standard gauge.

In the standard gauge every R is 1, every F block with a unit external label is 1, and B is
fixed by the twists: B(0, y, y†) = d_y, B(x, x†, 0) = B(x, 0, x†) = 1 and otherwise
B(x, y, z) = √(d_y d_z / d_x) on the principal branch. The F entries left free are either given
by the generator or solved for numerically.
"""
import itertools
import logging
from typing import Callable, Dict, Iterator, List, Mapping, Optional

import numpy as np
from scipy.optimize import least_squares

from modfunctor.core.basic_data import BasicData, FKey, nonzero_f_keys
from modfunctor.core.curve_operators import curve_op_torus, torus_summands
from modfunctor.core.errors import ModularFunctorError
from modfunctor.core.labels import DimTable
from modfunctor.core.reconstruction import (
    run_torus_checks,
    s_from_twist_sandwich,
    s_lambda_main,
    twist_operator,
)
from modfunctor.core.relations import (
    abba_matrix,
    pentagon_matrix,
    pentsum_scalar,
    RelationReport,
    run_all,
)
from modfunctor.core.types import Reading
from modfunctor.core.util.projective import modular_relation

logger = logging.getLogger(__name__)

CoreF = Callable[[FKey], complex]


def standard_b(dims: DimTable, twists: Mapping[str, complex]) -> Dict[tuple, np.ndarray]:
    ls = dims.label_set
    unit = ls.unit
    b = {}
    for x, y, z in dims.triples():
        if x == unit:
            value = twists[y]
        elif z == unit or y == unit:
            value = 1
        else:
            value = np.sqrt(complex(twists[y] * twists[z] / twists[x]))
        b[(x, y, z)] = np.array([[value]], dtype=complex)
    return b


def standard_f(dims: DimTable, core: Optional[CoreF]=None) -> Dict[FKey, np.ndarray]:
    """1×1×1×1 F blocks: 1 when an external label is the unit, ``core(key)`` otherwise."""
    unit = dims.label_set.unit
    blocks = {}
    for key in nonzero_f_keys(dims):
        if core is None or unit in key[:4]:
            value = 1
        else:
            value = core(key)
        blocks[key] = np.full((1, 1, 1, 1), value, dtype=complex)
    return blocks


def normalize_s(s_standard: np.ndarray, twists: np.ndarray) -> np.ndarray:
    """Rescale S so that (S T⁻¹)³ = S² holds with anomaly 1."""
    rho, _ = modular_relation(s_standard, twists)
    return s_standard / rho


def assemble(
        dims: DimTable,
        twists: Mapping[str, complex],
        s_standard: np.ndarray,
        core: Optional[CoreF]=None,
        comment: Optional[str]=None,
) -> BasicData:
    ls = dims.label_set
    for triple in itertools.product(ls, repeat=3):
        if dims.dim(*triple) > 1:
            raise ValueError(f"standard gauge needs a multiplicity-free theory, see {triple}")
    r = {triple: np.ones((1, 1), dtype=complex) for triple in dims.triples()}
    s = normalize_s(s_standard, np.array([twists[x] for x in ls]))
    return BasicData(
        ls, dims, standard_f(dims, core), r, standard_b(dims, twists), twists, s=s,
        comment=comment)


def calibration_failures(bd: BasicData) -> List[RelationReport]:
    """Failing reports of the genus-zero suite and the statement-reading torus checks."""
    reports = run_all(bd, jobs=1) + run_torus_checks(bd, Reading.STATEMENT, jobs=1)
    return [report for report in reports if not report.passed]


def free_f_keys(dims: DimTable) -> List[FKey]:
    """Nonzero F keys with no unit among the external labels; the standard gauge leaves exactly
    these undetermined."""
    unit = dims.label_set.unit
    return [key for key in nonzero_f_keys(dims) if unit not in key[:4]]


def _e(bd: BasicData, lam: str) -> complex:
    ls = bd.label_set
    return complex(bd.f_block(lam, ls.dual(lam), ls.dual(lam), lam, ls.unit, ls.unit)[0, 0, 0, 0])


def f_residuals(bd: BasicData) -> np.ndarray:
    """Complex residuals that vanish exactly when the F-dependent relations hold: the pentagon and
    ABBA contractions with their full scalars, S_{0,0} E_λ = S_{0,λ†}, the curve operators at
    point label 0, and at every point label the agreement of both S(λ) routes together with
    (S(λ) T(λ)⁻¹)³ = S(λ)². S(0) must also reproduce S.

    Only multiplicity-free theories are supported.
    """
    ls, dims = bd.label_set, bd.dims
    dual, u = ls.dual, ls.unit_index
    parts: List[np.ndarray] = []
    for lam, mu, nu in itertools.product(ls, repeat=3):
        e = _e(bd, dual(lam))
        for contraction in (pentagon_matrix, abba_matrix):
            block = contraction(bd, lam, mu, nu)
            if block.size:
                parts.append((block - e * np.eye(block.shape[0])).ravel())
        expected = e * dims.dim(dual(nu), mu, dual(lam))
        parts.append(np.array([pentsum_scalar(bd, lam, mu, nu) - expected]))
    if bd.has_s:
        parts.append(np.array([
            bd.s[u, u] * _e(bd, lam) - bd.s[u, ls.index(dual(lam))] for lam in ls]))
    fusion = dims.fusion_matrices()
    for kappa in ls:
        operator = curve_op_torus(bd, ls.unit, kappa, Reading.STATEMENT, cross_check=False)
        parts.append((operator.matrix - fusion[kappa]).ravel())
    for lam in ls:
        if not torus_summands(bd, lam):
            continue
        main = s_lambda_main(bd, lam, reading=Reading.STATEMENT).matrix
        sandwich = s_from_twist_sandwich(bd, lam, Reading.STATEMENT).matrix
        twists = np.diag(twist_operator(bd, lam).matrix)
        parts.append((main - sandwich).ravel())
        st = main / twists[np.newaxis, :]
        parts.append((np.linalg.matrix_power(st, 3) - main @ main).ravel())
        if lam == ls.unit and bd.has_s:
            parts.append((main - bd.s).ravel())
    return np.concatenate(parts)


def solve_f_moves(
        dims: DimTable,
        twists: Mapping[str, complex],
        s_standard: np.ndarray,
        tol: float,
        starts: int=8,
        seed: int=0,
        comment: Optional[str]=None,
) -> Iterator[BasicData]:
    """Solve for the free F entries of a standard-gauge theory and yield each solution found.

    The unknowns are the real and imaginary parts of the entries at :py:func:`free_f_keys`.
    They are fitted with Levenberg-Marquardt least squares against :py:func:`f_residuals`, from
    ``starts`` normally distributed starting points. The remaining gauge freedom is fixed by
    asking F[ν, ν̃] = F[ν̃, ν] whenever both entries exist. Fits whose largest residual is not
    below ``tol`` are discarded.
    """
    ls = dims.label_set
    keys = free_f_keys(dims)
    n = len(keys)
    position = {key: i for i, key in enumerate(keys)}
    mirrored = [
        (i, position[key[:4] + (key[5], key[4])]) for i, key in enumerate(keys)
        if ls.index(key[4]) < ls.index(key[5]) and key[:4] + (key[5], key[4]) in position]

    def build(x: np.ndarray) -> BasicData:
        values = dict(zip(keys, x[:n] + 1j * x[n:]))
        return assemble(dims, twists, s_standard, values.__getitem__, comment)

    def residuals(x: np.ndarray) -> np.ndarray:
        values = x[:n] + 1j * x[n:]
        gauge = np.array([values[i] - values[j] for i, j in mirrored], dtype=complex)
        stacked = np.concatenate([f_residuals(build(x)), gauge])
        return np.concatenate([stacked.real, stacked.imag])

    rng = np.random.default_rng(seed)
    for start in range(starts):
        x0 = rng.normal(size=2 * n)
        try:
            fit = least_squares(residuals, x0, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15)
        except ModularFunctorError as error:
            logger.debug("F solve from start %d aborted: %s", start, error)
            continue
        residual = float(np.abs(fit.fun).max())
        logger.debug("F solve from start %d: residual %.2e after %d evaluations", start,
                     residual, fit.nfev)
        if residual < tol:
            yield build(fit.x)
