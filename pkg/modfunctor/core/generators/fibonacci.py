import logging

import numpy as np

from modfunctor.core.basic_data import BasicData
from modfunctor.core.config import ModFunctorConfig
from modfunctor.core.errors import GeneratorError
from modfunctor.core.labels import DimTable, LabelSet
from modfunctor.core.types import UNIT_LABEL
from modfunctor.core.util.projective import modular_relation
from ._standard import calibration_failures, solve_f_moves

logger = logging.getLogger(__name__)

TAU = "tau"

TWIST_ORDER = 20
"""Twists are searched among the roots of unity of this order."""


def fibonacci_dims() -> DimTable:
    label_set = LabelSet.from_names([UNIT_LABEL, TAU])
    return DimTable.from_rule(
        label_set, lambda a, b, c: int([a, b, c].count(TAU) != 1))


def fibonacci() -> BasicData:
    """The Fibonacci theory: labels 0 and τ with τ ⊗ τ = 0 ⊕ τ.

    S is read off the eigenvectors of N^τ, up to scale. The twist of τ is the first root of unity
    for which S satisfies the modular relation, and the all-τ F-move is solved numerically from
    the relations (see :py:func:`solve_f_moves`). The first solution passing the full relation
    suite is returned.

    Raises
    ------
    GeneratorError :
        no twist and F-move solution passes the relation suite
    """
    tol = ModFunctorConfig().tol
    dims = fibonacci_dims()
    u = dims.label_set.unit_index
    fusion = dims.fusion_matrices()[TAU].astype(float)
    eigenvalues, eigenvectors = np.linalg.eigh(fusion)
    eigenvectors = eigenvectors * np.sign(eigenvectors[u])[np.newaxis, :]
    s_standard = eigenvectors[:, ::-1].T
    logger.debug("golden ratio from fusion spectrum: %.15f", eigenvalues[-1])

    for j in range(TWIST_ORDER):
        twist = np.exp(2j * np.pi * j / TWIST_ORDER)
        _, residual = modular_relation(s_standard, np.array([1, twist]))
        if residual >= tol:
            continue
        comment = (f"fibonacci: standard gauge, d_tau = exp(2 pi i {j}/{TWIST_ORDER}), "
                   f"F solved from the relations")
        for bd in solve_f_moves(dims, {UNIT_LABEL: 1, TAU: twist}, s_standard, tol,
                                comment=comment):
            failures = calibration_failures(bd)
            if not failures:
                return bd
            logger.debug("fibonacci candidate j=%d fails %s", j, failures[0].relation)
    raise GeneratorError("fibonacci: no twist and F-move solution passes the relation suite")
