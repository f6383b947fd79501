import numpy as np
import pytest

from modfunctor.core.errors import CalibrationError
from modfunctor.core.test.factories import (
    abelian_theory,
    fibonacci_theory,
    perturbed_f,
    theory,
    THEORY_NAMES,
    trivial_theory,
)
from modfunctor.core.types import Reading
from ..torus import (
    check_curve_torus_unit,
    contractible_scalar,
    curve_op_torus,
    curve_op_unlabeled,
    torus_summands,
)

GOLDEN_RATIO = (1 + np.sqrt(5)) / 2


def test_contractible_scalar():
    assert contractible_scalar(trivial_theory(), "0") == 1
    assert np.isclose(contractible_scalar(fibonacci_theory(), "tau"), GOLDEN_RATIO, atol=1e-9)
    for label in abelian_theory(3).label_set:
        assert np.isclose(abs(contractible_scalar(abelian_theory(3), label)), 1)


def test_contractible_scalar_cross_checks_s():
    bd = fibonacci_theory()
    s = np.array(bd.s)
    s[0, 1] *= -1
    s[1, 0] *= -1
    with pytest.raises(CalibrationError):
        contractible_scalar(bd.with_s(s), "tau")


def test_unlabeled_curve_operators_are_fusion_matrices():
    bd = fibonacci_theory()
    assert np.allclose(curve_op_unlabeled(bd, "0").matrix, np.eye(2))
    assert np.allclose(curve_op_unlabeled(bd, "tau").matrix, [[0, 1], [1, 1]])
    assert np.allclose(curve_op_unlabeled(abelian_theory(2), "1").matrix, [[0, 1], [1, 0]])


def test_unlabeled_curve_operator_detects_corrupt_chain():
    bd = perturbed_f(fibonacci_theory(), ("tau", "tau", "tau", "tau", "0", "tau"))
    with pytest.raises(CalibrationError, match="COF-chain calibration failure at label 'tau'"):
        curve_op_unlabeled(bd, "tau")


def test_torus_summands_of_fibonacci():
    bd = fibonacci_theory()
    assert torus_summands(bd, "0") == [("0", 0), ("tau", 0)]
    assert torus_summands(bd, "tau") == [("tau", 0)]


@pytest.mark.parametrize("name", THEORY_NAMES)
def test_unit_curve_label_acts_as_identity(name):
    bd = theory(name)
    for lam in bd.label_set:
        operator = curve_op_torus(bd, lam, bd.label_set.unit)
        assert np.allclose(operator.matrix, np.eye(len(operator.summands)), atol=bd.tol)


@pytest.mark.parametrize("name", THEORY_NAMES)
def test_torus_operator_at_unit_point_label_is_fusion_matrix(name):
    bd = theory(name)
    for kappa in bd.label_set:
        operator = curve_op_torus(bd, bd.label_set.unit, kappa, Reading.STATEMENT)
        assert np.array_equal(np.round(operator.matrix.real).astype(int),
                              bd.dims.fusion_matrices()[kappa])


def test_trivial_torus_operator():
    operator = curve_op_torus(trivial_theory(), "0", "0")
    assert operator.matrix.shape == (1, 1)
    assert operator.matrix[0, 0] == 1


def test_proof_prefactor_fails_the_unit_cross_check():
    bd = fibonacci_theory()
    with pytest.raises(CalibrationError):
        curve_op_torus(bd, "0", "tau", Reading.PROOF)
    assert not check_curve_torus_unit(bd, "tau", Reading.PROOF).passed
    assert check_curve_torus_unit(bd, "tau", Reading.STATEMENT).passed


def test_block_access():
    bd = fibonacci_theory()
    operator = curve_op_torus(bd, "0", "tau")
    assert np.allclose(operator.block("0", "tau"), [[1]])
    assert np.allclose(operator.block("0", "0"), [[0]])
