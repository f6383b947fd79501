import warnings

import numpy as np
import pytest

from modfunctor.core.errors import AmbiguityWarning, RelationError
from modfunctor.core.test.factories import (
    abelian_theory,
    fibonacci_theory,
    theory,
    THEORY_NAMES,
    trivial_theory,
)
from modfunctor.core.types import Reading, Relations
from ..c_matrix import (
    c_matrix,
    c_matrix_from_fusion,
    check_dehn,
    dehn_closed_form,
    dehn_coefficients,
    fusion_product_check,
    inverse_dehn_coefficients,
)

GOLDEN_RATIO = (1 + np.sqrt(5)) / 2
FIBONACCI_C = np.array([[1, 1], [GOLDEN_RATIO, -1 / GOLDEN_RATIO]])


def test_trivial_c_matrix():
    assert np.allclose(c_matrix(trivial_theory()).matrix, [[1]])


def test_fibonacci_c_matrix_from_s_and_from_fusion_agree():
    bd = fibonacci_theory()
    assert np.allclose(c_matrix(bd).matrix, FIBONACCI_C, atol=1e-9)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        from_fusion = c_matrix_from_fusion(bd.without_s())
    assert np.allclose(from_fusion.matrix, FIBONACCI_C, atol=1e-9)
    assert not [w for w in caught if issubclass(w.category, AmbiguityWarning)]


@pytest.mark.parametrize("name", THEORY_NAMES)
def test_c_matrix_invariants(name):
    bd = theory(name)
    c = c_matrix(bd)
    assert c.unit_row_residual() < 1e-9
    assert c.cond() < 1e6
    assert all(report.passed for report in fusion_product_check(bd, c))


def test_abelian_c_matrix_without_s_is_a_symmetric_relabeling():
    bd = abelian_theory(3)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AmbiguityWarning)
        c = c_matrix_from_fusion(bd.without_s())
    expected = c_matrix(bd).matrix
    assert np.allclose(c.matrix, c.matrix.T)
    columns = {tuple(np.round(col, 9)) for col in c.matrix.T}
    assert columns == {tuple(np.round(col, 9)) for col in expected.T}


def test_c_matrix_needs_nonvanishing_first_column_of_s():
    bd = fibonacci_theory()
    s = np.array(bd.s)
    s[1, 0] = 0
    with pytest.raises(RelationError, match="vanishes"):
        c_matrix(bd.with_s(s))


def test_trivial_dehn_coefficients():
    assert np.isclose(dehn_coefficients(trivial_theory())["0"], 1)
    assert np.isclose(inverse_dehn_coefficients(trivial_theory())["0"], 1)


@pytest.mark.parametrize("name", THEORY_NAMES)
def test_dehn_coefficients_expand_the_twist(name):
    bd = theory(name)
    c = c_matrix(bd)
    coefficients = dehn_coefficients(bd, c)
    values = np.array([coefficients[k] for k in bd.label_set])
    assert np.allclose(values @ c.matrix, bd.twists(), atol=1e-9)
    closed = dehn_closed_form(bd, Reading.STATEMENT)
    assert all(np.isclose(coefficients[k], closed[k], atol=1e-9) for k in bd.label_set)


def test_inverse_dehn_coefficients_expand_the_inverse_twist():
    bd = fibonacci_theory()
    c = c_matrix(bd)
    coefficients = inverse_dehn_coefficients(bd, c)
    values = np.array([coefficients[k] for k in bd.label_set])
    assert np.allclose(values @ c.matrix, 1 / bd.twists(), atol=1e-9)


def test_proof_reading_of_the_closed_form_disagrees():
    reports = check_dehn(fibonacci_theory(), Reading.PROOF)
    cerne = {r.labels: r.passed for r in reports if r.relation == Relations.CERNE}
    assert cerne[("0",)]
    assert not cerne[("tau",)]
    assert all(r.passed for r in check_dehn(fibonacci_theory(), Reading.STATEMENT))
