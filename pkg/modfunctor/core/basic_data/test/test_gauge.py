import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modfunctor.core.relations import run_all
from modfunctor.core.test.factories import abelian_theory, fibonacci_theory
from ..gauge import gauge_transform

TAUS = ("tau", "tau", "tau")

_scalars = st.builds(
    lambda modulus, angle: modulus * np.exp(1j * angle),
    st.floats(min_value=0.5, max_value=2.0),
    st.floats(min_value=0.0, max_value=2 * np.pi),
)


@settings(max_examples=20, deadline=None)
@given(g=_scalars)
def test_relation_residuals_are_gauge_invariant(g):
    bd = fibonacci_theory()
    gauged = gauge_transform(bd, {TAUS: np.array([[g]])})

    reports = run_all(gauged, jobs=1)
    assert all(report.passed for report in reports), [r for r in reports if not r.passed][:3]


@settings(max_examples=10, deadline=None)
@given(g=_scalars, h=_scalars)
def test_abelian_relations_survive_independent_gauges(g, h):
    bd = abelian_theory(3)
    gauged = gauge_transform(bd, {("1", "1", "1"): np.array([[g]]),
                                  ("2", "2", "2"): np.array([[h]])})
    assert all(report.passed for report in run_all(gauged, jobs=1))


def test_gauge_moves_f_blocks_out_of_the_changed_space():
    bd = fibonacci_theory()
    g = 2.0
    gauged = gauge_transform(bd, {TAUS: np.array([[g]])})
    key = ("tau", "tau", "tau", "tau", "0", "tau")
    assert np.isclose(gauged.f_block(*key)[0, 0, 0, 0], bd.f_block(*key)[0, 0, 0, 0] / g ** 2)
    assert np.isclose(gauged.r_matrix(*TAUS)[0, 0], bd.r_matrix(*TAUS)[0, 0])


def test_gauge_refuses_spaces_with_a_unit_label():
    bd = fibonacci_theory()
    with pytest.raises(ValueError, match="preferred vector"):
        gauge_transform(bd, {("0", "tau", "tau"): np.array([[2.0]])})


def test_gauge_checks_the_shape_of_the_change():
    bd = fibonacci_theory()
    with pytest.raises(ValueError, match="shape"):
        gauge_transform(bd, {TAUS: np.eye(2)})
