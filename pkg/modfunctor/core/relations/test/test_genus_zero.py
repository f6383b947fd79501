import numpy as np
import pytest

from modfunctor.core.errors import RelationError
from modfunctor.core.test.factories import (
    abelian_theory,
    ALL_TAU,
    fibonacci_theory,
    perturbed_f,
    theory,
    THEORY_NAMES,
    trivial_theory,
)
from modfunctor.core.types import Relations
from ..genus_zero import (
    check_abba,
    check_e_nonzero,
    check_ess,
    check_pentagon_consistency,
    check_pentagon_delta,
    check_pentsum,
    check_s_row_nonzero,
    check_unit_F_cases,
    pentagon_matrix,
    run_all,
)

GOLDEN_RATIO = (1 + np.sqrt(5)) / 2


@pytest.mark.parametrize("name", THEORY_NAMES)
def test_builtin_theories_pass_the_suite(name):
    reports = run_all(theory(name), jobs=1)
    failures = [report for report in reports if not report.passed]
    assert not failures, failures[:5]


def test_trivial_theory_has_zero_residuals():
    reports = run_all(trivial_theory(), jobs=1)
    assert all(report.residual == 0 for report in reports)


def test_unit_cases_cover_every_position():
    reports = check_unit_F_cases(fibonacci_theory())
    positions = {tuple(i for i, x in enumerate(r.labels) if x == "0") for r in reports}
    assert {(0,), (1,), (2,), (3,)} <= positions
    assert all(report.relation == Relations.UNIT_F for report in reports)


def test_pentagon_matrix_is_e_times_identity():
    bd = fibonacci_theory()
    p = pentagon_matrix(bd, "tau", "tau", "tau")
    assert np.allclose(p, GOLDEN_RATIO * np.eye(1))


def test_abelian_contractions_are_exact():
    bd = abelian_theory(2)
    for labels in [("1", "1", "0"), ("1", "0", "1"), ("0", "1", "1")]:
        assert check_pentagon_delta(bd, *labels).residual < 1e-15
        assert check_abba(bd, *labels).residual < 1e-15


def test_pentsum_vanishes_where_the_space_does():
    bd = fibonacci_theory()
    report = check_pentsum(bd, "tau", "0", "0")
    assert bd.dims.dim("0", "0", "tau") == 0
    assert report.passed
    assert report.residual == 0


def test_pentsum_agrees_with_trace_of_pentagon():
    bd = fibonacci_theory()
    assert check_pentagon_consistency(bd, "tau", "tau", "tau").residual < 1e-12


def test_perturbed_f_is_caught_and_named():
    bd = perturbed_f(fibonacci_theory(), ("tau", "tau", "tau", "tau", "0", "tau"))
    failures = [report for report in run_all(bd, jobs=1) if not report.passed]
    assert failures
    assert max(report.residual for report in failures) >= 1e-4
    assert {report.relation for report in failures} & {Relations.PENTAGON, Relations.ABBA}


def test_genus_zero_suite_does_not_see_the_all_tau_corner():
    bd = perturbed_f(fibonacci_theory(), ALL_TAU)
    reports = run_all(bd, jobs=1)
    assert all(r.passed for r in reports if r.relation == Relations.PENTAGON)


def test_ess_requires_s():
    with pytest.raises(RelationError, match="S required"):
        check_ess(fibonacci_theory().without_s())


def test_ess_detects_rescaled_s():
    bd = fibonacci_theory()
    doubled = bd.with_s(2 * bd.s)
    assert all(report.passed for report in check_ess(doubled))
    first_row = doubled.s[0].copy()
    first_row[1] *= 1.5
    s = np.array(doubled.s)
    s[0] = first_row
    s[1, 0] = first_row[1]
    skewed = bd.with_s(s)
    assert not all(report.passed for report in check_ess(skewed))


def test_vanishing_e_is_reported():
    bd = fibonacci_theory().with_f_block(
        ("tau", "tau", "tau", "tau", "0", "0"), np.zeros((1, 1, 1, 1)))
    reports = check_e_nonzero(bd)
    failed = [report.labels for report in reports if not report.passed]
    assert failed == [("tau",)]


def test_s_row_checks_are_skipped_without_s():
    assert check_s_row_nonzero(fibonacci_theory().without_s()) == []
