import numpy as np
import pandas as pd
import pytest

from modfunctor.core.types import Relations
from ..report import RelationReport, ReportTable


def test_pass_flag_follows_tolerance():
    assert RelationReport.from_residual(Relations.ESS, ("0",), 1e-10, 1e-9).passed
    assert not RelationReport.from_residual(Relations.ESS, ("0",), 1e-9, 1e-9).passed


def test_nonvanishing_reports():
    assert RelationReport.nonvanishing(Relations.E_NONZERO, ("tau",), 1.6, 1e-9).passed
    failed = RelationReport.nonvanishing(Relations.E_NONZERO, ("tau",), 0.0, 1e-9)
    assert not failed.passed
    assert np.isinf(failed.residual)


def test_line_format():
    report = RelationReport.from_residual(Relations.PENTAGON, ("tau", "0", "tau"), 1.234e-12, 1e-9)
    assert report.to_line() == "pentagon\ttau,0,tau\t1.23e-12\tPASS"


def test_table_lines_and_summary():
    reports = [
        RelationReport.from_residual(Relations.ESS, ("0",), 0.0, 1e-9),
        RelationReport.from_residual(Relations.ESS, ("tau",), 1.0, 1e-9),
    ]
    table = ReportTable.from_reports(reports)
    assert not table.passed
    assert len(table.failures().data) == 1
    assert table.to_lines(machine=True) == [
        "ess\t0\t0.00e+00\tPASS",
        "ess\ttau\t1.00e+00\tFAIL",
    ]
    assert table.to_lines()[-1] == "# 2 checks, 1 failed"
    assert table.worst()[Relations.ESS] == 1.0


def test_table_requires_its_columns():
    with pytest.raises(ValueError, match="residual"):
        ReportTable(pd.DataFrame({"relation": ["ess"], "labels": ["0"], "passed": [True]}))
