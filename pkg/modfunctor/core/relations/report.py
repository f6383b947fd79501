from typing import Iterable, List, NamedTuple, Sequence

import numpy as np
import pandas as pd

from modfunctor.core.types import ValidatedTable


class RelationReport(NamedTuple):
    """The outcome of checking one relation at one tuple of labels. ``passed`` holds exactly when
    ``residual < tol``."""

    relation: str
    labels: Sequence[str]
    residual: float
    passed: bool

    @classmethod
    def from_residual(cls, relation: str, labels: Sequence[str], residual: float, tol: float
                      ) -> "RelationReport":
        residual = float(residual)
        return cls(relation, tuple(labels), residual, bool(residual < tol))

    @classmethod
    def nonvanishing(cls, relation: str, labels: Sequence[str], value: complex, tol: float
                     ) -> "RelationReport":
        """Report a quantity that must stay away from zero. The residual is 0 when
        ``|value| > tol`` and infinite otherwise."""
        residual = 0.0 if abs(value) > tol else np.inf
        return cls.from_residual(relation, labels, residual, tol)

    def to_line(self) -> str:
        return "\t".join((
            self.relation,
            ",".join(self.labels),
            f"{self.residual:.2e}",
            "PASS" if self.passed else "FAIL",
        ))


class ReportTable(ValidatedTable):
    """A table of :py:class:`RelationReport` rows, one per relation and label tuple."""

    class Columns:
        RELATION = 'relation'
        LABELS = 'labels'
        RESIDUAL = 'residual'
        PASSED = 'passed'

    required_fields = {
        Columns.RELATION,
        Columns.LABELS,
        Columns.RESIDUAL,
        Columns.PASSED,
    }

    def __init__(self, reports: pd.DataFrame) -> None:
        super().__init__(reports, ReportTable.required_fields)

    @classmethod
    def from_reports(cls, reports: Iterable[RelationReport]) -> "ReportTable":
        rows = [
            {
                cls.Columns.RELATION: report.relation,
                cls.Columns.LABELS: ",".join(report.labels),
                cls.Columns.RESIDUAL: report.residual,
                cls.Columns.PASSED: report.passed,
            }
            for report in reports
        ]
        return cls(pd.DataFrame(rows, columns=sorted(cls.required_fields)))

    @property
    def passed(self) -> bool:
        return bool(self.data[self.Columns.PASSED].all())

    def failures(self) -> "ReportTable":
        return ReportTable(self.data[~self.data[self.Columns.PASSED].astype(bool)])

    def worst(self) -> pd.Series:
        """The largest residual recorded for each relation."""
        return self.data.groupby(self.Columns.RELATION)[self.Columns.RESIDUAL].max()

    def to_lines(self, machine: bool=False) -> List[str]:
        """Render one tab-separated ``relation  labels  residual  PASS|FAIL`` line per row. Unless
        ``machine`` is set, a closing summary line is appended."""
        lines = [
            RelationReport(
                row[self.Columns.RELATION],
                tuple(filter(None, row[self.Columns.LABELS].split(","))),
                row[self.Columns.RESIDUAL],
                bool(row[self.Columns.PASSED]),
            ).to_line()
            for _, row in self.data.iterrows()
        ]
        if not machine:
            n_failed = int((~self.data[self.Columns.PASSED].astype(bool)).sum())
            lines.append(f"# {len(self.data)} checks, {n_failed} failed")
        return lines
