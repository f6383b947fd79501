from modfunctor.core.basic_data.cli import (
    emit_reports,
    EXIT_ABORTED,
    EXIT_PASSED,
    EXIT_RELATION_FAILED,
    open_document,
)
from modfunctor.core.reconstruction import run_torus_checks
from modfunctor.core.types import Reading
from modfunctor.core.util import click
from .genus_zero import run_all
from .report import ReportTable


@click.command()
@click.argument("document", type=click.File("rb"), metavar="BASIC_DATA_JSON")
@click.option("--tol", type=click.PositiveFloat(), default=None,
              help="override the tolerance carried by the document")
@click.option("--jobs", type=click.IntRange(min=1), default=None,
              help="worker processes for the exhaustive sweeps")
@click.option("--machine", is_flag=True, help="omit the summary line")
@click.option("--reading", type=click.Choice([r.value for r in Reading]), default=None,
              help="which twist prefactors the torus formulas use")
@click.pass_context
def relations(ctx, document, tol, jobs, machine, reading):
    """run the genus-zero suite and the once-punctured torus checks

    Every report is printed as a tab-separated line: relation, labels, residual, PASS or FAIL.
    Exit codes: 0 all relations hold, 1 some relation fails, 2 the document is malformed,
    3 interrupted.
    """
    try:
        bd = open_document(ctx, document, tol)
        reports = run_all(bd, jobs=jobs)
        reports.extend(run_torus_checks(bd, reading, jobs=jobs))
        table = ReportTable.from_reports(reports)
        emit_reports(table, machine)
        ctx.exit(EXIT_PASSED if table.passed else EXIT_RELATION_FAILED)
    except KeyboardInterrupt:
        ctx.exit(EXIT_ABORTED)
