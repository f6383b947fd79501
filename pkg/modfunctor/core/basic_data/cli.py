from typing import IO, Optional

from modfunctor.core.errors import DocumentError
from modfunctor.core.relations import ReportTable, run_all
from modfunctor.core.util import click
from .basic_data import BasicData, load

EXIT_PASSED = 0
EXIT_RELATION_FAILED = 1
EXIT_DOCUMENT_ERROR = 2
EXIT_ABORTED = 3


def open_document(ctx, document: IO[bytes], tol: Optional[float]=None) -> BasicData:
    """Load the document named on the command line, exiting with code 2 when it is malformed."""
    try:
        bd = load(document, getattr(document, "name", None))
    except DocumentError as ex:
        click.echo(f"error: {ex}", err=True)
        ctx.exit(EXIT_DOCUMENT_ERROR)
    return bd if tol is None else bd.with_tol(tol)


def emit_reports(table: ReportTable, machine: bool) -> None:
    for line in table.to_lines(machine):
        click.echo(line)


@click.command()
@click.argument("document", type=click.File("rb"), metavar="BASIC_DATA_JSON")
@click.option("--tol", type=click.PositiveFloat(), default=None,
              help="override the tolerance carried by the document")
@click.option("--jobs", type=click.IntRange(min=1), default=None,
              help="worker processes for the exhaustive sweeps")
@click.option("--machine", is_flag=True, help="omit the summary line")
@click.pass_context
def validate(ctx, document, tol, jobs, machine):
    """load a basic-data document and run the genus-zero relation suite

    Exit codes: 0 all relations hold, 1 some relation fails, 2 the document is malformed,
    3 interrupted.
    """
    try:
        bd = open_document(ctx, document, tol)
        table = ReportTable.from_reports(run_all(bd, jobs=jobs))
        emit_reports(table, machine)
        ctx.exit(EXIT_PASSED if table.passed else EXIT_RELATION_FAILED)
    except KeyboardInterrupt:
        ctx.exit(EXIT_ABORTED)
