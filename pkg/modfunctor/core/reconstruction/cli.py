import json

import numpy as np

from modfunctor.core.basic_data.cli import (
    EXIT_ABORTED,
    EXIT_DOCUMENT_ERROR,
    EXIT_PASSED,
    EXIT_RELATION_FAILED,
    open_document,
)
from modfunctor.core.errors import LabelError, ModularFunctorError
from modfunctor.core.relations import RelationReport
from modfunctor.core.types import Reading, Relations, Route
from modfunctor.core.util import click
from modfunctor.core.util.logging import LogEncoder, provenance
from .s_lambda import mcg_relation_check, s_lambda_routes


def format_entry(z: complex, tol: float) -> str:
    if abs(z.imag) < tol:
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}j"


def format_matrix(matrix: np.ndarray, tol: float) -> str:
    return "\n".join(
        "[" + " ".join(format_entry(complex(z), tol) for z in row) + "]" for row in matrix)


@click.command("s-matrix")
@click.argument("document", type=click.File("rb"), metavar="BASIC_DATA_JSON")
@click.option("--label", default=None, help="point label λ (default: the unit label)")
@click.option("--variant", type=click.Choice([r.value for r in Route]),
              default=Route.MAIN.value, show_default=True,
              help="which route's S(λ) to print")
@click.option("--reading", type=click.Choice([r.value for r in Reading]), default=None,
              help="which twist prefactors the formulas use")
@click.option("--tol", type=click.PositiveFloat(), default=None,
              help="override the tolerance carried by the document")
@click.option("--jobs", type=click.IntRange(min=1), default=None,
              help="worker processes; the two routes run in parallel when 2 or more")
@click.option("--machine", is_flag=True,
              help="print one json fragment with provenance instead of text")
@click.pass_context
def s_matrix(ctx, document, label, variant, reading, tol, jobs, machine):
    """S(λ) on the once-punctured torus, computed by both routes

    Exit codes: 0 the routes agree (and, at the unit label, S(0) matches the document's S or the
    reconstruction fixed point holds), 1 otherwise, 2 the document is malformed or λ unknown,
    3 interrupted.
    """
    try:
        bd = open_document(ctx, document, tol)
        ls = bd.label_set
        try:
            lam = ls.unit if label is None else ls.check(label)
        except LabelError as ex:
            click.echo(f"error: {ex}", err=True)
            ctx.exit(EXIT_DOCUMENT_ERROR)
        reading = None if reading is None else Reading(reading)

        reports = []
        try:
            routes = s_lambda_routes(bd, lam, reading, jobs=jobs)
        except ModularFunctorError as ex:
            click.echo(f"error: {ex}", err=True)
            ctx.exit(EXIT_RELATION_FAILED)
        main, sandwich = routes[Route.MAIN], routes[Route.SANDWICH]
        residual = (float(np.abs(main.matrix - sandwich.matrix).max())
                    if main.matrix.size else 0.0)
        reports.append(RelationReport.from_residual(
            Relations.ROUTE_EQUIVALENCE, (lam,), residual, bd.tol))
        if lam == ls.unit:
            if bd.has_s:
                reports.append(RelationReport.from_residual(
                    Relations.MAIN_SELF_CONSISTENCY, (lam,), main.residual, bd.tol))
            else:
                reports.append(mcg_relation_check(bd, lam, main).to_report())

        chosen = main if variant == Route.MAIN.value else sandwich
        if machine:
            fragment = chosen.to_fragment()
            fragment["reports"] = [report._asdict() for report in reports]
            fragment["provenance"] = provenance(
                "s_matrix", {"label": lam, "variant": variant, "reading": str(chosen.reading),
                             "tol": bd.tol})
            click.echo(json.dumps(fragment, cls=LogEncoder))
        else:
            click.echo(f"# S({lam}) by the {variant} route, summands "
                       + " ".join(f"{mu}:{i}" for mu, i in chosen.operator.summands))
            click.echo(format_matrix(chosen.matrix, bd.tol))
            for report in reports:
                click.echo(report.to_line())
        passed = all(report.passed for report in reports)
        ctx.exit(EXIT_PASSED if passed else EXIT_RELATION_FAILED)
    except KeyboardInterrupt:
        ctx.exit(EXIT_ABORTED)
