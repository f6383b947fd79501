from modfunctor.core.basic_data.cli import EXIT_ABORTED, EXIT_DOCUMENT_ERROR, open_document
from modfunctor.core.errors import LabelError
from modfunctor.core.types import DecompositionTree
from modfunctor.core.util import click
from .verlinde import verlinde_dim


@click.command()
@click.argument("document", type=click.File("rb"), metavar="BASIC_DATA_JSON")
@click.option("--genus", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--boundary", type=click.LabelList(), default="",
              help="comma separated boundary labels, e.g. 0,tau")
@click.option("--tree", type=click.Choice([t.value for t in DecompositionTree]),
              default=DecompositionTree.CATERPILLAR.value, show_default=True,
              help="pants decomposition to sum over")
@click.pass_context
def dims(ctx, document, genus, boundary, tree):
    """dimension of the space of a surface with labeled boundary"""
    try:
        bd = open_document(ctx, document)
        try:
            value = verlinde_dim(bd.dims, genus, boundary, tree)
        except LabelError as ex:
            click.echo(f"error: {ex}", err=True)
            ctx.exit(EXIT_DOCUMENT_ERROR)
        click.echo(str(value))
    except KeyboardInterrupt:
        ctx.exit(EXIT_ABORTED)
