import json

from modfunctor.core.basic_data.cli import EXIT_ABORTED
from modfunctor.core.errors import GeneratorError
from modfunctor.core.util import click
from . import generate as generate_theory


@click.command()
@click.argument("name")
@click.option("--output", type=click.File("w"), default="-", show_default=True,
              help="where to write the document")
@click.pass_context
def generate(ctx, name, output):
    """emit the basic-data document of a built-in theory

    NAME is one of trivial, fibonacci or abelian-k. Exit code 3 when the generator fails to
    calibrate.
    """
    try:
        bd = generate_theory(name)
    except (GeneratorError, KeyboardInterrupt) as ex:
        click.echo(f"error: {ex}", err=True)
        ctx.exit(EXIT_ABORTED)
    json.dump(bd.to_json(), output, indent=2)
    output.write("\n")
