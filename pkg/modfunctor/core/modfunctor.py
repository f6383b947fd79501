#!/usr/bin/env python
import cProfile
import subprocess
import sys
from pstats import Stats

import pkg_resources

from modfunctor.core.basic_data.cli import validate as validate_cli
from modfunctor.core.generators.cli import generate as generate_cli
from modfunctor.core.labels.cli import dims as dims_cli
from modfunctor.core.reconstruction.cli import s_matrix as s_matrix_cli
from modfunctor.core.relations.cli import relations as relations_cli
from modfunctor.core.util import click


PROFILER_LINES = 15
"""This is the number of profiling rows to dump when --profile is enabled."""


@click.group()
@click.option("--profile", is_flag=True)
@click.pass_context
def modfunctor(ctx, profile):
    """
    basic data of two-dimensional modular functors: relation checks, curve operators and the
    torus S-matrices

    Exit codes: 0 pass, 1 a relation fails, 2 malformed document, 3 generator failure or
    interrupt.
    """
    if profile:
        profiler = cProfile.Profile()
        profiler.enable()

        def print_profile():
            stats = Stats(profiler)
            stats.sort_stats('tottime').print_stats(PROFILER_LINES)

        ctx.call_on_close(print_profile)


@modfunctor.command()
def version():
    from modfunctor import __version__
    print(__version__)


@modfunctor.group()
def util():
    """
    house-keeping commands for the modfunctor library
    """
    pass


@util.command()
def install_strict_dependencies():
    """
    warning! updates different packages in your local installation
    """
    strict_requirements_file = pkg_resources.resource_filename(
        "modfunctor", "REQUIREMENTS-STRICT.txt")
    subprocess.check_call([
        sys.executable, "-m", "pip", "install", "-r", strict_requirements_file
    ])


modfunctor.add_command(validate_cli)  # type: ignore
modfunctor.add_command(relations_cli)  # type: ignore
modfunctor.add_command(s_matrix_cli)  # type: ignore
modfunctor.add_command(dims_cli)  # type: ignore
modfunctor.add_command(generate_cli)  # type: ignore
