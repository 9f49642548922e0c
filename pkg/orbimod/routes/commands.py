"""
Command-line routes

One click command per job kind. Each reads a JSON document, validates it
and prints the report; the exit code is 0, 1 for a domain error, 2 for a
schema error.
"""

import click

from orbimod.errors import SchemaError
from orbimod.routes.jobs import FORMATS, error_output, parse_input, run

HELP = {
    'surface': 'Euler characteristic, canonical bundle, presentation and roots of an orbifold surface.',
    'bundle': 'Determinant, dimension, reducibility and optional stability, sub-bundle and line-bundle data.',
    'strata': 'Critical strata of the Higgs-field norm, the minimum and the Poincare polynomial.',
    'poincare': 'Poincare polynomial and Euler characteristic with optional supplied polynomials.',
    'spectral': 'Determinant-map base dimension, spectral cover and generic fibre.',
    'reps': 'Presentations, rotation numbers, representation varieties and Milnor-Wood.',
    'check': 'Run the randomized invariant suites.',
}


def _execute(settings, command, document, fmt):
    try:
        job = parse_input(document, command, fmt)
    except SchemaError as e:
        return error_output(e, fmt, settings)
    return run(job, settings)


def make_command(name: str) -> click.Command:
    default_input = None if name == 'check' else '-'

    @click.command(name=name, help=HELP[name])
    @click.option('--input', 'source', type=click.File('r'), default=default_input,
                  help='JSON input document; - reads stdin.')
    @click.option('--format', 'fmt', type=click.Choice(FORMATS), default='json', show_default=True,
                  help='Report format.')
    @click.pass_obj
    def command(settings, source, fmt):
        document = source.read() if source is not None else ''
        output, exit_code = _execute(settings, name, document, fmt)
        click.echo(output)
        click.get_current_context().exit(exit_code)

    return command


def register_commands(group: click.Group) -> None:
    for name in HELP:
        group.add_command(make_command(name))
