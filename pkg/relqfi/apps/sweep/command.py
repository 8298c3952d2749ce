import argparse
from pathlib import Path

from relqfi.apps.sweep.constants import OutputFormat, SweepQuantity
from relqfi.apps.sweep.runner import run_sweep
from relqfi.apps.sweep.schema import SweepRequest
from relqfi.core.command.arguments import (
    add_model_arguments,
    add_numerics_arguments,
    add_output_arguments,
    quadrature_spec,
)
from relqfi.core.exceptions import EXIT_OK
from relqfi.settings import Settings


def sweep(args: argparse.Namespace) -> int:
    settings = Settings()
    request = SweepRequest(
        quantity=args.quantity,
        kappa_primes=args.kappa,
        velocities=args.velocity,
        lambdas=args.lambda_value,
        mass=args.mass,
        output_format=args.format,
        output_path=Path(args.out) if args.out else None,
        spec=quadrature_spec(args, settings),
        jobs=args.jobs or settings.JOBS,
    )
    run_sweep(request)
    return EXIT_OK


def register(subparsers):
    parser = subparsers.add_parser(
        'sweep',
        help='tabulate a figure quantity over a parameter grid',
        description='Evaluates one quantity on the cartesian product of the given '
        'kappa_prime and velocity values and writes CSV, JSON or SVG.',
    )
    parser.add_argument('quantity', type=SweepQuantity, choices=list(SweepQuantity))
    add_model_arguments(parser, sweep=True)
    add_numerics_arguments(parser)
    add_output_arguments(parser)
    parser.add_argument(
        '--format', type=OutputFormat, choices=list(OutputFormat), default=OutputFormat.CSV
    )
    parser.add_argument('--jobs', type=int, help='worker processes')
    parser.set_defaults(handler=sweep)
    return parser
