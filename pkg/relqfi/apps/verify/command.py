import argparse

from relqfi.apps.verify.checks import run_verify
from relqfi.apps.verify.constants import VerifyLevel
from relqfi.core.command.arguments import (
    add_numerics_arguments,
    add_output_arguments,
    polar_grid,
    quadrature_spec,
    write_text,
)
from relqfi.core.exceptions import EXIT_OK, EXIT_VERIFY_FAILED
from relqfi.settings import Settings


def verify(args: argparse.Namespace) -> int:
    settings = Settings()
    report = run_verify(
        args.level,
        spec=quadrature_spec(args, settings),
        grid=polar_grid(args, settings),
    )
    write_text(report.model_dump_json(indent=2), args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def register(subparsers):
    parser = subparsers.add_parser(
        'verify',
        help='run the property suite and print a JSON report',
        description='The fast level skips the reduced-model oracle and the '
        'wave packet checks.',
    )
    parser.add_argument(
        '--level', type=VerifyLevel, choices=list(VerifyLevel), default=VerifyLevel.FAST
    )
    add_numerics_arguments(parser)
    add_output_arguments(parser)
    parser.set_defaults(handler=verify)
    return parser
