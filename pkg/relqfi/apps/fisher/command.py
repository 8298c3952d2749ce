import argparse

from relqfi.apps.fisher.oracle import compare_with_analytic
from relqfi.apps.model.schema import ModelParams
from relqfi.core.command.arguments import (
    add_model_arguments,
    add_numerics_arguments,
    add_output_arguments,
    polar_grid,
    quadrature_spec,
    write_text,
)
from relqfi.core.exceptions import EXIT_OK
from relqfi.settings import Settings


def oracle(args: argparse.Namespace) -> int:
    settings = Settings()
    params = ModelParams.from_kappa_prime(args.kappa, args.velocity, args.mass)
    comparison = compare_with_analytic(
        args.lambda_value,
        params,
        theta=(args.theta1 * params.kappa, args.theta2 * params.kappa),
        grid=polar_grid(args, settings),
        spec=quadrature_spec(args, settings),
    )
    write_text(comparison.model_dump_json(indent=2), args.out)
    return EXIT_OK


def register(subparsers):
    parser = subparsers.add_parser(
        'oracle',
        help='compare the general lambda-LD algorithm with the closed form',
        description='Builds the reduced six-dimensional model, runs the general '
        'lambda-LD Fisher information on it and prints both matrices as JSON.',
    )
    add_model_arguments(parser)
    add_numerics_arguments(parser)
    add_output_arguments(parser)
    parser.add_argument('--theta1', type=float, default=0.0, help='shift in units of kappa')
    parser.add_argument('--theta2', type=float, default=0.0, help='shift in units of kappa')
    parser.set_defaults(handler=oracle)
    return parser
