"""Flags shared by the subcommands and their conversion into typed specs."""

import argparse

from relqfi.apps.fisher.schema import PolarGrid
from relqfi.core.numerics.schema import QuadratureSpec
from relqfi.settings import Settings


def add_model_arguments(parser: argparse.ArgumentParser, sweep: bool = False):
    nargs = '+' if sweep else None
    parser.add_argument('--mass', type=float, default=1.0, help='particle mass m')
    parser.add_argument(
        '--kappa',
        type=float,
        nargs=nargs,
        default=[1.0] if sweep else 1.0,
        help='dimensionless spread kappa_prime = m kappa',
    )
    parser.add_argument(
        '--velocity',
        type=float,
        nargs=nargs,
        default=[1.0] if sweep else 0.5,
        help='observer velocity V in units of c',
    )
    parser.add_argument(
        '--lambda',
        dest='lambda_value',
        type=float,
        nargs=nargs,
        default=[] if sweep else 0.5,
        help='lambda-LD interpolation parameter',
    )


def add_numerics_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--tol', type=float, help='relative quadrature tolerance')
    parser.add_argument('--grid-radial', type=int, help='radial nodes of the polar grid')
    parser.add_argument('--grid-angular', type=int, help='angular nodes of the polar grid')


def add_output_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--out', help='output file, standard output when omitted')


def quadrature_spec(args: argparse.Namespace, settings: Settings) -> QuadratureSpec:
    overrides = {}
    if getattr(args, 'tol', None) is not None:
        overrides['relative_tolerance'] = args.tol
    return settings.quadrature_spec(**overrides)


def polar_grid(args: argparse.Namespace, settings: Settings) -> PolarGrid:
    overrides = {}
    if getattr(args, 'grid_radial', None) is not None:
        overrides['radial_nodes'] = args.grid_radial
    if getattr(args, 'grid_angular', None) is not None:
        overrides['angular_nodes'] = args.grid_angular
    return settings.polar_grid(**overrides)


def write_text(text: str, out: str | None):
    if out is None:
        print(text)
        return
    with open(out, 'w', encoding='utf-8', newline='') as stream:
        stream.write(text)
