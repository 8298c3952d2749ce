import argparse
import logging
import sys
import warnings

from pydantic import ValidationError

from relqfi import __version__
from relqfi.apps.fisher.command import register as register_oracle
from relqfi.apps.sweep.command import register as register_sweep
from relqfi.apps.verify.command import register as register_verify
from relqfi.core.exceptions import EXIT_USAGE, NearLightSpeedWarning, RelqfiError
from relqfi.settings import Settings

logger = logging.getLogger('relqfi')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='relqfi',
        description='Quantum Fisher information of a boosted spin-1/2 wave packet.',
    )
    parser.add_argument('--version', action='version', version=f'relqfi {__version__}')
    parser.add_argument('--log-level', help='logging level on standard error')
    parser.add_argument('--quiet', action='store_true', help='log errors only')

    subparsers = parser.add_subparsers(dest='command', required=True)
    register_sweep(subparsers)
    register_verify(subparsers)
    register_oracle(subparsers)
    return parser


def configure_logging(args: argparse.Namespace, settings: Settings):
    level = 'ERROR' if args.quiet else (args.log_level or settings.LOG_LEVEL)
    logging.basicConfig(
        stream=sys.stderr,
        level=level.upper(),
        format='%(levelname)s %(name)s: %(message)s',
        force=True,
    )
    # already reported through the log record
    warnings.simplefilter('ignore', NearLightSpeedWarning)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args, Settings())

    try:
        return args.handler(args)
    except ValidationError as exc:
        for error in exc.errors():
            location = '.'.join(str(part) for part in error['loc']) or 'request'
            logger.error('invalid parameter %s: %s', location, error['msg'])
        return EXIT_USAGE
    except RelqfiError as exc:
        logger.error('%s: %s', type(exc).__name__, exc)
        return exc.exit_code


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()
