import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import product

from relqfi import __version__
from relqfi.apps.model.integrals import model_scalars
from relqfi.apps.model.schema import ModelParams
from relqfi.apps.sweep.constants import SweepQuantity
from relqfi.apps.sweep.output import render
from relqfi.apps.sweep.schema import SweepRequest, SweepResult
from relqfi.apps.tradeoff.indicator import lambda_star, omega, omega_limit0
from relqfi.apps.wavepacket.amplitude import peak_radius
from relqfi.core.exceptions import RelqfiError
from relqfi.core.numerics.schema import QuadratureSpec

logger = logging.getLogger(__name__)


def evaluate_point(
    quantity: SweepQuantity,
    kappa_prime: float,
    velocity: float,
    lambdas: list[float],
    mass: float,
    spec: QuadratureSpec,
) -> list[tuple[float, ...]]:
    params = ModelParams.from_kappa_prime(kappa_prime, velocity, mass)
    logger.debug('sweep point kappa_prime=%g V=%g', kappa_prime, velocity)

    match quantity:
        case SweepQuantity.PEAK_RADIUS:
            return [(kappa_prime, velocity, peak_radius(params, spec=spec))]
        case SweepQuantity.OMEGA_VS_LAMBDA:
            scalars = model_scalars(params, spec)
            return [
                (kappa_prime, velocity, value, omega(value, params, scalars=scalars))
                for value in lambdas
            ]
        case SweepQuantity.LAMBDA_STAR_VS_V:
            return [(kappa_prime, velocity, lambda_star(params, spec))]
        case SweepQuantity.OMEGA0_VS_KAPPA:
            return [(velocity, kappa_prime, omega_limit0(params, spec))]


def sweep_points(request: SweepRequest) -> list[tuple[float, float]]:
    if request.quantity == SweepQuantity.OMEGA0_VS_KAPPA:
        return [
            (kappa_prime, velocity)
            for velocity, kappa_prime in product(request.velocities, request.kappa_primes)
        ]
    return list(product(request.kappa_primes, request.velocities))


def provenance(request: SweepRequest) -> dict[str, str]:
    def listed(values):
        return ' '.join(f'{value:.17g}' for value in values)

    spec = request.spec
    return {
        'library': f'relqfi {__version__}',
        'quantity': request.quantity.value,
        'mass': f'{request.mass:.17g}',
        'kappa_prime': listed(request.kappa_primes),
        'velocity': listed(request.velocities),
        'lambda': listed(request.lambdas),
        'quadrature': (
            f'relative_tolerance={spec.relative_tolerance:.17g} '
            f'absolute_tolerance={spec.absolute_tolerance:.17g} '
            f'max_subdivisions={spec.max_subdivisions} '
            f'truncation={spec.truncation_radius_in_decay_units:.17g}'
        ),
    }


def _tasks(arguments: list[tuple], jobs: int):
    if jobs == 1:
        for argument in arguments:
            yield partial(evaluate_point, *argument)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(evaluate_point, *argument) for argument in arguments]
        for future in futures:
            yield future.result


def compute_sweep(request: SweepRequest) -> SweepResult:
    points = sweep_points(request)
    arguments = [
        (request.quantity, kappa_prime, velocity, request.lambdas, request.mass, request.spec)
        for kappa_prime, velocity in points
    ]

    rows = []
    for (kappa_prime, velocity), task in zip(points, _tasks(arguments, request.jobs)):
        try:
            rows.extend(task())
        except RelqfiError:
            logger.error('sweep point kappa_prime=%.17g V=%.17g failed', kappa_prime, velocity)
            raise

    return SweepResult.from_rows(request, provenance(request), rows)


def run_sweep(request: SweepRequest) -> SweepResult:
    result = compute_sweep(request)
    text = render(result, request.output_format)
    if request.output_path is None:
        print(text, end='')
    else:
        request.output_path.write_text(text, encoding='utf-8')
        logger.info('wrote %d rows to %s', len(result.rows), request.output_path)
    return result
