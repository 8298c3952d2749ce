"""Property suite run by `relqfi verify`."""

import logging
import math
from collections.abc import Callable

import numpy as np

from relqfi.apps.fisher.analytic import fim_lambda_analytic, fim_lambda_inverse_analytic
from relqfi.apps.fisher.general import fim_lambda_general
from relqfi.apps.fisher.oracle import compare_with_analytic, relative_frobenius
from relqfi.apps.fisher.qubit import qubit_rotation_model, rld_fim_direct
from relqfi.apps.fisher.reduced import build_reduced_model
from relqfi.apps.fisher.schema import PolarGrid
from relqfi.apps.model.constants import ZETA_REL_AT_REST_MASS
from relqfi.apps.model.integrals import (
    identity_residual,
    model_scalars,
    xi_quadrature,
    xi_rel,
    zeta_quadrature,
    zeta_rel,
)
from relqfi.apps.model.schema import ModelParams
from relqfi.apps.tradeoff.indicator import (
    lambda_star,
    lambda_star_bisect,
    lambda_star_series,
    monotonicity_certificate,
    omega,
    omega_limit0,
    omega_limit1,
)
from relqfi.apps.verify import constants
from relqfi.apps.verify.constants import VerifyLevel
from relqfi.apps.verify.schema import CheckResult, VerifyReport
from relqfi.apps.wavepacket.amplitude import (
    peak_radius,
    rotational_symmetry_residual,
    spin_up_amplitude,
    spin_up_amplitude_direct,
)
from relqfi.apps.wavepacket.constants import DIRECT_TO_RADIAL_DENSITY
from relqfi.core.numerics.schema import QuadratureSpec

logger = logging.getLogger(__name__)

CHECKS: list[tuple[VerifyLevel, Callable]] = []


def check(level: VerifyLevel):
    def register(function):
        CHECKS.append((level, function))
        return function

    return register


def _below(name: str, measured: float, tolerance: float, detail: str = '') -> CheckResult:
    return CheckResult(
        name=name,
        tolerance=tolerance,
        measured=float(measured),
        passed=bool(measured < tolerance),
        detail=detail,
    )


def _above(name: str, measured: float, bound: float) -> CheckResult:
    return CheckResult(
        name=name, tolerance=bound, measured=float(measured), passed=bool(measured > bound)
    )


def _grid():
    for kappa_prime in constants.KAPPA_GRID:
        for velocity in constants.VELOCITY_GRID:
            yield ModelParams.from_kappa_prime(float(kappa_prime), float(velocity))


@check(VerifyLevel.FAST)
def identity_grid(spec: QuadratureSpec, grid: PolarGrid) -> list[CheckResult]:
    worst = max(abs(identity_residual(params, spec)) for params in _grid())
    return [_below('identity_residual_grid', worst, 1e-9)]


@check(VerifyLevel.FAST)
def relativistic_closed_forms(spec: QuadratureSpec, grid: PolarGrid) -> list[CheckResult]:
    kappas = constants.RELATIVISTIC_KAPPAS
    zeta_error = max(abs(zeta_quadrature(k, 1.0, spec) - zeta_rel(k)) for k in kappas)
    xi_error = max(abs(xi_quadrature(k, 1.0, spec) - xi_rel(k)) for k in kappas)

    # 1/cosh(rapidity) ~ 1.4e-6 here, which moves zeta by O(1e-7)
    velocity = 1 - 1e-12
    approach = max(
        abs(zeta_quadrature(k, velocity, spec) - zeta_rel(k))
        + abs(xi_quadrature(k, velocity, spec) - xi_rel(k))
        for k in kappas
    )
    return [
        _below('zeta_rel_closed_form', zeta_error, 1e-8),
        _below('xi_rel_closed_form', xi_error, 1e-8),
        _below('closed_forms_approached_below_light_speed', approach, 1e-5),
    ]


@check(VerifyLevel.FAST)
def relativistic_limits(spec: QuadratureSpec, grid: PolarGrid) -> list[CheckResult]:
    return [
        _below('zeta_rel_small_kappa', abs(zeta_rel(1e-4) - ZETA_REL_AT_REST_MASS), 1e-4),
        _below('xi_rel_small_kappa', xi_rel(1e-4), 1e-3),
        _below('xi_rel_large_kappa', abs(xi_rel(50.0) - (1 - 1 / (2 * 50.0**2))), 1e-6),
    ]


@check(VerifyLevel.FAST)
def model_inequalities(spec: QuadratureSpec, grid: PolarGrid) -> list[CheckResult]:
    gaps = []
    theta_margins = []
    for params in _grid():
        scalars = model_scalars(params, spec)
        gap = 1 - scalars.zeta**2
        gaps.append(gap - scalars.xi)
        theta_margins.append(gap / scalars.xi - 1)
    return [
        _above('zeta2_plus_xi_below_one', min(gaps), 0.0),
        _above('theta_above_one', min(theta_margins), 0.0),
    ]


@check(VerifyLevel.FAST)
def fim_consistency(spec: QuadratureSpec, grid: PolarGrid) -> list[CheckResult]:
    worst = 0.0
    zero_rld = 0.0
    unordered = 0
    for kappa_prime, velocity in constants.FIM_POINTS:
        params = ModelParams.from_kappa_prime(kappa_prime, velocity)
        scalars = model_scalars(params, spec)
        sld_inverse = fim_lambda_inverse_analytic(0.0, params, scalars=scalars)
        for value in constants.FIM_LAMBDAS:
            fisher = fim_lambda_analytic(value, params, scalars=scalars)
            inverse = fim_lambda_inverse_analytic(value, params, scalars=scalars)
            worst = max(worst, np.linalg.norm(fisher.matmul(inverse) - np.eye(2)))
            if value != 0:
                unordered += not (
                    inverse.a11 < sld_inverse.a11
                    and inverse.a22 < sld_inverse.a22
                    and inverse.a11 + inverse.a22 <= sld_inverse.a11 + sld_inverse.a22
                )
        rld_inverse = fim_lambda_inverse_analytic(1.0, params, scalars=scalars)
        zero_rld = max(zero_rld, np.abs(rld_inverse.to_array()).max())
    return [
        _below('fim_times_inverse_identity', worst, 1e-10),
        _below('lambda_inverse_not_below_sld_inverse', unordered, 1),
        CheckResult(
            name='rld_inverse_is_zero',
            tolerance=0.0,
            measured=zero_rld,
            passed=zero_rld == 0.0,
        ),
    ]


@check(VerifyLevel.FAST)
def tradeoff_suite(spec: QuadratureSpec, grid: PolarGrid) -> list[CheckResult]:
    not_monotone = 0
    limit0_minimum = math.inf
    limit1_error = 0.0
    threshold_error = 0.0
    sign_changes_off = 0
    discriminant_error = 0.0
    discriminant_maximum = -math.inf
    samples = np.linspace(0, 1, 100)

    for params in _grid():
        scalars = model_scalars(params, spec)
        certificate = monotonicity_certificate(params, samples, scalars=scalars)
        not_monotone += not certificate.monotone
        closed_form = certificate.discriminant_closed_form
        discriminant_error = max(
            discriminant_error, abs(certificate.discriminant - closed_form) / abs(closed_form)
        )
        discriminant_maximum = max(discriminant_maximum, closed_form)

        limit0_minimum = min(limit0_minimum, omega_limit0(params, scalars=scalars))
        limit1 = omega_limit1(params, scalars=scalars)
        approach = omega(1 - 1e-12, params, scalars=scalars)
        limit1_error = max(limit1_error, abs(approach - limit1) / abs(limit1))

        closed = lambda_star(params, scalars=scalars)
        bracketed = lambda_star_bisect(params, scalars=scalars)
        threshold_error = max(threshold_error, abs(closed - bracketed))

        values = np.array([omega(value, params, scalars=scalars) for value in samples])
        sign_changes_off += int(np.count_nonzero(np.diff(np.sign(values))) != 1)

    return [
        _below('omega_not_monotone_points', not_monotone, 1),
        _above('omega_limit0_positive', limit0_minimum, 0.0),
        _below('omega_limit1_continuity', limit1_error, 1e-6),
        _below('lambda_star_vs_bisection', threshold_error, 1e-9),
        _below('omega_sign_change_not_unique', sign_changes_off, 1),
        _below('discriminant_closed_form', discriminant_error, 1e-9),
        _below('discriminant_negative', discriminant_maximum, 0.0),
    ]


@check(VerifyLevel.FAST)
def rest_frame_and_small_kappa(spec: QuadratureSpec, grid: PolarGrid) -> list[CheckResult]:
    rest = ModelParams.from_kappa_prime(1.0, 0.0)
    rest_error = max(
        abs(omega(value, rest, spec) + rest.kappa**2 * value**2 / 2)
        for value in (0.1, 0.5, 0.9)
    )
    slow = lambda_star(ModelParams.from_kappa_prime(1.0, 1e-3), spec)

    narrow = ModelParams.from_kappa_prime(0.01, 1.0)
    threshold = lambda_star(narrow, spec)
    first_order = lambda_star_series(narrow, order=1, spec=spec)
    narrower = lambda_star(ModelParams.from_kappa_prime(1e-3, 1.0), spec)
    return [
        _below('omega_rest_frame', rest_error, 1e-12),
        _below('lambda_star_slow_observer', slow, 1e-2),
        _below('lambda_star_first_order', abs(threshold - first_order) / threshold, 0.05),
        _below('lambda_star_small_kappa', narrower, 1e-2),
    ]


@check(VerifyLevel.FULL)
def general_algorithm_sanity(spec: QuadratureSpec, grid: PolarGrid) -> list[CheckResult]:
    pure = qubit_rotation_model(1.0)
    pure_error = abs(fim_lambda_general(pure, 0.0)[0, 0] - 1)
    family_error = max(
        abs(fim_lambda_general(pure, value)[0, 0] - 1 / (1 - value**2))
        for value in np.linspace(-0.95, 0.95, 39)
    )
    mixed = qubit_rotation_model(0.7)
    rld_error = np.abs(fim_lambda_general(mixed, 1.0) - rld_fim_direct(mixed)).max()
    return [
        _below('pure_qubit_sld', pure_error, 1e-10),
        _below('pure_qubit_lambda_family', family_error, 1e-10),
        _below('full_rank_rld', rld_error, 1e-12),
    ]


@check(VerifyLevel.FULL)
def reduced_model_oracle(spec: QuadratureSpec, grid: PolarGrid) -> list[CheckResult]:
    worst = 0.0
    shift_worst = 0.0
    for kappa_prime, velocity in constants.ORACLE_POINTS:
        params = ModelParams.from_kappa_prime(kappa_prime, velocity)
        shifted = build_reduced_model(params, (0.3 * params.kappa, -0.2 * params.kappa), grid)
        for value in constants.ORACLE_LAMBDAS:
            comparison = compare_with_analytic(value, params, grid=grid, spec=spec)
            worst = max(worst, comparison.relative_error)
            moved = fim_lambda_general(shifted, value)
            shift_worst = max(shift_worst, relative_frobenius(moved, np.array(comparison.general)))
    return [
        _below('reduced_model_vs_closed_form', worst, 1e-6),
        _below('reduced_model_shift_independence', shift_worst, 1e-8),
    ]


@check(VerifyLevel.FULL)
def wavepacket_suite(spec: QuadratureSpec, grid: PolarGrid) -> list[CheckResult]:
    rng = np.random.default_rng(20)
    form_error = 0.0
    symmetry = 0.0
    for _ in range(20):
        kappa_prime = rng.uniform(0.3, 2.0)
        params = ModelParams.from_kappa_prime(kappa_prime, rng.uniform(0.2, 1.0))
        r = rng.uniform(0.2, 5.0) * params.kappa
        radial = abs(spin_up_amplitude(r, 0.0, params, spec)) ** 2
        direct = abs(spin_up_amplitude_direct(r, 0.0, 0.0, params)) ** 2
        form_error = max(form_error, abs(direct / DIRECT_TO_RADIAL_DENSITY - radial) / radial)
        symmetry = max(
            symmetry, rotational_symmetry_residual(params, r, np.linspace(0, 2 * math.pi, 8))
        )

    axis = max(
        abs(spin_up_amplitude(0.0, 0.0, ModelParams.from_kappa_prime(1.0, v), spec))
        for v in (0.25, 0.5, 0.75, 1.0)
    )
    missing_peaks = 0
    for kappa_prime in (0.1, 0.5, 1.0):
        for velocity in (0.25, 0.5, 0.75, 1.0):
            params = ModelParams.from_kappa_prime(kappa_prime, velocity)
            radius = peak_radius(params, spec=spec)
            missing_peaks += not 0 < radius < 10 * params.kappa

    return [
        _below('bessel_vs_direct_density', form_error, 1e-6),
        _below('axial_symmetry_residual', symmetry, 1e-6),
        CheckResult(name='density_on_axis', tolerance=0.0, measured=axis, passed=axis == 0),
        _below('missing_interior_peaks', missing_peaks, 1),
    ]


def run_checks(level: VerifyLevel, spec: QuadratureSpec, grid: PolarGrid) -> VerifyReport:
    results = []
    for required, function in CHECKS:
        if not VerifyLevel.includes(level, required):
            continue
        logger.info('running %s', function.__name__)
        results.extend(function(spec, grid))
    report = VerifyReport.from_checks(level, results)
    for failure in report.failures:
        logger.error(
            'check %s failed: measured %.3e, tolerance %.3e',
            failure.name,
            failure.measured,
            failure.tolerance,
        )
    return report


def run_verify(
    level: VerifyLevel = VerifyLevel.FAST,
    spec: QuadratureSpec | None = None,
    grid: PolarGrid | None = None,
) -> VerifyReport:
    return run_checks(level, spec or QuadratureSpec(), grid or PolarGrid())
