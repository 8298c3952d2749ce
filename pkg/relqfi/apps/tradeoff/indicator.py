"""Tradeoff indicator between the SLD and lambda-LD Cramer-Rao bounds."""

import logging
import math
from fractions import Fraction

import numpy as np

from relqfi.apps.fisher.analytic import (
    fim_lambda_inverse_analytic,
    sld_fim_inverse,
)
from relqfi.apps.fisher.schema import HermitianMatrix2
from relqfi.apps.model.integrals import model_scalars
from relqfi.apps.model.schema import ModelParams, ModelScalars
from relqfi.apps.tradeoff.constants import (
    DENOMINATOR_FLOOR,
    LAMBDA_GRID_POINTS,
    PEAK_SCAN_POINTS,
)
from relqfi.apps.tradeoff.schema import MonotonicityCertificate, TradeoffReport
from relqfi.core.exceptions import (
    DegenerateDenominator,
    InvalidDomain,
    LambdaOutOfRange,
    NoPeak,
    RadicandNegative,
    ZeroDenominator,
)
from relqfi.core.numerics.roots import find_root_bracketed, maximize_unimodal
from relqfi.core.numerics.schema import QuadratureSpec

logger = logging.getLogger(__name__)


def omega_core(lambda_value: float, zeta: float, xi: float) -> float:
    """Dimensionless indicator 2 omega / kappa^2."""
    gap = 1 - zeta * zeta
    square = lambda_value * lambda_value
    shifted = square * gap + zeta * zeta
    numerator = square * gap * gap - xi * xi * shifted * shifted
    denominator = xi * xi * shifted - gap * gap
    if abs(denominator) < DENOMINATOR_FLOOR:
        raise DegenerateDenominator(lambda_value=lambda_value, zeta=zeta, xi=xi)
    return numerator / (gap * denominator)


def omega_limit0_core(zeta: float, xi: float) -> float:
    gap = 1 - zeta * zeta
    theta = gap / xi
    return zeta**4 / (xi * theta * (theta * theta - zeta * zeta))


def omega_limit1_core(zeta: float) -> float:
    return -1 / (1 - zeta * zeta)


def _scalars(params, spec, scalars) -> ModelScalars:
    return scalars or model_scalars(params, spec)


def omega_limit0(
    params: ModelParams,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
) -> float:
    scalars = _scalars(params, spec, scalars)
    return params.kappa**2 / 2 * omega_limit0_core(scalars.zeta, scalars.xi)


def omega_limit1(
    params: ModelParams,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
) -> float:
    scalars = _scalars(params, spec, scalars)
    return params.kappa**2 / 2 * omega_limit1_core(scalars.zeta)


def omega(
    lambda_value: float,
    params: ModelParams,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
) -> float:
    lambda_value = abs(lambda_value)
    if lambda_value > 1:
        raise LambdaOutOfRange(lambda_value=lambda_value)
    scalars = _scalars(params, spec, scalars)
    if lambda_value == 0:
        return omega_limit0(params, scalars=scalars)
    if lambda_value == 1:
        return omega_limit1(params, scalars=scalars)
    return params.kappa**2 / 2 * omega_core(lambda_value, scalars.zeta, scalars.xi)


def omega_from_fims(
    js_inv: HermitianMatrix2, jl_inv: HermitianMatrix2
) -> tuple[float, float]:
    gap_11 = js_inv.a11 - jl_inv.a11
    gap_22 = js_inv.a22 - jl_inv.a22
    scale = max(abs(js_inv.a11), abs(js_inv.a22))
    if abs(gap_11) <= DENOMINATOR_FLOOR * scale or abs(gap_22) <= DENOMINATOR_FLOOR * scale:
        raise ZeroDenominator(gap_11=gap_11, gap_22=gap_22)

    # -det(J_S^{-1} - J_l^{-1})
    numerator = jl_inv.a12.imag**2 - gap_11 * gap_22
    return numerator / gap_11, numerator / gap_22


def lambda_star_from_scalars(zeta: float, xi: float) -> float:
    gap = 1 - zeta * zeta
    radicand = 1 - 4 * xi * xi * zeta * zeta / gap
    if radicand < 0:
        raise RadicandNegative(radicand=radicand, zeta=zeta, xi=xi)
    # (1 - sqrt(R)) / (2 xi) without the cancellation at small zeta
    return 2 * xi * zeta * zeta / (gap * (1 + math.sqrt(radicand)))


def lambda_star(
    params: ModelParams,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
) -> float:
    scalars = _scalars(params, spec, scalars)
    return lambda_star_from_scalars(scalars.zeta, scalars.xi)


def lambda_star_bisect(
    params: ModelParams,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
    tol: float = 1e-14,
) -> float:
    """Zero of omega on [0, 1] by bracketing, independent of the closed form."""
    if params.velocity == 0:
        raise InvalidDomain('the threshold is bracketed only for V > 0.')
    scalars = _scalars(params, spec, scalars)
    return find_root_bracketed(
        lambda value: omega_core(value, scalars.zeta, scalars.xi), 0.0, 1.0, tol
    )


def lambda_star_series(
    params: ModelParams,
    order: int = 1,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
) -> float:
    """Truncated expansion of 1 - sqrt(1 - x) in x = 4 xi^2 zeta^2 / (1 - zeta^2).

    The n-th coefficient is (2n - 3)!! / (n! 2^n); order 1 gives
    zeta^2 xi / (1 - zeta^2).
    """
    if order < 1:
        raise InvalidDomain('series order must be at least 1.', order=order)
    scalars = _scalars(params, spec, scalars)
    zeta, xi = scalars.zeta, scalars.xi
    x = 4 * xi * xi * zeta * zeta / (1 - zeta * zeta)

    total = 0.0
    coefficient = 0.5
    for n in range(1, order + 1):
        total += coefficient * x**n
        coefficient *= (2 * n - 1) / (2 * (n + 1))
    return total / (2 * xi)


def quartic_coefficients(zeta: float, xi: float) -> tuple[Fraction, Fraction, Fraction]:
    """Exact a, b, c of the quartic numerator a l^4 + b l^2 + c of d omega / d lambda."""
    z2 = Fraction(zeta) ** 2
    x2 = Fraction(xi) ** 2
    gap = 1 - z2

    a = x2 * x2 * gap * gap
    b = -2 * x2 * gap * (gap * gap - x2 * z2)
    c = 1 - 3 * z2 * (1 + x2) + z2 * z2 * (x2 * x2 + 5 * x2 + 3) - z2**3 * (2 * x2 + 1)
    return a, b, c


def monotonicity_certificate(
    params: ModelParams,
    grid=None,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
) -> MonotonicityCertificate:
    """Discriminant of the quartic numerator of d omega / d lambda.

    a lambda^4 + b lambda^2 + c keeps one sign on [0, 1] when a > 0 and
    b^2 - 4ac < 0, so omega strictly decreases. The coefficients are exact
    rationals in the float zeta and xi; b^2 - 4ac is tiny next to b^2 for
    slow or wide packets and cancels in double precision.
    """
    scalars = _scalars(params, spec, scalars)
    zeta, xi = scalars.zeta, scalars.xi
    a, b, c = quartic_coefficients(zeta, xi)

    z2, x2 = Fraction(zeta) ** 2, Fraction(xi) ** 2
    gap = 1 - z2
    discriminant = b * b - 4 * a * c
    closed_form = -4 * z2 * x2 * x2 * gap**3 * (gap * gap - x2)

    grid = np.linspace(0, 1, LAMBDA_GRID_POINTS) if grid is None else np.asarray(grid)
    values = np.array([omega(value, params, scalars=scalars) for value in grid])
    decreasing = bool(np.all(np.diff(values) < 0))

    return MonotonicityCertificate(
        monotone=bool(a > 0 and closed_form < 0 and decreasing),
        discriminant=float(discriminant),
        discriminant_closed_form=float(closed_form),
        a=float(a),
        b=float(b),
        c=float(c),
    )


def omega0_peak(
    velocity: float,
    lo: float = 0.05,
    hi: float = 5.0,
    mass: float = 1.0,
    scan_points: int = PEAK_SCAN_POINTS,
    spec: QuadratureSpec | None = None,
    tol: float = 1e-8,
) -> tuple[float, float]:
    """kappa_prime maximizing omega(0) at fixed V, with the maximum value."""

    def limit0(kappa_prime: float) -> float:
        params = ModelParams.from_kappa_prime(kappa_prime, velocity, mass)
        return omega_limit0(params, spec)

    grid = np.linspace(lo, hi, scan_points)
    values = np.array([limit0(value) for value in grid])
    index = int(np.argmax(values))
    if index in (0, len(grid) - 1):
        raise NoPeak(velocity=velocity, lo=lo, hi=hi)

    logger.debug('omega(0) pre-scan peak near kappa_prime=%.6g', grid[index])
    return maximize_unimodal(limit0, grid[index - 1], grid[index + 1], tol)


def tradeoff_report(
    lambda_value: float,
    params: ModelParams,
    spec: QuadratureSpec | None = None,
) -> TradeoffReport:
    lambda_value = abs(lambda_value)
    scalars = model_scalars(params, spec)
    value = omega(lambda_value, params, scalars=scalars)

    omega_prime = value
    if 0 < lambda_value < 1:
        js_inv = sld_fim_inverse(params, scalars=scalars)
        jl_inv = fim_lambda_inverse_analytic(lambda_value, params, scalars=scalars)
        _, omega_prime = omega_from_fims(js_inv, jl_inv)

    certificate = monotonicity_certificate(params, scalars=scalars)
    return TradeoffReport(
        lambda_value=lambda_value,
        omega=value,
        omega_prime=omega_prime,
        omega_limit0=omega_limit0(params, scalars=scalars),
        omega_limit1=omega_limit1(params, scalars=scalars),
        lambda_star=lambda_star(params, scalars=scalars),
        monotone_decreasing=certificate.monotone,
        discriminant=certificate.discriminant,
    )
