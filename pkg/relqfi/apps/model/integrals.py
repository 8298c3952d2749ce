"""
The two scalar functions that fully determine the Fisher information of the
boosted spin-1/2 wave packet, their relativistic closed forms and the
identities that tie them together. Everything depends on (kappa_prime, V)
only, with kappa_prime = mass * kappa.
"""

import logging
import math
import warnings

import numpy as np

from relqfi.apps.model.constants import NEAR_LIGHT_SPEED_BAND, SQRT2, SQRT_PI
from relqfi.apps.model.schema import ModelParams, ModelScalars
from relqfi.core.exceptions import (
    DivisionByZero,
    InvalidDomain,
    InvariantViolation,
    NearLightSpeedWarning,
)
from relqfi.core.numerics.quadrature import integrate_semi_infinite
from relqfi.core.numerics.schema import QuadratureSpec
from relqfi.core.numerics.special import erfcx

logger = logging.getLogger(__name__)


def _check_kappa_prime(kappa_prime: float):
    if not kappa_prime > 0 or not math.isfinite(kappa_prime):
        raise InvalidDomain('kappa_prime must be positive.', kappa_prime=kappa_prime)


def _check_velocity(velocity: float):
    if not 0 <= velocity <= 1:
        raise InvalidDomain('velocity must lie in [0, 1].', velocity=velocity)


def zeta_quadrature(
    kappa_prime: float, velocity: float, spec: QuadratureSpec | None = None
) -> float:
    _check_kappa_prime(kappa_prime)
    _check_velocity(velocity)
    inverse_gamma = math.sqrt((1 - velocity) * (1 + velocity))

    def integrand(t):
        return t**3 * np.exp(-((kappa_prime * t) ** 2)) / (np.sqrt(1 + t * t) + inverse_gamma)

    result = integrate_semi_infinite(integrand, 1 / kappa_prime, spec)
    return SQRT2 * kappa_prime**3 * velocity * result.value


def xi_quadrature(
    kappa_prime: float, velocity: float, spec: QuadratureSpec | None = None
) -> float:
    _check_kappa_prime(kappa_prime)
    _check_velocity(velocity)
    inverse_gamma = math.sqrt((1 - velocity) * (1 + velocity))

    def integrand(t):
        root = np.sqrt(1 + t * t)
        weight = (1 + root * inverse_gamma) / (root + inverse_gamma)
        return 2 * t * weight * np.exp(-((kappa_prime * t) ** 2))

    result = integrate_semi_infinite(integrand, 1 / kappa_prime, spec)
    return kappa_prime**2 * result.value


def zeta_rel(kappa_prime: float) -> float:
    _check_kappa_prime(kappa_prime)
    scaled = erfcx(kappa_prime)
    return kappa_prime / SQRT2 + SQRT2 * SQRT_PI / 4 * (1 - 2 * kappa_prime**2) * scaled


def xi_rel(kappa_prime: float) -> float:
    _check_kappa_prime(kappa_prime)
    return SQRT_PI * kappa_prime * erfcx(kappa_prime)


def aux_integral_plus_one(kappa_prime: float) -> float:
    """Closed form of int k'^3 t^3 e^{-k'^2 t^2} / (sqrt(1+t^2) + 1) dt."""
    _check_kappa_prime(kappa_prime)
    return SQRT_PI / 4 * erfcx(kappa_prime)


def aux_integral_sqrt(kappa_prime: float) -> float:
    """Closed form of int k'^3 t^3 e^{-k'^2 t^2} / sqrt(1+t^2) dt."""
    _check_kappa_prime(kappa_prime)
    return kappa_prime / 2 + SQRT_PI / 4 * (1 - 2 * kappa_prime**2) * erfcx(kappa_prime)


def zeta_bounds(kappa_prime: float, velocity: float) -> tuple[float, float]:
    """Sandwich of zeta obtained by replacing 1/cosh(rapidity) with 1 and 0.

    The lower end is sqrt(2) V int k'^3 t^3 e^{-k'^2 t^2} / (sqrt(1+t^2) + 1) dt;
    the upper end equals V zeta_rel(kappa_prime) and is attained at V = 1.
    """
    _check_velocity(velocity)
    lower = SQRT2 * velocity * aux_integral_plus_one(kappa_prime)
    upper = SQRT2 * velocity * aux_integral_sqrt(kappa_prime)
    return lower, upper


def _near_light_speed(params: ModelParams) -> bool:
    if params.velocity == 1:
        return True
    if params.velocity >= 1 - NEAR_LIGHT_SPEED_BAND:
        message = f'velocity {params.velocity!r} replaced by the V = 1 closed forms.'
        logger.warning(message)
        warnings.warn(message, NearLightSpeedWarning, stacklevel=3)
        return True
    return False


def zeta(params: ModelParams, spec: QuadratureSpec | None = None) -> float:
    if params.velocity == 0:
        return 0.0
    if _near_light_speed(params):
        return zeta_rel(params.kappa_prime)
    return zeta_quadrature(params.kappa_prime, params.velocity, spec)


def xi(params: ModelParams, spec: QuadratureSpec | None = None) -> float:
    if params.velocity == 0:
        return 1.0
    if _near_light_speed(params):
        return xi_rel(params.kappa_prime)
    return xi_quadrature(params.kappa_prime, params.velocity, spec)


def model_scalars(params: ModelParams, spec: QuadratureSpec | None = None) -> ModelScalars:
    return ModelScalars(zeta=zeta(params, spec), xi=xi(params, spec))


def identity_residual(params: ModelParams, spec: QuadratureSpec | None = None) -> float:
    if params.velocity == 0:
        raise DivisionByZero()
    kappa_prime = params.kappa_prime
    scalars = model_scalars(params, spec)
    lhs = scalars.xi + SQRT2 * scalars.zeta / (kappa_prime * params.velocity)
    rhs = 1 + SQRT_PI / (2 * kappa_prime) * erfcx(kappa_prime)
    return lhs - rhs


def theta_ratio(params: ModelParams, spec: QuadratureSpec | None = None) -> float:
    if params.velocity == 0:
        raise InvalidDomain('theta ratio requires V > 0.')
    scalars = model_scalars(params, spec)
    theta = (1 - scalars.zeta**2) / scalars.xi
    if theta <= 1:
        raise InvariantViolation(theta=theta, kappa_prime=params.kappa_prime)
    return theta


def rest_frame_gap(params: ModelParams, spec: QuadratureSpec | None = None) -> float:
    """1 - zeta^2 - xi, strictly positive for V > 0."""
    scalars = model_scalars(params, spec)
    return 1 - scalars.zeta**2 - scalars.xi
