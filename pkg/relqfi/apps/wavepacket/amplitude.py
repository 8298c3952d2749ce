"""
Coordinate-space spin-up amplitude of the boosted Gaussian packet at theta = 0.

The angular integral of e^{i Phi} e^{-i p r cos(Phi - delta)} is
-2 pi i e^{i delta} J1(p r), so up to a global factor the amplitude is the
radial integral

    int_0^inf dp p e^{-kappa^2 p^2 / 2} J1(p r) sin(alpha(p) / 2) e^{-i p0 x3 sinh(chi)}

and its modulus does not depend on delta. Amplitudes are unnormalized;
only relative densities are meaningful.
"""

import logging
import math

import numpy as np
from numpy.polynomial.legendre import leggauss

from relqfi.apps.model.schema import ModelParams
from relqfi.apps.model.wigner import half_angle_factors
from relqfi.apps.wavepacket.constants import (
    DECAY_SCALE_IN_KAPPA,
    DIRECT_ANGULAR_NODES,
    DIRECT_RADIAL_NODES,
    FINITE_DIFFERENCE_STEP_IN_KAPPA,
    MOMENTUM_CUTOFF,
    PEAK_SCAN_POINTS,
    PEAK_SCAN_RANGE_IN_KAPPA,
)
from relqfi.apps.wavepacket.schema import AmplitudeSample
from relqfi.core.exceptions import InvalidDomain, NoPeak, NoSignChange
from relqfi.core.numerics.quadrature import integrate_semi_infinite
from relqfi.core.numerics.roots import find_root_bracketed, maximize_unimodal
from relqfi.core.numerics.schema import QuadratureSpec
from relqfi.core.numerics.special import bessel_j1

logger = logging.getLogger(__name__)


def _longitudinal_frequency(x3: float, params: ModelParams) -> float:
    """x3 sinh(chi), the coefficient of p0 in the longitudinal phase."""
    if x3 == 0:
        return 0.0
    if params.velocity == 1:
        raise InvalidDomain('x3 must vanish at V = 1.', x3=x3)
    return x3 * params.velocity / params.inverse_gamma


def _check_amplitude_domain(r: float, params: ModelParams):
    if r < 0 or not math.isfinite(r):
        raise InvalidDomain('r must be finite and non-negative.', r=r)
    if params.velocity == 0:
        raise InvalidDomain('the spin-up amplitude vanishes identically at V = 0.')


def _cutoff_spec(spec: QuadratureSpec | None) -> QuadratureSpec:
    spec = spec or QuadratureSpec()
    return spec.model_copy(update={'truncation_radius_in_decay_units': MOMENTUM_CUTOFF})


def spin_up_amplitude(
    r: float,
    x3: float,
    params: ModelParams,
    spec: QuadratureSpec | None = None,
) -> complex:
    _check_amplitude_domain(r, params)
    if r == 0:
        return 0j

    kappa = params.kappa
    frequency = _longitudinal_frequency(x3, params)
    mass = params.mass

    def integrand(p):
        _, sin_half = half_angle_factors(p, params)
        radial = p * np.exp(-((kappa * p) ** 2) / 2) * bessel_j1(p * r) * sin_half
        if frequency == 0:
            return radial
        return radial * np.exp(-1j * np.sqrt(mass * mass + p * p) * frequency)

    panel_width = math.pi / r
    if frequency:
        panel_width = min(panel_width, math.pi / abs(frequency))

    result = integrate_semi_infinite(
        integrand, DECAY_SCALE_IN_KAPPA / kappa, _cutoff_spec(spec), max_panel_width=panel_width
    )
    return complex(result.value)


def spin_up_amplitude_direct(
    r: float,
    delta: float,
    x3: float,
    params: ModelParams,
    radial_nodes: int = DIRECT_RADIAL_NODES,
    angular_nodes: int = DIRECT_ANGULAR_NODES,
) -> complex:
    """Two-dimensional momentum integral before the angular reduction.

    Equals -2 pi i e^{i delta} spin_up_amplitude(r, x3) up to quadrature
    error, so its density is DIRECT_TO_RADIAL_DENSITY times the radial one.
    """
    _check_amplitude_domain(r, params)
    kappa = params.kappa
    frequency = _longitudinal_frequency(x3, params)

    nodes, weights = leggauss(radial_nodes)
    cutoff = MOMENTUM_CUTOFF * DECAY_SCALE_IN_KAPPA / kappa
    momentum = (nodes + 1) * cutoff / 2
    radial_weights = weights * cutoff / 2
    angles = 2 * math.pi * np.arange(angular_nodes) / angular_nodes

    _, sin_half = half_angle_factors(momentum, params)
    radial = (
        radial_weights
        * momentum
        * np.exp(-((kappa * momentum) ** 2) / 2)
        * sin_half
        * np.exp(-1j * np.sqrt(params.mass**2 + momentum**2) * frequency)
    )
    angular = np.exp(1j * angles)[None, :] * np.exp(
        -1j * momentum[:, None] * r * np.cos(angles[None, :] - delta)
    )
    return complex(np.sum(radial[:, None] * angular) * 2 * math.pi / angular_nodes)


def rotational_symmetry_residual(
    params: ModelParams,
    r: float,
    deltas,
    x3: float = 0.0,
) -> float:
    """Largest relative deviation of the direct density over `deltas` from its mean."""
    if params.velocity == 0:
        return 0.0
    densities = np.array(
        [abs(spin_up_amplitude_direct(r, delta, x3, params)) ** 2 for delta in deltas]
    )
    mean = densities.mean()
    if mean == 0 or not np.isfinite(mean):
        return 0.0
    return float(np.max(np.abs(densities - mean)) / mean)


def density_profile(
    params: ModelParams,
    radii,
    x3: float = 0.0,
    spec: QuadratureSpec | None = None,
) -> list[AmplitudeSample]:
    return [
        AmplitudeSample.from_amplitude(
            float(r), spin_up_amplitude(float(r), x3, params, spec), x3=x3
        )
        for r in radii
    ]


def peak_radius(
    params: ModelParams,
    x3: float = 0.0,
    spec: QuadratureSpec | None = None,
    scan_points: int = PEAK_SCAN_POINTS,
) -> float:
    """Radius of the off-axis maximum of the spin-up density."""
    kappa = params.kappa

    def density(r: float) -> float:
        return abs(spin_up_amplitude(r, x3, params, spec)) ** 2

    radii = PEAK_SCAN_RANGE_IN_KAPPA * kappa * np.arange(1, scan_points + 1) / scan_points
    values = np.array([density(r) for r in radii])
    index = int(np.argmax(values))
    if index in (0, scan_points - 1):
        raise NoPeak(velocity=params.velocity, kappa=kappa)

    lo, hi = radii[index - 1], radii[index + 1]
    argmax, _ = maximize_unimodal(density, lo, hi, tol=1e-6 * kappa)

    step = FINITE_DIFFERENCE_STEP_IN_KAPPA * kappa

    def slope(r: float) -> float:
        return (density(r + step) - density(r - step)) / (2 * step)

    try:
        argmax = find_root_bracketed(slope, lo, hi, tol=1e-12 * kappa)
    except NoSignChange:
        logger.debug('density slope keeps its sign on [%g, %g]', lo, hi)

    logger.debug('peak radius %.17g at V=%g', argmax, params.velocity)
    return float(argmax)
