"""
Composite adaptive Gauss-Legendre quadrature.

Every panel carries a 15-point rule on the whole panel and on its two halves;
the difference of the two estimates is the panel error. Panels whose error
exceeds their share of the tolerance are bisected, and all panels of one
refinement round are evaluated in a single vectorized call of the integrand.
"""

import logging
from collections.abc import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss

from relqfi.core.exceptions import InvalidDomain, NonConvergence
from relqfi.core.numerics.schema import IntegrationResult, QuadratureSpec

logger = logging.getLogger(__name__)

PANEL_ORDER = 15
ROUNDING_FLOOR = 64 * np.finfo(float).eps

_NODES, _WEIGHTS = leggauss(PANEL_ORDER)

Integrand = Callable[[np.ndarray], np.ndarray]


def _evaluate(f: Integrand, points: np.ndarray) -> np.ndarray:
    values = np.asarray(f(points.ravel()))
    return np.broadcast_to(values, points.size).reshape(points.shape)


def _panel_rules(f: Integrand, left: np.ndarray, right: np.ndarray):
    middle = (left + right) / 2
    lefts = np.concatenate([left, left, middle])
    rights = np.concatenate([right, middle, right])

    half_widths = (rights - lefts) / 2
    centers = (rights + lefts) / 2
    points = centers[:, None] + half_widths[:, None] * _NODES[None, :]
    values = _evaluate(f, points)

    estimates = half_widths * (values @ _WEIGHTS)
    magnitudes = half_widths * (np.abs(values) @ _WEIGHTS)

    count = left.size
    coarse = estimates[:count]
    fine = estimates[count : 2 * count] + estimates[2 * count :]
    magnitude = magnitudes[count : 2 * count] + magnitudes[2 * count :]
    return coarse, fine, magnitude, points.size


def integrate(
    f: Integrand,
    a: float,
    b: float,
    spec: QuadratureSpec | None = None,
    max_panel_width: float | None = None,
) -> IntegrationResult:
    """Integrate a vectorized integrand over the finite interval [a, b].

    `f` receives a one-dimensional array of abscissae and must return an
    array of the same length (real or complex). `max_panel_width` caps the
    width of the initial panels, which keeps oscillatory integrands resolved.
    """
    spec = spec or QuadratureSpec()
    if not (np.isfinite(a) and np.isfinite(b)) or b < a:
        raise InvalidDomain('integration bounds must be finite with a <= b.', a=a, b=b)
    if a == b:
        return IntegrationResult(value=0.0, error_estimate=0.0, evaluations=1)

    panels = spec.initial_panels
    if max_panel_width is not None:
        if max_panel_width <= 0:
            raise InvalidDomain('max_panel_width must be positive.')
        panels = max(panels, int(np.ceil((b - a) / max_panel_width)))

    edges = np.linspace(a, b, panels + 1)
    left, right = edges[:-1], edges[1:]
    length = b - a

    accepted_value = 0.0
    accepted_error = 0.0
    evaluations = 0
    subdivisions = 0

    while True:
        coarse, fine, magnitude, count = _panel_rules(f, left, right)
        evaluations += count
        error = np.abs(fine - coarse)

        total_value = accepted_value + fine.sum()
        total_error = accepted_error + error.sum()
        tolerance = max(spec.relative_tolerance * abs(total_value), spec.absolute_tolerance)

        if total_error <= tolerance:
            break

        budget = tolerance * (right - left) / length
        settled = (error <= budget) | (error <= ROUNDING_FLOOR * magnitude)
        if settled.all():
            break

        refine = ~settled
        accepted_value += fine[settled].sum()
        accepted_error += error[settled].sum()

        subdivisions += int(refine.sum())
        if subdivisions > spec.max_subdivisions:
            raise NonConvergence(
                a=a, b=b, error=float(total_error), tolerance=float(tolerance)
            )

        middle = (left[refine] + right[refine]) / 2
        left = np.concatenate([left[refine], middle])
        right = np.concatenate([middle, right[refine]])
        logger.debug('refining %d panels, error %.3e', refine.sum(), total_error)

    if np.iscomplexobj(total_value):
        value = complex(total_value)
    else:
        value = float(total_value)
    return IntegrationResult(
        value=value,
        error_estimate=float(total_error),
        evaluations=evaluations,
        subdivisions=subdivisions,
    )


def integrate_semi_infinite(
    f: Integrand,
    decay_scale: float,
    spec: QuadratureSpec | None = None,
    max_panel_width: float | None = None,
) -> IntegrationResult:
    """Integrate a Gaussian-dominated integrand over [0, inf).

    The interval is truncated at `truncation_radius_in_decay_units *
    decay_scale`, beyond which the tail is below the working precision.
    """
    spec = spec or QuadratureSpec()
    if not np.isfinite(decay_scale) or decay_scale <= 0:
        raise InvalidDomain('decay_scale must be positive.', decay_scale=decay_scale)
    upper = spec.truncation_radius_in_decay_units * decay_scale
    return integrate(f, 0.0, upper, spec, max_panel_width=max_panel_width)
