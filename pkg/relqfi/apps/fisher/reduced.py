"""
Finite-dimensional image of the boosted wave packet.

The rank-2 state and its two shift derivatives live in the span of
{F_down, F_up, p1 F_down, p2 F_down, p1 F_up, p2 F_up}. Orthonormalizing
these six momentum-space functions on a polar grid gives an exact matrix
representation of rho and d rho, on which the general lambda-LD algorithm
runs.
"""

import logging
import math

import numpy as np
from numpy.polynomial.legendre import leggauss

from relqfi.apps.fisher.schema import FiniteModel, PolarGrid
from relqfi.apps.model.schema import ModelParams
from relqfi.apps.model.wigner import half_angle_factors
from relqfi.core.exceptions import GridTooCoarse, InvalidDomain
from relqfi.core.numerics.linalg import orthonormalize

logger = logging.getLogger(__name__)

TRACE_TOLERANCE = 1e-8


class MomentumGrid:
    """Polar quadrature grid on the (p1, p2) plane with flat measure dp1 dp2."""

    def __init__(self, params: ModelParams, grid: PolarGrid):
        nodes, weights = leggauss(grid.radial_nodes)
        radius = grid.truncation_radius_in_decay_units / params.kappa
        momentum = (nodes + 1) * radius / 2
        radial_weights = weights * radius / 2

        self.angles = 2 * math.pi * np.arange(grid.angular_nodes) / grid.angular_nodes
        self.momentum, self.angle = np.meshgrid(momentum, self.angles, indexing='ij')
        self.p1 = self.momentum * np.cos(self.angle)
        self.p2 = self.momentum * np.sin(self.angle)
        self.measure = (radial_weights * momentum)[:, None] * (
            2 * math.pi / grid.angular_nodes
        )

    def inner(self, u: np.ndarray, v: np.ndarray) -> complex:
        return complex(np.sum(self.measure * np.conj(u) * v))


def state_amplitudes(params: ModelParams, theta, momentum_grid: MomentumGrid):
    """Spin-down and spin-up momentum amplitudes of the shifted packet."""
    kappa = params.kappa
    envelope = kappa / math.sqrt(math.pi) * np.exp(-((kappa * momentum_grid.momentum) ** 2) / 2)
    shift = np.exp(-1j * (momentum_grid.p1 * theta[0] + momentum_grid.p2 * theta[1]))
    cos_half, sin_half = half_angle_factors(momentum_grid.momentum, params)

    down = envelope * shift * cos_half
    up = -envelope * shift * np.exp(1j * momentum_grid.angle) * sin_half
    return down, up


def build_reduced_model(
    params: ModelParams,
    theta: tuple[float, float] = (0.0, 0.0),
    grid: PolarGrid | None = None,
) -> FiniteModel:
    grid = grid or PolarGrid()
    if params.velocity == 0:
        raise InvalidDomain('the reduced model needs V > 0 for a rank-2 state.')

    momentum_grid = MomentumGrid(params, grid)
    down, up = state_amplitudes(params, theta, momentum_grid)
    p1, p2 = momentum_grid.p1, momentum_grid.p2
    vectors = [down, up, p1 * down, p2 * down, p1 * up, p2 * up]

    _, coefficients = orthonormalize(vectors, momentum_grid.inner, grid.rank_tol)
    states = [coefficients[:, 0], coefficients[:, 1]]
    generated = [
        [coefficients[:, 2], coefficients[:, 4]],
        [coefficients[:, 3], coefficients[:, 5]],
    ]

    rho = sum(np.outer(state, state.conj()) for state in states)
    trace = float(np.trace(rho).real)
    if abs(trace - 1) > TRACE_TOLERANCE:
        raise GridTooCoarse(trace=trace, radial_nodes=grid.radial_nodes)

    drho = []
    for shifted in generated:
        derivative = sum(
            -1j * np.outer(moved, state.conj()) + 1j * np.outer(state, moved.conj())
            for moved, state in zip(shifted, states)
        )
        drho.append(derivative / trace)

    logger.debug('reduced model of dimension %d, trace %.17g', rho.shape[0], trace)
    return FiniteModel(rho=rho / trace, drho=tuple(drho), rank_tol=grid.eigen_rank_tol)
