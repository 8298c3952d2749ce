"""
Wigner rotation of a spin-1/2 particle with momentum (p1, p2, 0) seen by an
observer boosted along z with velocity V.
"""

import math

import numpy as np

from relqfi.apps.model.schema import ModelParams, Rotation3, WignerAngles
from relqfi.core.exceptions import InvalidDomain

PAULI_Y = np.array([[0, -1j], [1j, 0]])


def rotation_cosines(momentum, params: ModelParams):
    """cos(alpha) and sin(alpha) for |p| = momentum, vectorized.

    Both are written with 1/cosh(rapidity) so that V = 1 stays finite.
    """
    momentum = np.asarray(momentum, dtype=float)
    mass = params.mass
    energy = np.sqrt(mass * mass + momentum * momentum)
    inverse_gamma = params.inverse_gamma
    denominator = energy + mass * inverse_gamma
    cos_alpha = (energy * inverse_gamma + mass) / denominator
    sin_alpha = -momentum * params.velocity / denominator
    return cos_alpha, sin_alpha


def half_angle_factors(momentum, params: ModelParams):
    """cos(alpha/2) and sin(alpha/2); alpha lies in (-pi/2, 0] so cos(alpha/2) > 0."""
    cos_alpha, sin_alpha = rotation_cosines(momentum, params)
    cos_half = np.sqrt((1 + cos_alpha) / 2)
    sin_half = sin_alpha / (2 * cos_half)
    return cos_half, sin_half


def wigner_angles(p1: float, p2: float, params: ModelParams) -> WignerAngles:
    momentum = math.hypot(p1, p2)
    if momentum == 0:
        return WignerAngles(cos_alpha=1.0, sin_alpha=0.0, phi=0.0, phase_defined=False)
    cos_alpha, sin_alpha = rotation_cosines(momentum, params)
    return WignerAngles(
        cos_alpha=float(cos_alpha),
        sin_alpha=float(sin_alpha),
        phi=math.atan2(p2, p1),
    )


def rotation_z(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, s, 0.0], [-s, c, 0.0], [0.0, 0.0, 1.0]])


def rotation_y(cos_angle: float, sin_angle: float) -> np.ndarray:
    return np.array(
        [
            [cos_angle, 0.0, -sin_angle],
            [0.0, 1.0, 0.0],
            [sin_angle, 0.0, cos_angle],
        ]
    )


def euler_rotation(angles: WignerAngles) -> Rotation3:
    """R_z(-phi) R_y(alpha) R_z(phi)."""
    entries = (
        rotation_z(-angles.phi)
        @ rotation_y(angles.cos_alpha, angles.sin_alpha)
        @ rotation_z(angles.phi)
    )
    return Rotation3(entries=entries)


def wigner_rotation_matrix(p1: float, p2: float, params: ModelParams) -> Rotation3:
    """Component form of the Wigner rotation.

    The hyperbolic factors are divided through by sinh^2 or cosh of the
    rapidity so that every entry is a rational function of V and
    1/cosh(rapidity).
    """
    square = p1 * p1 + p2 * p2
    if square == 0:
        raise InvalidDomain('wigner rotation needs a nonzero transverse momentum.')

    velocity = params.velocity
    if velocity == 0:
        return Rotation3(entries=np.eye(3))

    mass = params.mass
    energy = math.sqrt(mass * mass + square)
    inverse_gamma = params.inverse_gamma
    cosh_over_sinh2 = inverse_gamma / velocity**2
    inverse_sinh2 = inverse_gamma**2 / velocity**2
    boosted = energy + mass * inverse_gamma

    def diagonal(a: float, b: float) -> float:
        numerator = energy * (mass * a * a + energy * b * b) + square * (
            a * a * cosh_over_sinh2 + b * b * inverse_sinh2
        )
        return numerator / (square * (energy * energy + square * inverse_sinh2))

    r11 = diagonal(p1, p2)
    r22 = diagonal(p2, p1)
    r12 = -p1 * p2 * (1 - inverse_gamma) * (energy - mass) / (square * boosted)
    r31 = -p1 * velocity / boosted
    r32 = -p2 * velocity / boosted
    r33 = (energy * inverse_gamma + mass) / boosted

    entries = np.array(
        [
            [r11, r12, -r31],
            [r12, r22, -r32],
            [r31, r32, r33],
        ]
    )
    return Rotation3(entries=entries)


def spin_half_rep(angles: WignerAngles) -> np.ndarray:
    """exp(i phi s3/2) exp(-i alpha s2/2) exp(-i phi s3/2)."""
    half = angles.alpha / 2
    phase = np.diag([np.exp(0.5j * angles.phi), np.exp(-0.5j * angles.phi)])
    rotation = math.cos(half) * np.eye(2) - 1j * math.sin(half) * PAULI_Y
    return phase @ rotation @ phase.conj()
