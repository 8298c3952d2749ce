import math
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class ModelParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    mass: float = Field(default=1.0, gt=0, examples=[1.0])
    kappa: float = Field(gt=0, examples=[1.0])
    velocity: float = Field(ge=0, le=1, examples=[0.5])

    @classmethod
    def from_kappa_prime(cls, kappa_prime: float, velocity: float, mass: float = 1.0):
        return cls(mass=mass, kappa=kappa_prime / mass, velocity=velocity)

    @property
    def kappa_prime(self) -> float:
        return self.mass * self.kappa

    @property
    def rapidity(self) -> float:
        if self.velocity == 1:
            return math.inf
        return math.atanh(self.velocity)

    @property
    def inverse_gamma(self) -> float:
        """1/cosh(rapidity), finite at V = 1."""
        return math.sqrt((1 - self.velocity) * (1 + self.velocity))


class ModelScalars(BaseModel):
    model_config = ConfigDict(frozen=True)

    zeta: float = Field(ge=0, lt=1)
    xi: float = Field(gt=0, le=1)


class WignerAngles(BaseModel):
    model_config = ConfigDict(frozen=True)

    cos_alpha: float = Field(ge=-1, le=1)
    sin_alpha: float = Field(ge=-1, le=1)
    phi: float = 0.0
    phase_defined: bool = True

    @model_validator(mode='after')
    def unit_circle_validation(self) -> Self:
        if abs(self.cos_alpha**2 + self.sin_alpha**2 - 1) > 1e-12:
            raise ValueError('cos_alpha and sin_alpha must lie on the unit circle.')
        return self

    @classmethod
    def from_angles(cls, alpha: float, phi: float = 0.0) -> Self:
        return cls(cos_alpha=math.cos(alpha), sin_alpha=math.sin(alpha), phi=phi)

    @property
    def alpha(self) -> float:
        return math.atan2(self.sin_alpha, self.cos_alpha)


class Rotation3(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: np.ndarray

    @model_validator(mode='after')
    def rotation_validation(self) -> Self:
        if self.entries.shape != (3, 3):
            raise ValueError('a rotation must be a 3x3 matrix.')
        if np.abs(self.entries.T @ self.entries - np.eye(3)).max() > 1e-10:
            raise ValueError('rotation matrix must be orthogonal.')
        if abs(np.linalg.det(self.entries) - 1) > 1e-10:
            raise ValueError('rotation matrix must have unit determinant.')
        return self
