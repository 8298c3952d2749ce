try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from relqfi.apps.fisher.constants import MatrixUnit


class HermitianMatrix2(BaseModel):
    model_config = ConfigDict(frozen=True)

    a11: float
    a22: float
    a12: complex
    unit: MatrixUnit = MatrixUnit.FISHER

    @classmethod
    def from_array(cls, matrix: np.ndarray, unit: MatrixUnit = MatrixUnit.FISHER) -> Self:
        matrix = np.asarray(matrix, dtype=complex)
        return cls(
            a11=float(matrix[0, 0].real),
            a22=float(matrix[1, 1].real),
            a12=complex((matrix[0, 1] + matrix[1, 0].conjugate()) / 2),
            unit=unit,
        )

    @property
    def a21(self) -> complex:
        return self.a12.conjugate()

    def to_array(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]], dtype=complex)

    def matmul(self, other: 'HermitianMatrix2') -> np.ndarray:
        return self.to_array() @ other.to_array()

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.to_array())

    def is_positive_semidefinite(self, tolerance: float = 1e-12) -> bool:
        trace = abs(self.a11 + self.a22)
        return bool(self.eigenvalues().min() >= -tolerance * max(trace, 1e-300))


class PolarGrid(BaseModel):
    model_config = ConfigDict(frozen=True)

    radial_nodes: int = Field(default=200, ge=16, examples=[200])
    angular_nodes: int = Field(default=64, ge=32, examples=[64])
    truncation_radius_in_decay_units: float = Field(default=9.0, ge=6)
    rank_tol: float = Field(default=1e-10, gt=0)
    eigen_rank_tol: float = Field(default=1e-12, gt=0)


class FiniteModel(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rho: np.ndarray
    drho: tuple[np.ndarray, ...]
    rank_tol: float = Field(default=1e-12, gt=0)

    @model_validator(mode='after')
    def density_validation(self) -> Self:
        dimension = self.rho.shape[0]
        if self.rho.shape != (dimension, dimension):
            raise ValueError('rho must be a square matrix.')
        if abs(np.trace(self.rho) - 1) > 1e-10:
            raise ValueError('rho must have unit trace.')
        if np.abs(self.rho - self.rho.conj().T).max() > 1e-10:
            raise ValueError('rho must be hermitian.')
        if np.linalg.eigvalsh((self.rho + self.rho.conj().T) / 2).min() < -1e-12:
            raise ValueError('rho must be positive semidefinite.')
        for derivative in self.drho:
            if derivative.shape != self.rho.shape:
                raise ValueError('each derivative must have the shape of rho.')
            scale = max(1.0, np.abs(derivative).max())
            if abs(np.trace(derivative)) > 1e-10 * scale:
                raise ValueError('derivatives of rho must be traceless.')
        return self

    @property
    def dimension(self) -> int:
        return self.rho.shape[0]

    @property
    def parameters(self) -> int:
        return len(self.drho)


class LambdaWeights(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lambda_value: float = Field(ge=-1, le=1)
    lambda_plus: np.ndarray
    lambda_minus: np.ndarray

    @classmethod
    def from_eigenvalues(cls, eigenvalues: np.ndarray, lambda_value: float) -> Self:
        eigenvalues = np.asarray(eigenvalues, dtype=float)
        return cls(
            lambda_value=lambda_value,
            lambda_plus=(1 + lambda_value) / 2 * eigenvalues,
            lambda_minus=(1 - lambda_value) / 2 * eigenvalues,
        )

    def pair_denominators(self) -> np.ndarray:
        """(1+l)/2 rho_i + (1-l)/2 rho_j for every eigenvalue pair (i, j)."""
        return self.lambda_plus[:, None] + self.lambda_minus[None, :]


class OracleComparison(BaseModel):
    kappa_prime: float
    velocity: float
    lambda_value: float
    theta: tuple[float, float] = (0.0, 0.0)
    dimension: int
    analytic: list[list[complex]]
    general: list[list[complex]]
    relative_error: float = Field(ge=0, description='Relative Frobenius distance.')
