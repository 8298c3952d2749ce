from pydantic_settings import BaseSettings, SettingsConfigDict

from relqfi.apps.fisher.schema import PolarGrid
from relqfi.core.numerics.schema import QuadratureSpec


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix='RELQFI_', env_file='.env', env_file_encoding='utf-8'
    )

    RELATIVE_TOLERANCE: float = 1e-12
    ABSOLUTE_TOLERANCE: float = 1e-15
    MAX_SUBDIVISIONS: int = 4000
    TRUNCATION_RADIUS: float = 9.0

    RANK_TOL: float = 1e-10
    EIGEN_RANK_TOL: float = 1e-12
    GRID_RADIAL: int = 200
    GRID_ANGULAR: int = 64

    PEAK_SCAN_POINTS: int = 256
    JOBS: int = 1
    LOG_LEVEL: str = 'WARNING'

    def quadrature_spec(self, **overrides) -> QuadratureSpec:
        fields = {
            'relative_tolerance': self.RELATIVE_TOLERANCE,
            'absolute_tolerance': self.ABSOLUTE_TOLERANCE,
            'max_subdivisions': self.MAX_SUBDIVISIONS,
            'truncation_radius_in_decay_units': self.TRUNCATION_RADIUS,
        }
        return QuadratureSpec(**(fields | overrides))

    def polar_grid(self, **overrides) -> PolarGrid:
        fields = {
            'radial_nodes': self.GRID_RADIAL,
            'angular_nodes': self.GRID_ANGULAR,
            'truncation_radius_in_decay_units': self.TRUNCATION_RADIUS,
            'rank_tol': self.RANK_TOL,
            'eigen_rank_tol': self.EIGEN_RANK_TOL,
        }
        return PolarGrid(**(fields | overrides))
