from pathlib import Path
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from relqfi.apps.sweep.constants import LAYOUTS, UNITS, OutputFormat, SweepQuantity
from relqfi.core.numerics.schema import QuadratureSpec


class SweepRequest(BaseModel):
    model_config = ConfigDict(frozen=True)

    quantity: SweepQuantity
    kappa_primes: list[float] = Field(min_length=1, examples=[[0.1, 0.5, 1.0]])
    velocities: list[float] = Field(min_length=1, examples=[[0.25, 0.5, 0.75, 1.0]])
    lambdas: list[float] = Field(default_factory=list, examples=[[0.1, 0.5, 0.9]])
    mass: float = Field(default=1.0, gt=0)
    output_format: OutputFormat = OutputFormat.CSV
    output_path: Path | None = None
    spec: QuadratureSpec = Field(default_factory=QuadratureSpec)
    jobs: int = Field(default=1, ge=1)

    @model_validator(mode='after')
    def domain_validation(self) -> Self:
        if any(value <= 0 for value in self.kappa_primes):
            raise ValueError('kappa_prime values must be positive.')
        if any(not 0 <= value <= 1 for value in self.velocities):
            raise ValueError('velocity values must lie in [0, 1].')
        if any(not 0 <= value <= 1 for value in self.lambdas):
            raise ValueError('lambda values must lie in [0, 1].')
        if SweepQuantity.needs_lambda(self.quantity) and not self.lambdas:
            raise ValueError('omega_vs_lambda needs at least one lambda value.')
        return self

    @property
    def columns(self) -> tuple[str, ...]:
        return LAYOUTS[self.quantity][0]


class SweepResult(BaseModel):
    quantity: SweepQuantity
    provenance: dict[str, str]
    units: dict[str, str]
    columns: dict[str, list[float]]

    @classmethod
    def from_rows(cls, request: SweepRequest, provenance: dict, rows: list) -> Self:
        names = request.columns
        return cls(
            quantity=request.quantity,
            provenance=provenance,
            units={name: UNITS[name] for name in names},
            columns={name: [row[i] for row in rows] for i, name in enumerate(names)},
        )

    @property
    def rows(self) -> list[tuple[float, ...]]:
        return list(zip(*self.columns.values()))
