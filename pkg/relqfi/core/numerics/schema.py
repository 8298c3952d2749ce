try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator


class QuadratureSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    relative_tolerance: float = Field(default=1e-12, gt=0, examples=[1e-12])
    absolute_tolerance: float = Field(default=1e-15, gt=0, examples=[1e-15])
    max_subdivisions: int = Field(default=4000, ge=1, examples=[4000])
    truncation_radius_in_decay_units: float = Field(default=9.0, examples=[9.0])
    initial_panels: int = Field(default=8, ge=1)

    @model_validator(mode='after')
    def truncation_validation(self) -> Self:
        if self.truncation_radius_in_decay_units < 6:
            raise ValueError('truncation radius must be at least 6 decay units.')
        return self


class IntegrationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float | complex
    error_estimate: float = Field(ge=0)
    evaluations: int = Field(ge=1)
    subdivisions: int = Field(default=0, ge=0)
