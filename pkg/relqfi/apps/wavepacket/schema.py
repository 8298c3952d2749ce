try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator


class AmplitudeSample(BaseModel):
    model_config = ConfigDict(frozen=True)

    r: float = Field(ge=0, examples=[1.0], description='Distance from the boost axis.')
    x3: float = Field(default=0.0, examples=[0.0])
    delta: float = Field(default=0.0, description='Polar angle around the boost axis.')
    amplitude: complex
    density: float = Field(ge=0)

    @model_validator(mode='after')
    def density_validation(self) -> Self:
        expected = abs(self.amplitude) ** 2
        if abs(self.density - expected) > 1e-14 * max(expected, 1e-300):
            raise ValueError('density must equal the squared amplitude.')
        return self

    @classmethod
    def from_amplitude(
        cls, r: float, amplitude: complex, x3: float = 0.0, delta: float = 0.0
    ) -> Self:
        return cls(r=r, x3=x3, delta=delta, amplitude=amplitude, density=abs(amplitude) ** 2)
