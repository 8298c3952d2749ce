from pydantic import BaseModel, ConfigDict, Field


class MsePoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    v11: float = Field(gt=0, examples=[0.6], description='(1, 1) entry of the MSE matrix.')
    v22: float = Field(gt=0, examples=[0.6], description='(2, 2) entry of the MSE matrix.')


class BoundIntersections(BaseModel):
    model_config = ConfigDict(frozen=True)

    point_a: MsePoint = Field(description='Lambda boundary on the line v11 = J_S^{-1}_11.')
    point_a_prime: MsePoint = Field(description='Lambda boundary on the line v22 = J_S^{-1}_22.')


class BoundSlacks(BaseModel):
    sld_11: float
    sld_22: float
    lambda_ld: float = Field(
        description='(v11 - J_l^{-1}_11)(v22 - J_l^{-1}_22) - |Im J_l^{-1}_12|^2.'
    )


class MonotonicityCertificate(BaseModel):
    monotone: bool
    discriminant: float
    discriminant_closed_form: float
    a: float
    b: float
    c: float

    @property
    def abc(self) -> tuple[float, float, float]:
        return self.a, self.b, self.c


class TradeoffReport(BaseModel):
    lambda_value: float = Field(ge=0, le=1, examples=[0.3])
    omega: float
    omega_prime: float
    omega_limit0: float
    omega_limit1: float
    lambda_star: float = Field(ge=0, lt=1)
    monotone_decreasing: bool
    discriminant: float

    @property
    def certifies_tradeoff(self) -> bool:
        return self.omega > 0
