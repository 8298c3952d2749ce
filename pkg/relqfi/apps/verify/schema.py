try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, Field

from relqfi.apps.verify.constants import VerifyLevel


class CheckResult(BaseModel):
    name: str = Field(examples=['identity_residual_grid'])
    tolerance: float
    measured: float
    passed: bool
    detail: str = ''


class VerifyReport(BaseModel):
    level: VerifyLevel
    passed: bool
    checks: list[CheckResult]

    @classmethod
    def from_checks(cls, level: VerifyLevel, checks: list[CheckResult]) -> Self:
        return cls(level=level, passed=all(check.passed for check in checks), checks=checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]
