"""
Closed-form lambda-logarithmic-derivative Fisher information of the boosted
wave packet. The dimensionless cores are kappa^2 J and J^{-1} / kappa^2;
the public functions attach the kappa scaling.
"""

from relqfi.apps.fisher.constants import MatrixUnit
from relqfi.apps.fisher.schema import HermitianMatrix2
from relqfi.apps.model.integrals import model_scalars
from relqfi.apps.model.schema import ModelParams, ModelScalars
from relqfi.core.exceptions import LambdaOutOfRange
from relqfi.core.numerics.schema import QuadratureSpec


def fim_core(lambda_value: float, zeta: float, xi: float) -> tuple[float, float]:
    """Diagonal entry and imaginary part of the (1, 2) entry of kappa^2 J."""
    square = lambda_value * lambda_value
    prefactor = 2 / ((1 - square) * (1 - square * xi * xi))
    diagonal = prefactor * (1 - zeta * zeta - square * xi * xi)
    off_diagonal = prefactor * lambda_value * zeta * zeta * xi
    return diagonal, off_diagonal


def fim_inverse_core(lambda_value: float, zeta: float, xi: float) -> tuple[float, float]:
    """Diagonal entry and imaginary part of the (1, 2) entry of J^{-1} / kappa^2."""
    square = lambda_value * lambda_value
    gap = 1 - zeta * zeta
    prefactor = (1 - square) / (2 * (gap * gap - square * xi * xi))
    diagonal = prefactor * (gap - square * xi * xi)
    off_diagonal = -prefactor * lambda_value * zeta * zeta * xi
    return diagonal, off_diagonal


def _scalars(params, spec, scalars):
    return scalars or model_scalars(params, spec)


def fim_lambda_analytic(
    lambda_value: float,
    params: ModelParams,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
) -> HermitianMatrix2:
    if abs(lambda_value) >= 1:
        raise LambdaOutOfRange(lambda_value=lambda_value)
    scalars = _scalars(params, spec, scalars)
    diagonal, off_diagonal = fim_core(lambda_value, scalars.zeta, scalars.xi)
    scale = 1 / params.kappa**2
    return HermitianMatrix2(
        a11=diagonal * scale,
        a22=diagonal * scale,
        a12=1j * off_diagonal * scale,
        unit=MatrixUnit.FISHER,
    )


def sld_fim_inverse(
    params: ModelParams,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
) -> HermitianMatrix2:
    scalars = _scalars(params, spec, scalars)
    diagonal = params.kappa**2 / (2 * (1 - scalars.zeta**2))
    return HermitianMatrix2(a11=diagonal, a22=diagonal, a12=0j, unit=MatrixUnit.INVERSE)


def fim_lambda_inverse_analytic(
    lambda_value: float,
    params: ModelParams,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
) -> HermitianMatrix2:
    if abs(lambda_value) > 1:
        raise LambdaOutOfRange(lambda_value=lambda_value)
    if lambda_value == 0:
        return sld_fim_inverse(params, spec, scalars)
    if abs(lambda_value) == 1:
        return HermitianMatrix2(a11=0.0, a22=0.0, a12=0j, unit=MatrixUnit.INVERSE)

    scalars = _scalars(params, spec, scalars)
    diagonal, off_diagonal = fim_inverse_core(lambda_value, scalars.zeta, scalars.xi)
    scale = params.kappa**2
    return HermitianMatrix2(
        a11=diagonal * scale,
        a22=diagonal * scale,
        a12=1j * off_diagonal * scale,
        unit=MatrixUnit.INVERSE,
    )
