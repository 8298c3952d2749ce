"""
Geometry of the SLD and lambda-LD Cramer-Rao bounds on the (v11, v22)
plane. The SLD bound is the quadrant v_ii >= J_S^{-1}_ii, the lambda-LD
bound is the region above the hyperbola
(v11 - J_l^{-1}_11)(v22 - J_l^{-1}_22) = |Im J_l^{-1}_12|^2.
"""

from relqfi.apps.fisher.analytic import (
    fim_lambda_inverse_analytic,
    sld_fim_inverse,
)
from relqfi.apps.fisher.schema import HermitianMatrix2
from relqfi.apps.model.integrals import model_scalars
from relqfi.apps.model.schema import ModelParams, ModelScalars
from relqfi.apps.tradeoff.constants import RegionClass
from relqfi.apps.tradeoff.schema import BoundIntersections, BoundSlacks, MsePoint
from relqfi.core.numerics.schema import QuadratureSpec


def _inverses(
    lambda_value: float,
    params: ModelParams,
    spec: QuadratureSpec | None,
    scalars: ModelScalars | None,
) -> tuple[HermitianMatrix2, HermitianMatrix2]:
    scalars = scalars or model_scalars(params, spec)
    js_inv = sld_fim_inverse(params, scalars=scalars)
    jl_inv = fim_lambda_inverse_analytic(lambda_value, params, scalars=scalars)
    return js_inv, jl_inv


def bound_slacks(
    point: MsePoint,
    lambda_value: float,
    params: ModelParams,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
) -> BoundSlacks:
    js_inv, jl_inv = _inverses(lambda_value, params, spec, scalars)
    return BoundSlacks(
        sld_11=point.v11 - js_inv.a11,
        sld_22=point.v22 - js_inv.a22,
        lambda_ld=(point.v11 - jl_inv.a11) * (point.v22 - jl_inv.a22)
        - jl_inv.a12.imag**2,
    )


def region_check(
    point: MsePoint,
    lambda_value: float,
    params: ModelParams,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
    tolerance: float = 1e-10,
) -> RegionClass:
    """Classify an MSE point; boundary points within `tolerance` count as allowed."""
    js_inv, _ = _inverses(lambda_value, params, spec, scalars)
    slacks = bound_slacks(point, lambda_value, params, spec, scalars)
    scale = js_inv.a11

    if min(slacks.sld_11, slacks.sld_22) < -tolerance * scale:
        return RegionClass.EXCLUDED_BY_SLD
    if slacks.lambda_ld < -tolerance * scale * scale:
        return RegionClass.EXCLUDED_BY_LAMBDA_ONLY
    return RegionClass.ALLOWED_BY_BOTH


def bound_intersections(
    lambda_value: float,
    params: ModelParams,
    spec: QuadratureSpec | None = None,
    scalars: ModelScalars | None = None,
) -> BoundIntersections | None:
    """Points A and A' where the hyperbola meets the SLD boundary lines.

    Returns None when the hyperbola passes below the SLD corner (omega < 0).
    """
    js_inv, jl_inv = _inverses(lambda_value, params, spec, scalars)
    gap_11 = js_inv.a11 - jl_inv.a11
    gap_22 = js_inv.a22 - jl_inv.a22
    imaginary_square = jl_inv.a12.imag**2

    if imaginary_square < gap_11 * gap_22:
        return None

    return BoundIntersections(
        point_a=MsePoint(v11=js_inv.a11, v22=jl_inv.a22 + imaginary_square / gap_11),
        point_a_prime=MsePoint(v11=jl_inv.a11 + imaginary_square / gap_22, v22=js_inv.a22),
    )
