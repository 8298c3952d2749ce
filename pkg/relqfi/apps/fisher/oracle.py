import logging

import numpy as np

from relqfi.apps.fisher.analytic import fim_lambda_analytic
from relqfi.apps.fisher.general import fim_lambda_general
from relqfi.apps.fisher.reduced import build_reduced_model
from relqfi.apps.fisher.schema import OracleComparison, PolarGrid
from relqfi.apps.model.schema import ModelParams
from relqfi.core.numerics.schema import QuadratureSpec

logger = logging.getLogger(__name__)


def relative_frobenius(matrix: np.ndarray, reference: np.ndarray) -> float:
    return float(np.linalg.norm(matrix - reference) / np.linalg.norm(reference))


def compare_with_analytic(
    lambda_value: float,
    params: ModelParams,
    theta: tuple[float, float] = (0.0, 0.0),
    grid: PolarGrid | None = None,
    spec: QuadratureSpec | None = None,
) -> OracleComparison:
    model = build_reduced_model(params, theta, grid)
    general = fim_lambda_general(model, lambda_value)
    analytic = fim_lambda_analytic(lambda_value, params, spec).to_array()
    error = relative_frobenius(general, analytic)

    logger.info(
        'oracle kappa_prime=%g V=%g lambda=%g: relative error %.3e',
        params.kappa_prime,
        params.velocity,
        lambda_value,
        error,
    )
    return OracleComparison(
        kappa_prime=params.kappa_prime,
        velocity=params.velocity,
        lambda_value=lambda_value,
        theta=theta,
        dimension=model.dimension,
        analytic=analytic.tolist(),
        general=general.tolist(),
        relative_error=error,
    )
