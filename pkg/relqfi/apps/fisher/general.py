"""
lambda-logarithmic-derivative Fisher information of an arbitrary finite model.

In the eigenbasis of rho the lambda-LD solves
  <a|d rho|b> = ((1+l)/2 rho_a + (1-l)/2 rho_b) <a|L|b>
and J_mn = tr(d_n rho L_m^dagger) becomes a weighted sum over eigenvalue
pairs. Pairs with both indices in the kernel carry no information and are
skipped, so the undetermined kernel block of L never enters.
"""

import logging

import numpy as np

from relqfi.apps.fisher.schema import FiniteModel, LambdaWeights
from relqfi.core.exceptions import LambdaOutOfRange, RldUndefined
from relqfi.core.numerics.linalg import hermitian_eigh

logger = logging.getLogger(__name__)


def fim_lambda_general(model: FiniteModel, lambda_value: float) -> np.ndarray:
    if abs(lambda_value) > 1:
        raise LambdaOutOfRange(lambda_value=lambda_value)

    eigenvalues, eigenvectors = hermitian_eigh(model.rho)
    support = eigenvalues > model.rank_tol * eigenvalues.max()
    if abs(lambda_value) == 1 and not support.all():
        raise RldUndefined(rank=int(support.sum()), dimension=model.dimension)
    logger.debug('rank %d of %d', support.sum(), model.dimension)

    weights = LambdaWeights.from_eigenvalues(np.where(support, eigenvalues, 0.0), lambda_value)
    denominators = weights.pair_denominators()
    pairs = support[:, None] | support[None, :]

    inverse = np.zeros_like(denominators)
    inverse[pairs] = 1 / denominators[pairs]

    rotated = np.array([eigenvectors.conj().T @ d @ eigenvectors for d in model.drho])
    fisher = np.einsum('nab,mba,ab->mn', rotated, rotated, inverse)
    return (fisher + fisher.conj().T) / 2


def sld_fim_general(model: FiniteModel) -> np.ndarray:
    return fim_lambda_general(model, 0.0)
