from collections.abc import Callable, Sequence

import numpy as np

from relqfi.core.exceptions import DegenerateInput, EigenFailure

REORTHOGONALIZATION_RATIO = 0.7


def flat_inner_product(v, w) -> complex:
    return complex(np.vdot(v, w))


def orthonormalize(
    vectors: Sequence,
    inner_product: Callable = flat_inner_product,
    rank_tol: float = 1e-10,
):
    """Modified Gram-Schmidt with one reorthogonalization pass.

    `inner_product` must be conjugate-linear in its first argument. Returns
    the orthonormal basis and the matrix `coefficients` with
    `vectors[j] = sum_i coefficients[i, j] * basis[i]`. Inputs whose residual
    norm drops below `rank_tol` times the largest input norm are expressed in
    the existing basis and contribute no new direction.
    """
    norms = [np.sqrt(max(inner_product(v, v).real, 0.0)) for v in vectors]
    largest = max(norms, default=0.0)
    if largest == 0.0:
        raise DegenerateInput()

    basis = []
    columns = []
    for vector, norm in zip(vectors, norms):
        residual = vector
        projections = np.zeros(len(basis), dtype=complex)
        for _ in range(2):
            for i, direction in enumerate(basis):
                overlap = inner_product(direction, residual)
                projections[i] += overlap
                residual = residual - overlap * direction
            residual_norm = np.sqrt(max(inner_product(residual, residual).real, 0.0))
            if residual_norm >= REORTHOGONALIZATION_RATIO * norm:
                break

        column = list(projections)
        if residual_norm > rank_tol * largest:
            basis.append(residual / residual_norm)
            column.append(residual_norm)
        columns.append(column)

    coefficients = np.zeros((len(basis), len(vectors)), dtype=complex)
    for j, column in enumerate(columns):
        coefficients[: len(column), j] = column
    return basis, coefficients


def hermitian_eigh(matrix: np.ndarray, tolerance: float = 1e-10):
    """Eigendecomposition of a Hermitian matrix with an explicit symmetry check."""
    matrix = np.asarray(matrix, dtype=complex)
    scale = max(np.abs(matrix).max(), 1.0)
    if np.abs(matrix - matrix.conj().T).max() > tolerance * scale:
        raise EigenFailure()
    try:
        return np.linalg.eigh((matrix + matrix.conj().T) / 2)
    except np.linalg.LinAlgError as exc:
        raise EigenFailure(str(exc)) from exc
