import numpy as np
import pytest

from relqfi.core.exceptions import DegenerateInput, EigenFailure
from relqfi.core.numerics.linalg import hermitian_eigh, orthonormalize


def gram(basis, inner_product=None):
    inner_product = inner_product or (lambda v, w: np.vdot(v, w))
    return np.array([[inner_product(u, v) for v in basis] for u in basis])


class TestOrthonormalize:
    def test_orthonormal_inputs(self):
        vectors = [np.array([1, 0, 0], dtype=complex), np.array([0, 1j, 0])]

        basis, coefficients = orthonormalize(vectors)

        assert len(basis) == 2
        np.testing.assert_allclose(coefficients, np.eye(2), atol=1e-15)

    def test_linear_dependence(self):
        v = np.array([3.0, 4.0j, 0.0])

        basis, coefficients = orthonormalize([v, 2 * v])

        assert len(basis) == 1
        np.testing.assert_allclose(coefficients, [[5.0, 10.0]], atol=1e-14)

    def test_reconstruction(self, rng):
        vectors = [rng.normal(size=8) + 1j * rng.normal(size=8) for _ in range(5)]
        vectors.append(vectors[0] - 2j * vectors[3])

        basis, coefficients = orthonormalize(vectors)

        assert len(basis) == 5
        np.testing.assert_allclose(gram(basis), np.eye(5), atol=1e-12)
        for j, vector in enumerate(vectors):
            rebuilt = sum(coefficients[i, j] * basis[i] for i in range(len(basis)))
            assert np.linalg.norm(vector - rebuilt) < 1e-9 * np.linalg.norm(vector)

    def test_weighted_inner_product(self, rng):
        weights = rng.uniform(0.5, 2.0, size=6)

        def inner_product(v, w):
            return complex(np.sum(weights * np.conj(v) * w))

        vectors = [rng.normal(size=6) for _ in range(3)]
        basis, _ = orthonormalize(vectors, inner_product)

        np.testing.assert_allclose(gram(basis, inner_product), np.eye(3), atol=1e-12)

    def test_nearly_parallel_inputs(self):
        v = np.array([1.0, 0.0, 0.0])
        w = np.array([1.0, 1e-9, 0.0])

        basis, _ = orthonormalize([v, w])

        assert len(basis) == 2
        assert abs(np.vdot(basis[0], basis[1])) < 1e-12

    def test_all_zero(self):
        with pytest.raises(DegenerateInput):
            orthonormalize([np.zeros(3), np.zeros(3)])


class TestHermitianEigh:
    def test_eigenvalues_sorted(self):
        eigenvalues, _ = hermitian_eigh(np.diag([0.7, 0.3]))

        np.testing.assert_allclose(eigenvalues, [0.3, 0.7])

    def test_rejects_non_hermitian(self):
        with pytest.raises(EigenFailure):
            hermitian_eigh(np.array([[1.0, 1.0], [0.0, 1.0]]))
