import factory
import numpy as np

from relqfi.apps.fisher.schema import FiniteModel


def random_density(dimension: int, rng: np.random.Generator) -> np.ndarray:
    """Full-rank density matrix with a spread of eigenvalues."""
    factor = rng.normal(size=(dimension, dimension)) + 1j * rng.normal(
        size=(dimension, dimension)
    )
    rho = factor @ factor.conj().T + 0.05 * np.eye(dimension)
    return rho / np.trace(rho).real


def random_derivative(dimension: int, rng: np.random.Generator) -> np.ndarray:
    """Traceless hermitian matrix."""
    factor = rng.normal(size=(dimension, dimension)) + 1j * rng.normal(
        size=(dimension, dimension)
    )
    hermitian = (factor + factor.conj().T) / 2
    return hermitian - np.trace(hermitian) / dimension * np.eye(dimension)


class FiniteModelFactory(factory.Factory):
    rho = factory.LazyAttribute(
        lambda o: random_density(o.dimension, np.random.default_rng(o.seed))
    )
    drho = factory.LazyAttribute(
        lambda o: tuple(
            random_derivative(o.dimension, np.random.default_rng((o.seed, n)))
            for n in range(o.parameters)
        )
    )

    class Params:
        dimension = 3
        parameters = 2
        seed = factory.Sequence(lambda n: n)

    class Meta:
        model = FiniteModel
