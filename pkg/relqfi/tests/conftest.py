import numpy as np
import pytest

from relqfi.apps.fisher.schema import PolarGrid
from relqfi.apps.model.integrals import model_scalars
from relqfi.apps.model.schema import ModelParams
from relqfi.core.numerics.schema import QuadratureSpec


@pytest.fixture
def params(request):
    param = dict(getattr(request, 'param', {}))
    kappa_prime = param.pop('kappa_prime', 1.0)
    velocity = param.pop('velocity', 0.5)
    return ModelParams.from_kappa_prime(kappa_prime, velocity, **param)


@pytest.fixture
def scalars(params):
    return model_scalars(params)


@pytest.fixture
def spec():
    return QuadratureSpec()


@pytest.fixture
def grid():
    return PolarGrid()


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


@pytest.fixture
def generate_payload():
    def _generate(factory, exclude=None, include=None, **kwargs):
        result = factory.build(**kwargs)
        return result.model_dump(exclude=exclude, include=include)

    return _generate
