import math

import numpy as np
import pytest

from relqfi.core.exceptions import InvalidDomain, NonConvergence
from relqfi.core.numerics.quadrature import integrate, integrate_semi_infinite
from relqfi.core.numerics.schema import IntegrationResult, QuadratureSpec
from relqfi.core.numerics.special import erfcx


class TestIntegrateSemiInfinite:
    @pytest.mark.parametrize('kappa_prime', [0.2, 1.0, 4.0])
    def test_exact_antiderivative(self, kappa_prime, spec):
        result = integrate_semi_infinite(
            lambda t: 2 * kappa_prime**2 * t * np.exp(-((kappa_prime * t) ** 2)),
            1 / kappa_prime,
            spec,
        )

        assert isinstance(result, IntegrationResult)
        assert result.value == pytest.approx(1.0, abs=1e-12)
        assert result.error_estimate >= 0
        assert result.evaluations >= 1

    def test_gaussian(self, spec):
        result = integrate_semi_infinite(lambda t: np.exp(-t * t), 1.0, spec)

        assert result.value == pytest.approx(math.sqrt(math.pi) / 2, abs=1e-12)

    def test_auxiliary_closed_form(self, spec):
        result = integrate_semi_infinite(
            lambda t: t**3 * np.exp(-t * t) / (np.sqrt(1 + t * t) + 1), 1.0, spec
        )

        assert result.value == pytest.approx(math.sqrt(math.pi) / 4 * erfcx(1.0), abs=1e-12)

    def test_complex_integrand(self, spec):
        result = integrate_semi_infinite(lambda t: np.exp(-t * t) * np.exp(1j * t), 1.0, spec)

        # int_0^inf e^{-t^2} cos t dt = sqrt(pi)/2 e^{-1/4}
        assert isinstance(result.value, complex)
        assert result.value.real == pytest.approx(
            math.sqrt(math.pi) / 2 * math.exp(-0.25), abs=1e-12
        )

    def test_linearity(self, spec):
        def f(t):
            return np.exp(-t * t) * np.cos(t)

        def g(t):
            return t * t * np.exp(-t * t)

        combined = integrate_semi_infinite(lambda t: 2 * f(t) - 3 * g(t), 1.0, spec)
        first = integrate_semi_infinite(f, 1.0, spec).value
        second = integrate_semi_infinite(g, 1.0, spec).value
        separate = 2 * first - 3 * second

        assert combined.value == pytest.approx(separate, abs=10 * 1e-12)

    @pytest.mark.parametrize('decay_scale', [0.0, -1.0, math.inf])
    def test_invalid_decay_scale(self, decay_scale, spec):
        with pytest.raises(InvalidDomain):
            integrate_semi_infinite(lambda t: np.exp(-t * t), decay_scale, spec)

    def test_non_convergence(self):
        spec = QuadratureSpec(max_subdivisions=2)

        with pytest.raises(NonConvergence):
            integrate_semi_infinite(lambda t: np.sin(200 * t) * np.exp(-t * t), 1.0, spec)


class TestIntegrate:
    def test_empty_interval(self):
        assert integrate(np.cos, 1.0, 1.0).value == 0.0

    def test_reversed_bounds(self):
        with pytest.raises(InvalidDomain):
            integrate(np.cos, 1.0, 0.0)

    def test_max_panel_width_resolves_oscillation(self):
        result = integrate(lambda x: np.cos(50 * x), 0.0, 1.0, max_panel_width=0.05)

        assert result.value == pytest.approx(math.sin(50) / 50, abs=1e-12)


class TestQuadratureSpec:
    def test_defaults(self):
        spec = QuadratureSpec()

        assert spec.relative_tolerance == 1e-12
        assert spec.absolute_tolerance == 1e-15
        assert spec.truncation_radius_in_decay_units == 9.0

    @pytest.mark.parametrize(
        'fields',
        [
            {'relative_tolerance': 0},
            {'absolute_tolerance': -1e-3},
            {'truncation_radius_in_decay_units': 5.0},
        ],
    )
    def test_invalid_fields(self, fields):
        with pytest.raises(ValueError):
            QuadratureSpec(**fields)
