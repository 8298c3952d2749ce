import math
import warnings

import numpy as np
import pytest

from relqfi.apps.model.constants import ZETA_REL_AT_REST_MASS
from relqfi.apps.model.integrals import (
    aux_integral_plus_one,
    aux_integral_sqrt,
    identity_residual,
    model_scalars,
    rest_frame_gap,
    theta_ratio,
    xi,
    xi_quadrature,
    xi_rel,
    zeta,
    zeta_quadrature,
    zeta_rel,
    zeta_bounds,
)
from relqfi.apps.model.schema import ModelParams
from relqfi.core.exceptions import DivisionByZero, InvalidDomain, NearLightSpeedWarning
from relqfi.core.numerics.quadrature import integrate_semi_infinite
from relqfi.core.numerics.special import erfc

KAPPA_GRID = np.linspace(0.05, 5, 20)
VELOCITY_GRID = np.linspace(0.05, 0.99, 20)


class TestZetaXi:
    @pytest.mark.parametrize('params', [{'kappa_prime': 1.0, 'velocity': 0.0}], indirect=True)
    def test_rest_frame(self, params):
        assert zeta(params) == 0.0
        assert xi(params) == 1.0

    def test_rest_frame_other_spread(self):
        assert xi(ModelParams.from_kappa_prime(0.7, 0.0)) == pytest.approx(1.0, abs=1e-10)

    def test_near_light_speed_substitution(self):
        params = ModelParams.from_kappa_prime(1.0, 1 - 1e-10)

        with pytest.warns(NearLightSpeedWarning):
            value = zeta(params)

        assert value == pytest.approx(zeta_rel(1.0), abs=1e-9)

    def test_light_speed_is_silent(self):
        params = ModelParams.from_kappa_prime(1.0, 1.0)

        with warnings.catch_warnings():
            warnings.simplefilter('error')
            assert xi(params) == xi_rel(1.0)

    def test_small_spread_at_light_speed(self):
        params = ModelParams.from_kappa_prime(0.01, 1.0)

        assert zeta(params) == pytest.approx(ZETA_REL_AT_REST_MASS, abs=1e-3)

    def test_xi_rel_known_value(self):
        assert xi_rel(1.0) == pytest.approx(math.sqrt(math.pi) * math.e * erfc(1.0), abs=1e-10)

    @pytest.mark.parametrize('kappa_prime', [0.1, 0.5, 1.0, 2.0, 5.0])
    def test_closed_forms_match_quadrature_at_light_speed(self, kappa_prime):
        assert zeta_quadrature(kappa_prime, 1.0) == pytest.approx(zeta_rel(kappa_prime), abs=1e-9)
        assert xi_quadrature(kappa_prime, 1.0) == pytest.approx(xi_rel(kappa_prime), abs=1e-9)

    @pytest.mark.parametrize('kappa_prime', [0.5, 1.0, 3.0])
    def test_zeta_increases_with_velocity(self, kappa_prime):
        values = [
            zeta(ModelParams.from_kappa_prime(kappa_prime, v)) for v in np.linspace(0, 0.99, 25)
        ]

        assert np.all(np.diff(values) > 0)

    def test_ranges(self):
        for kappa_prime in (0.05, 0.5, 5.0):
            for velocity in (0.1, 0.6, 1.0):
                scalars = model_scalars(ModelParams.from_kappa_prime(kappa_prime, velocity))
                assert 0 <= scalars.zeta < 1
                assert 0 < scalars.xi <= 1

    @pytest.mark.parametrize('kappa_prime', [0.0, -1.0, math.nan])
    def test_invalid_kappa_prime(self, kappa_prime):
        with pytest.raises(InvalidDomain):
            zeta_quadrature(kappa_prime, 0.5)


class TestClosedForms:
    def test_limits(self):
        assert zeta_rel(1e-4) == pytest.approx(ZETA_REL_AT_REST_MASS, abs=1e-4)
        assert xi_rel(1e-4) < 1e-3
        assert xi_rel(50.0) == pytest.approx(1 - 1 / (2 * 50.0**2), abs=1e-6)
        assert xi_rel(100.0) == pytest.approx(1 - 1 / (2 * 100.0**2), abs=1e-6)
        assert zeta_rel(200.0) < 1e-2

    def test_monotone_in_spread(self):
        kappa_primes = np.linspace(0.01, 10, 1000)
        zetas = np.array([zeta_rel(k) for k in kappa_primes])
        xis = np.array([xi_rel(k) for k in kappa_primes])

        assert np.all(np.diff(zetas) < 0)
        assert np.all(np.diff(xis) > 0)

    @pytest.mark.parametrize('kappa_prime', [0.2, 1.0, 2.5])
    def test_auxiliary_integrals(self, kappa_prime):
        def plus_one(t):
            return kappa_prime**3 * t**3 * np.exp(-((kappa_prime * t) ** 2)) / (
                np.sqrt(1 + t * t) + 1
            )

        def inverse_sqrt(t):
            return kappa_prime**3 * t**3 * np.exp(-((kappa_prime * t) ** 2)) / np.sqrt(1 + t * t)

        scale = 1 / kappa_prime
        assert integrate_semi_infinite(plus_one, scale).value == pytest.approx(
            aux_integral_plus_one(kappa_prime), abs=1e-9
        )
        assert integrate_semi_infinite(inverse_sqrt, scale).value == pytest.approx(
            aux_integral_sqrt(kappa_prime), abs=1e-9
        )

    @pytest.mark.parametrize('velocity', [0.3, 0.9, 1.0])
    def test_zeta_bounds(self, velocity):
        for kappa_prime in (0.1, 1.0, 3.0):
            params = ModelParams.from_kappa_prime(kappa_prime, velocity)
            lower, upper = zeta_bounds(kappa_prime, velocity)
            assert lower <= zeta(params) <= upper * (1 + 1e-12)

    @pytest.mark.parametrize('kappa_prime', [0.1, 0.5, 2.0])
    def test_zeta_bounds_upper_end_is_relativistic(self, kappa_prime):
        _, upper = zeta_bounds(kappa_prime, 1.0)
        assert upper == pytest.approx(zeta_rel(kappa_prime), rel=1e-14)

    def test_zeta_bounds_rejects_velocity(self):
        with pytest.raises(InvalidDomain):
            zeta_bounds(1.0, 1.5)


class TestIdentities:
    @pytest.mark.parametrize(
        'params',
        [
            {'kappa_prime': 1.0, 'velocity': 0.5},
            {'kappa_prime': 0.2, 'velocity': 0.9},
        ],
        indirect=True,
    )
    def test_identity_residual(self, params):
        assert abs(identity_residual(params)) < 1e-9

    def test_identity_residual_with_closed_forms(self):
        params = ModelParams.from_kappa_prime(3.0, 1.0)

        assert abs(identity_residual(params)) < 1e-10

    def test_identity_residual_grid(self):
        worst = max(
            abs(identity_residual(ModelParams.from_kappa_prime(k, v)))
            for k in KAPPA_GRID
            for v in VELOCITY_GRID
        )

        assert worst < 1e-9

    @pytest.mark.parametrize('params', [{'velocity': 0.0}], indirect=True)
    def test_identity_residual_rest_frame(self, params):
        with pytest.raises(DivisionByZero):
            identity_residual(params)

    def test_inequalities_on_grid(self):
        for kappa_prime in KAPPA_GRID:
            for velocity in list(VELOCITY_GRID) + [1.0]:
                params = ModelParams.from_kappa_prime(kappa_prime, velocity)
                assert rest_frame_gap(params) > 0
                assert theta_ratio(params) > 1

    def test_theta_ratio_extreme_corner(self):
        assert theta_ratio(ModelParams.from_kappa_prime(0.05, 1.0)) > 1

    def test_theta_ratio_slow_limit(self):
        slow = theta_ratio(ModelParams.from_kappa_prime(1.0, 1e-3))

        assert 1 < slow < 1 + 1e-4

    @pytest.mark.parametrize('params', [{'velocity': 0.0}], indirect=True)
    def test_theta_ratio_rest_frame(self, params):
        with pytest.raises(InvalidDomain):
            theta_ratio(params)
