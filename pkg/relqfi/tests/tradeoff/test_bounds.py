import pytest

from relqfi.apps.fisher.analytic import fim_lambda_inverse_analytic, sld_fim_inverse
from relqfi.apps.tradeoff.bounds import bound_intersections, bound_slacks, region_check
from relqfi.apps.tradeoff.constants import RegionClass
from relqfi.apps.tradeoff.indicator import lambda_star, omega, omega_from_fims
from relqfi.apps.tradeoff.schema import MsePoint
from relqfi.tests.factories.tradeoff import MsePointFactory

MOVING = [
    {'kappa_prime': 1.0, 'velocity': 0.5},
    {'kappa_prime': 0.3, 'velocity': 0.9},
    {'kappa_prime': 1.5, 'velocity': 1.0},
]


@pytest.fixture
def tradeoff_lambda(params, scalars):
    return lambda_star(params, scalars=scalars) / 2


class TestBoundIntersections:
    @pytest.mark.parametrize('params', MOVING, indirect=True)
    def test_points_sit_on_both_boundaries(self, params, scalars, tradeoff_lambda):
        js_inv = sld_fim_inverse(params, scalars=scalars)

        points = bound_intersections(tradeoff_lambda, params, scalars=scalars)

        assert points.point_a.v11 == js_inv.a11
        assert points.point_a_prime.v22 == js_inv.a22
        for point in (points.point_a, points.point_a_prime):
            slacks = bound_slacks(point, tradeoff_lambda, params, scalars=scalars)
            assert abs(slacks.lambda_ld) < 1e-10 * js_inv.a11**2

    @pytest.mark.parametrize('params', MOVING, indirect=True)
    def test_height_above_corner_is_omega(self, params, scalars, tradeoff_lambda):
        js_inv = sld_fim_inverse(params, scalars=scalars)
        jl_inv = fim_lambda_inverse_analytic(tradeoff_lambda, params, scalars=scalars)

        points = bound_intersections(tradeoff_lambda, params, scalars=scalars)

        value, value_prime = omega_from_fims(js_inv, jl_inv)
        assert points.point_a.v22 - js_inv.a22 == pytest.approx(value, rel=1e-9)
        assert points.point_a_prime.v11 - js_inv.a11 == pytest.approx(value_prime, rel=1e-9)
        assert value == pytest.approx(omega(tradeoff_lambda, params, scalars=scalars), rel=1e-9)

    @pytest.mark.parametrize('params', MOVING, indirect=True)
    def test_no_intersection_above_threshold(self, params, scalars):
        threshold = lambda_star(params, scalars=scalars)

        assert bound_intersections((1 + threshold) / 2, params, scalars=scalars) is None


class TestRegionCheck:
    def test_far_point_is_allowed(self, params, scalars):
        scale = sld_fim_inverse(params, scalars=scalars).a11
        point = MsePoint(v11=10 * scale, v22=10 * scale)

        assert region_check(point, 0.5, params, scalars=scalars) == RegionClass.ALLOWED_BY_BOTH

    def test_below_sld(self, params, scalars):
        scale = sld_fim_inverse(params, scalars=scalars).a11
        point = MsePoint(v11=0.5 * scale, v22=10 * scale)

        assert region_check(point, 0.5, params, scalars=scalars) == RegionClass.EXCLUDED_BY_SLD

    @pytest.mark.parametrize('params', MOVING, indirect=True)
    def test_sld_corner_excluded_by_lambda(self, params, scalars, tradeoff_lambda):
        js_inv = sld_fim_inverse(params, scalars=scalars)
        corner = MsePoint(v11=js_inv.a11, v22=js_inv.a22)

        region = region_check(corner, tradeoff_lambda, params, scalars=scalars)

        assert region == RegionClass.EXCLUDED_BY_LAMBDA_ONLY
        assert not RegionClass.is_allowed(region)

    @pytest.mark.parametrize('params', MOVING, indirect=True)
    def test_intersection_is_allowed(self, params, scalars, tradeoff_lambda):
        points = bound_intersections(tradeoff_lambda, params, scalars=scalars)

        region = region_check(points.point_a, tradeoff_lambda, params, scalars=scalars)

        assert RegionClass.is_allowed(region)

    def test_sld_corner_allowed_above_threshold(self, params, scalars):
        js_inv = sld_fim_inverse(params, scalars=scalars)
        corner = MsePoint(v11=js_inv.a11, v22=js_inv.a22)
        threshold = lambda_star(params, scalars=scalars)

        region = region_check(corner, (1 + threshold) / 2, params, scalars=scalars)

        assert region == RegionClass.ALLOWED_BY_BOTH

    def test_random_points_are_classified(self, params, scalars):
        for point in MsePointFactory.build_batch(20):
            region = region_check(point, 0.2, params, scalars=scalars)
            slacks = bound_slacks(point, 0.2, params, scalars=scalars)

            if min(slacks.sld_11, slacks.sld_22) >= 0 and slacks.lambda_ld >= 0:
                assert region == RegionClass.ALLOWED_BY_BOTH
            assert region in set(RegionClass)


class TestMsePoint:
    def test_payload(self, generate_payload):
        payload = generate_payload(MsePointFactory)

        assert MsePoint(**payload) == MsePoint(v11=payload['v11'], v22=payload['v22'])

    def test_positive(self):
        with pytest.raises(ValueError):
            MsePoint(v11=0.0, v22=1.0)
