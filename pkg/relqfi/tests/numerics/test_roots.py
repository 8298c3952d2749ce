import math

import pytest

from relqfi.core.exceptions import NoSignChange
from relqfi.core.numerics.roots import find_root_bracketed, maximize_unimodal


class TestFindRootBracketed:
    def test_square_root_of_two(self):
        root = find_root_bracketed(lambda x: x * x - 2, 1.0, 2.0, tol=1e-12)

        assert root == pytest.approx(math.sqrt(2), abs=1e-12)

    def test_root_at_center(self):
        assert abs(find_root_bracketed(lambda x: x, -1.0, 1.0, tol=1e-12)) < 1e-12

    @pytest.mark.parametrize('interval', [(1.0, 3.0), (-2.0, 1.0)])
    def test_root_at_endpoint_is_not_a_bracket(self, interval):
        with pytest.raises(NoSignChange):
            find_root_bracketed(lambda x: x - 1, *interval)

    def test_nan_is_not_a_bracket(self):
        with pytest.raises(NoSignChange):
            find_root_bracketed(lambda x: math.nan if x > 0 else -1.0, -1.0, 1.0)

    @pytest.mark.parametrize('interval', [(2.0, 3.0), (-1.0, 1.0)])
    def test_no_sign_change(self, interval):
        with pytest.raises(NoSignChange):
            find_root_bracketed(lambda x: x * x + 1, *interval)

    def test_brackets_sign_change(self):
        def f(x):
            return math.cos(x) - x

        root = find_root_bracketed(f, 0.0, 1.0, tol=1e-13)

        assert f(root - 1e-12) > 0 > f(root + 1e-12)

    def test_flat_function_converges(self):
        root = find_root_bracketed(lambda x: (x - 0.3) ** 3, 0.0, 1.0, tol=1e-12)

        assert root == pytest.approx(0.3, abs=1e-4)


class TestMaximizeUnimodal:
    def test_parabola(self):
        argmax, maximum = maximize_unimodal(lambda x: -((x - 0.3) ** 2), 0.0, 1.0, tol=1e-10)

        assert argmax == pytest.approx(0.3, abs=1e-10)
        assert maximum == pytest.approx(0.0, abs=1e-10)

    def test_peak_at_boundary(self):
        argmax, _ = maximize_unimodal(lambda x: x, 0.0, 1.0, tol=1e-10)

        assert argmax == pytest.approx(1.0, abs=1e-9)
