import csv
import io

import pytest

from relqfi.apps.sweep.constants import OutputFormat, SweepQuantity
from relqfi.apps.sweep.output import render, render_csv, render_json, render_svg
from relqfi.apps.sweep.schema import SweepResult


@pytest.fixture
def result():
    return SweepResult(
        quantity=SweepQuantity.PEAK_RADIUS,
        provenance={'library': 'relqfi 0.1.0', 'mass': '1'},
        units={'kappa_prime': '1', 'velocity': 'c', 'peak_radius': 'length'},
        columns={
            'kappa_prime': [0.1, 0.1, 1.0, 1.0],
            'velocity': [0.5, 1.0, 0.5, 1.0],
            'peak_radius': [0.123456789012345678, 0.2, 1.5, 1.7],
        },
    )


class TestRenderCsv:
    def test_layout(self, result):
        lines = render_csv(result).splitlines()

        assert lines[:2] == ['# library: relqfi 0.1.0', '# mass: 1']
        assert lines[2] == 'kappa_prime [1],velocity [c],peak_radius [length]'
        assert len(lines) == 7

    def test_full_precision(self, result):
        body = [line for line in render_csv(result).splitlines() if not line.startswith('#')]
        rows = list(csv.reader(io.StringIO('\n'.join(body[1:]))))

        assert [float(row[2]) for row in rows] == result.columns['peak_radius']


class TestRenderJson:
    def test_payload(self, result):
        text = render_json(result)

        assert SweepResult.model_validate_json(text) == result
        assert text.endswith('\n')


class TestRenderSvg:
    def test_one_polyline_per_series(self, result):
        text = render_svg(result)

        assert text.startswith('<svg')
        assert text.count('<polyline') == 2
        assert 'kappa_prime=0.1' in text
        assert 'peak_radius [length]' in text
        assert 'velocity [c]' in text

    def test_flat_series(self, result):
        flat = result.model_copy(
            update={'columns': result.columns | {'peak_radius': [1.0, 1.0, 1.0, 1.0]}}
        )

        assert 'nan' not in render_svg(flat)


@pytest.mark.parametrize('output_format', list(OutputFormat))
def test_render_dispatch(result, output_format):
    assert render(result, output_format)
