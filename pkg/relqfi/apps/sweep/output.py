import csv
import io
from itertools import groupby

from relqfi.apps.sweep.constants import LAYOUTS, OutputFormat
from relqfi.apps.sweep.schema import SweepResult

SVG_WIDTH = 640
SVG_HEIGHT = 480
SVG_MARGIN = 60
SVG_COLORS = ('#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e', '#8c564b')


def _number(value: float) -> str:
    return f'{value:.17g}'


def render_csv(result: SweepResult) -> str:
    stream = io.StringIO()
    for key, value in result.provenance.items():
        stream.write(f'# {key}: {value}\n')

    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(f'{name} [{result.units[name]}]' for name in result.columns)
    for row in result.rows:
        writer.writerow(_number(value) for value in row)
    return stream.getvalue()


def render_json(result: SweepResult) -> str:
    return result.model_dump_json(indent=2) + '\n'


def _series(result: SweepResult):
    names, abscissa, ordinate, labels = LAYOUTS[result.quantity]
    x_index = names.index(abscissa)
    y_index = names.index(ordinate)
    label_indices = [names.index(label) for label in labels]

    def key(row):
        return tuple(row[i] for i in label_indices)

    for label, rows in groupby(result.rows, key=key):
        rows = sorted(rows, key=lambda row: row[x_index])
        caption = ', '.join(f'{name}={value:g}' for name, value in zip(labels, label))
        yield caption, [(row[x_index], row[y_index]) for row in rows]


def _scale(values, lo_pixel, hi_pixel):
    lo, hi = min(values), max(values)
    span = hi - lo or 1.0
    return lambda value: lo_pixel + (value - lo) / span * (hi_pixel - lo_pixel)


def render_svg(result: SweepResult) -> str:
    _, abscissa, ordinate, _ = LAYOUTS[result.quantity]
    series = list(_series(result))
    xs = [x for _, points in series for x, _ in points]
    ys = [y for _, points in series for _, y in points]
    to_x = _scale(xs, SVG_MARGIN, SVG_WIDTH - SVG_MARGIN)
    to_y = _scale(ys, SVG_HEIGHT - SVG_MARGIN, SVG_MARGIN)

    bottom = SVG_HEIGHT - SVG_MARGIN
    right = SVG_WIDTH - SVG_MARGIN
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}">',
        f'<line x1="{SVG_MARGIN}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>',
        f'<line x1="{SVG_MARGIN}" y1="{SVG_MARGIN}" x2="{SVG_MARGIN}" y2="{bottom}" stroke="black"/>',
        f'<text x="{SVG_WIDTH / 2}" y="{SVG_HEIGHT - 15}" text-anchor="middle">'
        f'{abscissa} [{result.units[abscissa]}] ({min(xs):g} to {max(xs):g})</text>',
        f'<text x="15" y="{SVG_HEIGHT / 2}" text-anchor="middle" '
        f'transform="rotate(-90 15 {SVG_HEIGHT / 2})">'
        f'{ordinate} [{result.units[ordinate]}] ({min(ys):g} to {max(ys):g})</text>',
    ]
    for index, (caption, points) in enumerate(series):
        color = SVG_COLORS[index % len(SVG_COLORS)]
        coordinates = ' '.join(f'{to_x(x):.2f},{to_y(y):.2f}' for x, y in points)
        lines.append(
            f'<polyline fill="none" stroke="{color}" points="{coordinates}">'
            f'<title>{caption}</title></polyline>'
        )
        lines.append(
            f'<text x="{right - 5}" y="{SVG_MARGIN + 15 * (index + 1)}" '
            f'text-anchor="end" fill="{color}">{caption}</text>'
        )
    lines.append('</svg>')
    return '\n'.join(lines) + '\n'


RENDERERS = {
    OutputFormat.CSV: render_csv,
    OutputFormat.JSON: render_json,
    OutputFormat.SVG: render_svg,
}


def render(result: SweepResult, output_format: OutputFormat) -> str:
    return RENDERERS[output_format](result)
