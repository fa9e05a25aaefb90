"""
SVG rendering of ordinal panel drawings.

One horizontal band per category, the sigma-lowest band at the bottom of the
image. Each subject is an x-monotone curve through its category band at every
test column; inside a band, subjects are stacked bottom-up in pi_i order.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple
from xml.sax.saxutils import escape

from ..config import get_config
from ..core.model import CombinatorialLayout, OpdInstance
from ..layout.crossings import count_layout_crossings

logger = logging.getLogger(__name__)

BAND_GAP = 6.0
CAPTION_HEIGHT = 24.0
BAND_FILL = '#e6dcf5'
PALETTE = ('#1f77b4', '#ff7f0e', '#2ca02c', '#d62728', '#9467bd',
           '#8c564b', '#e377c2', '#7f7f7f', '#bcbd22', '#17becf')

Point = Tuple[float, float]


def attr(value: str) -> str:
    return escape(value, {'"': '&quot;'})


@dataclass(frozen=True)
class DrawingOptions:
    width: int = 800
    height: int = 480
    padding: int = 40
    equal_bands: bool = False
    smooth: bool = False

    @classmethod
    def from_config(cls, **overrides) -> 'DrawingOptions':
        cfg = dict(get_config()['render'])
        cfg.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**cfg)


@dataclass(frozen=True)
class Band:
    category: int
    label: str
    top: float
    bottom: float


@dataclass(frozen=True)
class Curve:
    subject: int
    label: str
    points: Tuple[Point, ...]


@dataclass(frozen=True)
class CrossingMarker:
    interval: int
    subjects: Tuple[int, int]
    point: Point


@dataclass
class DrawingSpec:
    width: int
    height: int
    columns: List[float] = field(default_factory=list)
    bands: List[Band] = field(default_factory=list)
    curves: List[Curve] = field(default_factory=list)
    markers: List[CrossingMarker] = field(default_factory=list)
    crossings: int = 0
    smooth: bool = False


def compute_drawing(inst: OpdInstance, layout: CombinatorialLayout,
                    options: Optional[DrawingOptions] = None) -> DrawingSpec:
    options = options or DrawingOptions()
    report = count_layout_crossings(inst, layout)
    spec = DrawingSpec(options.width, options.height, crossings=report.total, smooth=options.smooth)
    if inst.n == 0:
        return spec

    sigma = inst.require_sigma()
    left, right = float(options.padding), float(options.width - options.padding)
    top, bottom = options.padding + CAPTION_HEIGHT, float(options.height - options.padding)
    spec.columns = [left + i * (right - left) / inst.m for i in range(inst.m + 1)]

    occupancy = [1] * inst.k
    if not options.equal_bands:
        for row in inst.tests:
            counts = [0] * inst.k
            for c in row:
                counts[c] += 1
            occupancy = [max(a, b) for a, b in zip(occupancy, counts)]
    usable = bottom - top - BAND_GAP * (inst.k - 1)
    unit = usable / sum(occupancy)

    bands = {}
    cursor = bottom
    for c in sigma.order:
        height = occupancy[c] * unit
        bands[c] = Band(c, inst.categories.labels[c], cursor - height, cursor)
        cursor -= height + BAND_GAP
    spec.bands = [bands[c] for c in sigma.order]

    ys: List[List[float]] = []
    for i, pi in enumerate(layout.pis):
        row = inst.tests[i]
        column = [0.0] * inst.n
        members = {}
        for s in pi:
            members.setdefault(row[s], []).append(s)
        for c, group in members.items():
            band = bands[c]
            step = (band.bottom - band.top) / (len(group) + 1)
            for p, s in enumerate(group):
                column[s] = band.bottom - (p + 1) * step
        ys.append(column)

    spec.curves = [
        Curve(s, inst.subjects[s], tuple((spec.columns[i], ys[i][s]) for i in range(inst.m + 1)))
        for s in range(inst.n)
    ]

    for i in range(inst.m):
        x0, x1 = spec.columns[i], spec.columns[i + 1]
        for s in range(inst.n):
            for t in range(s + 1, inst.n):
                d0 = ys[i][s] - ys[i][t]
                d1 = ys[i + 1][s] - ys[i + 1][t]
                if d0 * d1 < 0:
                    lam = d0 / (d0 - d1)
                    x = x0 + _crossing_fraction(lam, options.smooth) * (x1 - x0)
                    y = ys[i][s] + lam * (ys[i + 1][s] - ys[i][s])
                    spec.markers.append(CrossingMarker(i, (s, t), (x, y)))
    return spec


def _crossing_fraction(lam: float, smooth: bool) -> float:
    """Horizontal position, as a fraction of the interval, where two curves meet.

    Straight segments meet at ``lam``. The cubic segments of ``_path_data``
    share their x control points, so y(u) = y0 + (y1 - y0) * (3u^2 - 2u^3)
    for every curve: they meet at the same y, at the u solving
    3u^2 - 2u^3 = lam, and x(u) / width = 1.5u(1 - u) + u^3.
    """
    if not smooth:
        return lam
    u = 0.5 - math.sin(math.asin(1.0 - 2.0 * lam) / 3.0)
    return 1.5 * u * (1.0 - u) + u ** 3


class SvgBuilder:
    def __init__(self):
        self.svg = ""

    def header(self, width, height):
        self.svg += (
            '<?xml version="1.0" standalone="no"?>\n'
            '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
            '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n'
            f'<svg version="1.1" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg">\n'
        )

    def group_start(self, group_id):
        self.svg += f'<g id="{group_id}">\n'

    def group_end(self):
        self.svg += '</g>\n'

    def filled_rectangle(self, x1, y1, x2, y2, fill, extra=""):
        self.svg += (f'<rect x="{x1:.2f}" y="{y1:.2f}" width="{x2 - x1:.2f}" '
                     f'height="{y2 - y1:.2f}" fill="{fill}" {extra}/>\n')

    def path(self, d, stroke, extra=""):
        self.svg += f'<path d="{d}" fill="none" stroke="{stroke}" stroke-width="2" {extra}/>\n'

    def circle(self, x, y, r, fill, extra=""):
        self.svg += f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r}" fill="{fill}" {extra}/>\n'

    def text(self, text_id, x, y, string, extra=""):
        id_attr = f'id="{text_id}" ' if text_id else ''
        self.svg += f'<text {id_attr}x="{x:.2f}" y="{y:.2f}" {extra}>{escape(string)}</text>\n'

    def get_svg(self):
        return f"{self.svg}</svg>\n"


def _path_data(points: Tuple[Point, ...], smooth: bool) -> str:
    x, y = points[0]
    parts = [f"M {x:.2f} {y:.2f}"]
    for (xa, ya), (xb, yb) in zip(points, points[1:]):
        if smooth:
            mid = (xb - xa) / 2
            parts.append(f"C {xa + mid:.2f} {ya:.2f} {xb - mid:.2f} {yb:.2f} {xb:.2f} {yb:.2f}")
        else:
            parts.append(f"L {xb:.2f} {yb:.2f}")
    return ' '.join(parts)


def serialize_drawing(spec: DrawingSpec) -> str:
    svg = SvgBuilder()
    svg.header(spec.width, spec.height)
    if not spec.curves:
        return svg.get_svg()

    svg.group_start('bands')
    for band in spec.bands:
        svg.filled_rectangle(spec.columns[0] - 12, band.top, spec.columns[-1] + 12, band.bottom,
                             BAND_FILL, f'data-category="{attr(band.label)}"')
        svg.text(None, 4, (band.top + band.bottom) / 2, band.label, 'font-size="11"')
    svg.group_end()

    svg.group_start('subjects')
    for curve in spec.curves:
        svg.path(_path_data(curve.points, spec.smooth), PALETTE[curve.subject % len(PALETTE)],
                 f'data-subject="{attr(curve.label)}"')
    svg.group_end()

    svg.group_start('crossings')
    for marker in spec.markers:
        svg.circle(marker.point[0], marker.point[1], 3, '#000000',
                   f'data-interval="{marker.interval}"')
    svg.group_end()

    caption_y = min(band.top for band in spec.bands) - 8
    svg.text('caption', spec.columns[0], caption_y, f"crossings: {spec.crossings}", 'font-size="14"')
    return svg.get_svg()


def render_svg(inst: OpdInstance, layout: CombinatorialLayout,
               options: Optional[DrawingOptions] = None) -> str:
    spec = compute_drawing(inst, layout, options)
    logger.debug(f"rendered {len(spec.curves)} subject curves, {spec.crossings} crossings")
    return serialize_drawing(spec)
