"""SVG rendering of ordinal panel drawings."""

from .svg import (
    DrawingOptions,
    DrawingSpec,
    Band,
    Curve,
    CrossingMarker,
    compute_drawing,
    serialize_drawing,
    render_svg,
)

__all__ = [
    'DrawingOptions',
    'DrawingSpec',
    'Band',
    'Curve',
    'CrossingMarker',
    'compute_drawing',
    'serialize_drawing',
    'render_svg',
]
