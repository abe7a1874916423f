"""
Deterministic SVG figures of points, lines and conics.

Lines are clipped against the viewport in exact arithmetic and only then
converted to floats. Conics are drawn by sampling: for each of `samples`
x positions across the viewport the conic's quadratic in y is solved in
floating point, and each root sequence becomes a polyline branch. Pixels
are approximate; nothing drawn here claims exactness.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from math import isfinite, sqrt

from origami_engine.config.settings import get_settings
from origami_engine.conics import Conic
from origami_engine.errors import EmptyViewport
from origami_engine.exactnum import ExactReal, add, compare, const, div, mul, neg, sign
from origami_engine.geom import Line, LineAtInfinity, Point, same_point
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)

Viewport = tuple[float, float, float, float]

PREAMBLE = """\
<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" width="%(size)d" height="%(size)d" viewBox="0 0 %(size)d %(size)d">
<rect x="0" y="0" width="%(size)d" height="%(size)d" style="fill:#ffffff"/>
"""

POSTAMBLE = "</svg>\n"

CONIC_STYLE = "fill:none;stroke:#1f4e9c;stroke-width:1.5"
LINE_STYLE = "fill:none;stroke:#555555;stroke-width:1"
POINT_STYLE = "fill:#c0392b"


class SVG:
    def __init__(self, viewport: Viewport, size: int) -> None:
        xmin, ymin, xmax, ymax = viewport
        if not (xmax > xmin and ymax > ymin):
            raise EmptyViewport(f"viewport {viewport} has no area")
        self.viewport = viewport
        self.size = size
        self.conics: list[str] = []
        self.lines: list[str] = []
        self.points: list[str] = []
        self.labels: list[str] = []

    def to_pixels(self, x: float, y: float) -> tuple[float, float]:
        xmin, ymin, xmax, ymax = self.viewport
        return (
            (x - xmin) / (xmax - xmin) * self.size,
            (ymax - y) / (ymax - ymin) * self.size,
        )

    def inside(self, x: float, y: float) -> bool:
        xmin, ymin, xmax, ymax = self.viewport
        return xmin <= x <= xmax and ymin <= y <= ymax

    def polyline(self, points: list[tuple[float, float]], style: str) -> str:
        coords = " ".join("%.3f,%.3f" % self.to_pixels(x, y) for x, y in points)
        return '<polyline points="%s" style="%s"/>' % (coords, style)

    def add_point(self, name: str, x: float, y: float) -> None:
        px, py = self.to_pixels(x, y)
        self.points.append('<circle cx="%.3f" cy="%.3f" r="3" style="%s"/>' % (px, py, POINT_STYLE))
        if name:
            self.labels.append(
                '<text x="%.3f" y="%.3f" font-size="12" font-family="monospace">%s</text>'
                % (px + 5, py - 5, name)
            )

    def document(self) -> str:
        body = self.conics + self.lines + self.points + self.labels
        return PREAMBLE % {"size": self.size} + "".join(item + "\n" for item in body) + POSTAMBLE


# -----------------------------
# Exact clipping
# -----------------------------
def _box(viewport: Viewport) -> tuple[ExactReal, ExactReal, ExactReal, ExactReal]:
    return tuple(const(Fraction(v)) for v in viewport)  # type: ignore[return-value]


def clip_line(l: Line, viewport: Viewport) -> tuple[Point, Point] | None:
    """The segment of l inside the viewport, computed exactly."""
    xmin, ymin, xmax, ymax = _box(viewport)
    hits: list[Point] = []
    if sign(l.b) != 0:
        for x in (xmin, xmax):
            y = neg(div(add(mul(l.a, x), l.c), l.b))
            if compare(y, ymin) >= 0 and compare(y, ymax) <= 0:
                hits.append(Point(x, y))
    if sign(l.a) != 0:
        for y in (ymin, ymax):
            x = neg(div(add(mul(l.b, y), l.c), l.a))
            if compare(x, xmin) >= 0 and compare(x, xmax) <= 0:
                hits.append(Point(x, y))
    unique: list[Point] = []
    for p in hits:
        if not any(same_point(p, q) for q in unique):
            unique.append(p)
    if len(unique) < 2:  # noqa: PLR2004
        return None
    # two distinct boundary points of a convex box span the chord
    return unique[0], unique[1]


# -----------------------------
# Conic sampling
# -----------------------------
def _solve_y(coeffs: tuple[float, ...], x: float) -> list[float]:
    a, b, c, d, e, f = coeffs
    qa = c
    qb = b * x + e
    qc = a * x * x + d * x + f
    if abs(qa) < 1e-15:
        if abs(qb) < 1e-15:
            return []
        return [-qc / qb]
    disc = qb * qb - 4 * qa * qc
    if disc < 0:
        return []
    root = sqrt(disc)
    ys = sorted(((-qb - root) / (2 * qa), (-qb + root) / (2 * qa)))
    return ys


def sample_conic(conic: Conic, viewport: Viewport, samples: int) -> list[list[tuple[float, float]]]:
    coeffs = tuple(float(v) for v in conic.coefficients())
    xmin, ymin, xmax, ymax = viewport
    branches: list[list[tuple[float, float]]] = [[], []]
    finished: list[list[tuple[float, float]]] = []
    for i in range(samples + 1):
        x = xmin + (xmax - xmin) * i / samples
        ys = _solve_y(coeffs, x)
        for slot in range(2):
            y = ys[slot] if slot < len(ys) else None
            if y is not None and isfinite(y) and ymin <= y <= ymax:
                branches[slot].append((x, y))
            elif branches[slot]:
                finished.append(branches[slot])
                branches[slot] = []
    finished.extend(b for b in branches if b)
    return [b for b in finished if len(b) > 1]


def render(
    objects: Mapping[str, object],
    viewport: Viewport | None = None,
    size: int | None = None,
    samples: int | None = None,
) -> str:
    """SVG document for named points, lines and conics; other values are skipped."""
    settings = get_settings()
    viewport = viewport or settings.viewport
    svg = SVG(viewport, size or settings.svg_size)
    samples = samples or settings.svg_samples
    for name, obj in objects.items():
        if isinstance(obj, Conic):
            for branch in sample_conic(obj, viewport, samples):
                svg.conics.append(svg.polyline(branch, CONIC_STYLE))
        elif isinstance(obj, Line):
            segment = clip_line(obj, viewport)
            if segment is not None:
                ends = [(float(p.x), float(p.y)) for p in segment]
                svg.lines.append(svg.polyline(ends, LINE_STYLE))
        elif isinstance(obj, Point):
            x, y = float(obj.x), float(obj.y)
            if svg.inside(x, y):
                svg.add_point(name, x, y)
        elif isinstance(obj, LineAtInfinity):
            logger.debug("Skipping %s: not drawable", name)
    return svg.document()
