"""SVG pictures of planar prevarieties.

Each hypersurface is drawn from the cells of its own one-row system, clipped
to the viewport.  The prevariety goes on top as a double line (a wide dark
stroke under a thin white one); 0-dimensional cells become dots.  A short
dashed tick marks every place where a piece was cut by the viewport.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import TropicalSystem, to_point, to_scalar
from .linear import LE, LinearConstraint, Polyhedron
from .prevariety import cells

__all__ = ["RenderSpec", "render_svg"]

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
           "#e377c2", "#17becf")


@dataclass(frozen=True)
class RenderSpec:
    viewport: tuple[Fraction, Fraction, Fraction, Fraction] = (
        Fraction(-4), Fraction(4), Fraction(-4), Fraction(4))
    width: int = 400
    margin: int = 20
    colors: Sequence[str] = PALETTE
    prevariety_color: str = "#000000"
    labels: Sequence[tuple[tuple, str]] = field(default_factory=tuple)

    def __post_init__(self):
        vp = tuple(to_scalar(v) for v in self.viewport)
        if len(vp) != 4:
            raise ValueError("viewport is (xmin, xmax, ymin, ymax)")
        if not (vp[0] < vp[1] and vp[2] < vp[3]):
            raise ValueError("viewport must be nonempty")
        object.__setattr__(self, "viewport", vp)

    @property
    def height(self) -> int:
        xmin, xmax, ymin, ymax = self.viewport
        return int(round(self.width * (ymax - ymin) / (xmax - xmin)))


def _box(spec: RenderSpec) -> list[LinearConstraint]:
    xmin, xmax, ymin, ymax = spec.viewport
    return [
        LinearConstraint((1, 0), xmax, LE), LinearConstraint((-1, 0), -xmin, LE),
        LinearConstraint((0, 1), ymax, LE), LinearConstraint((0, -1), -ymin, LE),
    ]


class _Canvas:
    def __init__(self, spec: RenderSpec):
        self.spec = spec
        self.items: list[str] = []

    def px(self, p) -> tuple[float, float]:
        xmin, xmax, ymin, ymax = self.spec.viewport
        sx = self.spec.width / float(xmax - xmin)
        m = self.spec.margin
        return (m + float(p[0] - xmin) * sx, m + float(ymax - p[1]) * sx)

    def line(self, a, b, color, width, dash=None):
        (x1, y1), (x2, y2) = self.px(a), self.px(b)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.items.append(
            f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
            f'stroke="{color}" stroke-width="{width}" stroke-linecap="round"{extra}/>'
        )

    def tick(self, inner, outer, color):
        """Dashed continuation past ``outer`` in the direction inner -> outer."""
        (x1, y1), (x2, y2) = self.px(inner), self.px(outer)
        dx, dy = x2 - x1, y2 - y1
        norm = math.hypot(dx, dy) or 1.0
        ex, ey = x2 + 10 * dx / norm, y2 + 10 * dy / norm
        self.items.append(
            f'<line x1="{x2:.3f}" y1="{y2:.3f}" x2="{ex:.3f}" y2="{ey:.3f}" '
            f'stroke="{color}" stroke-width="1" stroke-dasharray="2,2"/>'
        )

    def dot(self, p, color, r=4):
        x, y = self.px(p)
        self.items.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{r}" fill="{color}"/>')

    def polygon(self, pts, color):
        cx = sum(float(p[0]) for p in pts) / len(pts)
        cy = sum(float(p[1]) for p in pts) / len(pts)
        pts = sorted(pts, key=lambda p: math.atan2(float(p[1]) - cy, float(p[0]) - cx))
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(self.px, pts))
        self.items.append(f'<polygon points="{coords}" fill="{color}" fill-opacity="0.15"/>')

    def text(self, p, label):
        x, y = self.px(p)
        safe = label.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        self.items.append(f'<text x="{x + 5:.3f}" y="{y - 5:.3f}" font-size="11">{safe}</text>')


def _pieces(polyhedron: Polyhedron, box):
    """``(clipped vertices, cut vertices)`` of a cell inside the viewport."""
    clipped = polyhedron.refine(box) if polyhedron.is_feasible else polyhedron
    if not clipped.is_feasible:
        return [], []
    verts = sorted(clipped.vertices())
    own = set(polyhedron.vertices())
    return verts, [v for v in verts if v not in own]


def _draw_cell(canvas: _Canvas, poly: Polyhedron, box, dim: int, color, width, dash,
               double: bool = False):
    verts, cut = _pieces(poly, box)
    if not verts:
        return
    if dim == 0 or len(verts) == 1:
        canvas.dot(verts[0], color)
        return
    if dim == 2:
        canvas.polygon(verts, color)
        return
    a, b = verts[0], verts[-1]
    canvas.line(a, b, color, width, dash)
    if double:
        canvas.line(a, b, "#ffffff", max(width - 3, 1))
    for v in cut:
        canvas.tick(b if v == a else a, v, color)


def render_svg(system: TropicalSystem, spec: RenderSpec | None = None) -> str:
    """Deterministic SVG of a 2-variable system and its prevariety."""
    if system.n != 2:
        raise ValueError(f"rendering needs n = 2, got n = {system.n}")
    spec = spec or RenderSpec()
    canvas = _Canvas(spec)
    box = _box(spec)
    for i, p in enumerate(system.polys):
        color = spec.colors[i % len(spec.colors)]
        dash = "6,3" if i == 0 else None
        one = TropicalSystem((p,), 2)
        for c in cells(one):
            if c.dim < 2:
                _draw_cell(canvas, c.polyhedron, box, c.dim, color, 1.5, dash)
    for c in cells(system):
        _draw_cell(canvas, c.polyhedron, box, c.dim, spec.prevariety_color, 5, None,
                   double=True)
    for point, label in spec.labels:
        point = to_point(point)
        canvas.dot(point, spec.prevariety_color, 2)
        canvas.text(point, label)
    w = spec.width + 2 * spec.margin
    h = spec.height + 2 * spec.margin
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}">')
    frame = (f'<rect x="{spec.margin}" y="{spec.margin}" width="{spec.width}" '
             f'height="{spec.height}" fill="none" stroke="#cccccc"/>')
    return "\n".join([head, frame, *canvas.items, "</svg>"]) + "\n"
