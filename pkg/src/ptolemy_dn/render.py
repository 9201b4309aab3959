"""Deterministic SVG drawings of diagrams, D-highlights and cells."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .cells import C, build_cells
from .polygon import RED, Diagram, Diameter

PALETTE = ("#f4d35e", "#9ad1d4", "#f2a7a7", "#b8e0a0", "#c9b6e4", "#f7c59f", "#a7c4f2", "#e0e0a0")

DEFAULT_STYLE = {
    "pair": "#333333",
    "red": "#d62828",
    "green": "#2a9d3a",
    "outline": "#000000",
    "thin": 1.5,
    "thick": 4.0,
}


@dataclass(frozen=True)
class RenderSpec:
    diagram: Diagram
    highlight: Optional[Diagram] = None  # D, drawn thick
    shade_cells: bool = False  # shade the D-cells of highlight
    size: int = 400
    style: dict = field(default_factory=dict, hash=False)


def _f(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


class _Canvas:
    def __init__(self, n: int, size: int) -> None:
        self.n = n
        self.size = size
        self.cx = self.cy = size / 2
        self.r = size * 0.38

    def point(self, v) -> tuple[float, float]:
        if v == C:
            return self.cx, self.cy
        theta = math.pi * v / self.n
        return self.cx + self.r * math.cos(theta), self.cy - self.r * math.sin(theta)

    def label_point(self, v: int) -> tuple[float, float]:
        theta = math.pi * v / self.n
        rr = self.r + self.size * 0.06
        return self.cx + rr * math.cos(theta), self.cy - rr * math.sin(theta)


def _zigzag(p: tuple[float, float], q: tuple[float, float], amplitude: float, teeth: int = 16) -> list[tuple[float, float]]:
    (x0, y0), (x1, y1) = p, q
    dx, dy = x1 - x0, y1 - y0
    length = math.hypot(dx, dy)
    nx, ny = -dy / length, dx / length
    pts = [p]
    for t in range(1, 2 * teeth):
        s = t / (2 * teeth)
        off = amplitude if t % 2 else -amplitude
        pts.append((x0 + s * dx + off * nx, y0 + s * dy + off * ny))
    pts.append(q)
    return pts


def _line(p, q, color: str, width: float) -> str:
    return (
        f'<line x1="{_f(p[0])}" y1="{_f(p[1])}" x2="{_f(q[0])}" y2="{_f(q[1])}" '
        f'stroke="{color}" stroke-width="{_f(width)}" stroke-linecap="round"/>'
    )


def _polyline(pts, color: str, width: float) -> str:
    coords = " ".join(f"{_f(x)},{_f(y)}" for x, y in pts)
    return f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="{_f(width)}" stroke-linejoin="round"/>'


def render_svg(spec: RenderSpec) -> str:
    x = spec.diagram
    n = x.n
    style = {**DEFAULT_STYLE, **spec.style}
    cv = _Canvas(n, spec.size)
    d = spec.highlight or Diagram(n, frozenset())
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.size}" height="{spec.size}" '
        f'viewBox="0 0 {spec.size} {spec.size}">',
        f'<rect width="{spec.size}" height="{spec.size}" fill="#ffffff"/>',
    ]
    if spec.shade_cells:
        for idx, cp in enumerate(build_cells(d)):
            color = PALETTE[idx % len(PALETTE)]
            for member in cp.members:
                coords = " ".join(f"{_f(px)},{_f(py)}" for px, py in map(cv.point, member))
                out.append(f'<polygon points="{coords}" fill="{color}" fill-opacity="0.6" stroke="none"/>')
    ring = " ".join(f"{_f(px)},{_f(py)}" for px, py in (cv.point(v) for v in range(2 * n)))
    out.append(f'<polygon points="{ring}" fill="none" stroke="{style["outline"]}" stroke-width="{_f(style["thin"])}"/>')
    amplitude = spec.size * 0.008
    for e in (x | d).sorted():
        width = style["thick"] if e in d else style["thin"]
        if isinstance(e, Diameter):
            (a, b), = e.arcs
            p, q = cv.point(a), cv.point(b)
            if e.color == RED:
                out.append(_line(p, q, style["red"], width))
            else:
                out.append(_polyline(_zigzag(p, q, amplitude), style["green"], width))
        else:
            for a, b in e.arcs:
                out.append(_line(cv.point(a), cv.point(b), style["pair"], width))
    for v in range(2 * n):
        px, py = cv.point(v)
        out.append(f'<circle cx="{_f(px)}" cy="{_f(py)}" r="{_f(spec.size * 0.008)}" fill="#000000"/>')
        lx, ly = cv.label_point(v)
        out.append(
            f'<text x="{_f(lx)}" y="{_f(ly)}" font-family="sans-serif" font-size="{_f(spec.size * 0.04)}" '
            f'text-anchor="middle" dominant-baseline="middle">{v}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
