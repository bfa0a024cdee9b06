"""Static SVG pictures: a polygon on the lattice grid, a weighted fan,
and the side-by-side render used by the CLI."""
from __future__ import annotations

import math
from typing import Optional

from .lattice import LatticePolygon, WeightedFan

_CELL = 28
_PAD = 24
_STYLE = (
    "fill:#4a7fb5;fill-opacity:0.35;stroke:#1f4e79;stroke-width:2"
)


def _grid_and_dots(
    xl: int, yl: int, xh: int, yh: int, tx, ty
) -> list[str]:
    out = []
    for x in range(xl, xh + 1):
        out.append(
            f'<line x1="{tx(x)}" y1="{ty(yl)}" x2="{tx(x)}" y2="{ty(yh)}" '
            'stroke="#ddd" stroke-width="1"/>'
        )
    for y in range(yl, yh + 1):
        out.append(
            f'<line x1="{tx(xl)}" y1="{ty(y)}" x2="{tx(xh)}" y2="{ty(y)}" '
            'stroke="#ddd" stroke-width="1"/>'
        )
    for x in range(xl, xh + 1):
        for y in range(yl, yh + 1):
            out.append(f'<circle cx="{tx(x)}" cy="{ty(y)}" r="2" fill="#999"/>')
    return out


def svg_polygon(P: LatticePolygon, title: Optional[str] = None) -> str:
    """One polygon on its lattice grid, with a one-cell margin."""
    (xl, yl), (xh, yh) = P.bounding_box()
    xl -= 1
    yl -= 1
    xh += 1
    yh += 1
    w = (xh - xl) * _CELL + 2 * _PAD
    h = (yh - yl) * _CELL + 2 * _PAD

    def tx(x):
        return _PAD + (x - xl) * _CELL

    def ty(y):
        return h - _PAD - (y - yl) * _CELL

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}">',
        f'<rect width="{w}" height="{h}" fill="white"/>',
    ]
    parts += _grid_and_dots(xl, yl, xh, yh, tx, ty)
    pts = " ".join(f"{tx(x)},{ty(y)}" for x, y in P.vertices)
    if len(P.vertices) >= 3:
        parts.append(f'<polygon points="{pts}" style="{_STYLE}"/>')
    else:
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="#1f4e79" stroke-width="2"/>'
        )
    for x, y in P.vertices:
        parts.append(f'<circle cx="{tx(x)}" cy="{ty(y)}" r="4" fill="#1f4e79"/>')
    if title:
        parts.append(
            f'<text x="{_PAD}" y="16" font-family="monospace" font-size="13">{title}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def svg_fan(fan: WeightedFan, title: Optional[str] = None) -> str:
    """Weighted rays from the origin, labelled by their weights."""
    size = 240
    c = size / 2
    ray_len = size / 2 - 36
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="0" y1="{c}" x2="{size}" y2="{c}" stroke="#eee"/>',
        f'<line x1="{c}" y1="0" x2="{c}" y2="{size}" stroke="#eee"/>',
    ]
    for (u, v), w in fan.rays:
        n = math.hypot(u, v)
        ex = c + ray_len * u / n
        ey = c - ray_len * v / n
        parts.append(
            f'<line x1="{c}" y1="{c}" x2="{ex:.1f}" y2="{ey:.1f}" '
            'stroke="#b33" stroke-width="2"/>'
        )
        lx = c + (ray_len + 14) * u / n
        ly = c - (ray_len + 14) * v / n
        parts.append(
            f'<text x="{lx:.1f}" y="{ly + 4:.1f}" text-anchor="middle" '
            f'font-family="monospace" font-size="12">{w}</text>'
        )
    parts.append(f'<circle cx="{c}" cy="{c}" r="3" fill="#333"/>')
    if title:
        parts.append(
            f'<text x="8" y="16" font-family="monospace" font-size="13">{title}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def _embed(svg: str, x: int, y: int) -> str:
    body = svg.split("\n", 1)[1].rsplit("</svg>", 1)[0]
    return f'<g transform="translate({x},{y})">{body}</g>'


def _dims(svg: str) -> tuple[int, int]:
    head = svg.split("\n", 1)[0]
    w = int(head.split('width="')[1].split('"')[0])
    h = int(head.split('height="')[1].split('"')[0])
    return w, h


def svg_report(
    P: LatticePolygon, fan: WeightedFan, dual: LatticePolygon
) -> str:
    """Polygon, dual fan and dual polygon side by side."""
    panels = [
        svg_polygon(P, "Newton polygon"),
        svg_fan(fan, "dual tropical fan"),
        svg_polygon(dual, "dual Newton polygon"),
    ]
    gap = 12
    x = 0
    parts = []
    height = 0
    for p in panels:
        w, h = _dims(p)
        parts.append(_embed(p, x, 0))
        x += w + gap
        height = max(height, h)
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{x - gap}" height="{height}">'
    )
    return "\n".join([head, f'<rect width="{x - gap}" height="{height}" fill="white"/>'] + parts + ["</svg>"])
