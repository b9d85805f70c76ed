"""Deterministic SVG drawing of a planar fan.

The picture is a fixed 512x512 canvas.  Directions are scaled exactly onto the
boundary of the box [-1, 1]^2 and coordinates are rounded from exact
fractions, so identical fans give identical bytes.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from .polyhedral import Cone

SIZE = 512
CENTER = 256
SCALE = 200

PALETTE = (
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
    "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
)

_CORNERS = ((1, 1), (-1, 1), (-1, -1), (1, -1))


def _det(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _fmt(x: Fraction) -> str:
    n = round(x * 100)
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 100}.{n % 100:02d}"


def _to_box(v) -> tuple[Fraction, Fraction]:
    t = Fraction(1, max(abs(v[0]), abs(v[1])))
    return v[0] * t, v[1] * t


def _screen(p) -> str:
    x = CENTER + SCALE * Fraction(p[0])
    y = CENTER - SCALE * Fraction(p[1])
    return f"{_fmt(x)},{_fmt(y)}"


def _ccw(c: Cone) -> tuple:
    r1, r2 = c.rays
    return (r1, r2) if _det(r1, r2) > 0 else (r2, r1)


def _sector(c: Cone) -> list:
    r1, r2 = _ccw(c)
    corners = [k for k in _CORNERS if _det(r1, k) > 0 and _det(k, r2) > 0]
    corners.sort(key=cmp_to_key(lambda a, b: -1 if _det(a, b) > 0 else 1))
    return [(0, 0), _to_box(r1), *corners, _to_box(r2)]


def render_fan(cones: Sequence[Cone], title: str = "") -> bytes:
    if any(c.ambient_dim != 2 for c in cones):
        raise ValueError("SVG output requires dimension 2")
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    if title:
        lines.append(f'<title>{title}</title>')
    lo, hi = CENTER - SCALE, CENTER + SCALE
    lines.append(f'<rect x="{lo}" y="{lo}" width="{hi - lo}" height="{hi - lo}" '
                 'fill="none" stroke="#cccccc" stroke-width="1"/>')
    rays: set[tuple[int, int]] = set()
    for i, c in enumerate(cones):
        if len(c.rays) != 2:
            raise ValueError("SVG output expects two-dimensional maximal cones")
        pts = " ".join(_screen(p) for p in _sector(c))
        lines.append(f'<polygon points="{pts}" fill="{PALETTE[i % len(PALETTE)]}" '
                     'stroke="none"/>')
        rays.update(c.rays)
    for r in sorted(rays):
        end = _to_box(r)
        lines.append(f'<line x1="{CENTER}" y1="{CENTER}" x2="{_screen(end).split(",")[0]}" '
                     f'y2="{_screen(end).split(",")[1]}" stroke="black" stroke-width="2"/>')
        label = (end[0] * Fraction(11, 10), end[1] * Fraction(11, 10))
        x, y = _screen(label).split(",")
        lines.append(f'<text x="{x}" y="{y}" font-family="monospace" font-size="14" '
                     f'text-anchor="middle" dominant-baseline="middle">({r[0]},{r[1]})</text>')
    lines.append(f'<circle cx="{CENTER}" cy="{CENTER}" r="3" fill="black"/>')
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
