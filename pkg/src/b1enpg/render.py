"""Plain SVG drawing of a representation."""

from __future__ import annotations

import colorsys
from itertools import combinations
from xml.sax.saxutils import escape

from .grid import Representation, split_points

CELL = 24
MARGIN = 2


def _hue(i: int, n: int) -> str:
    r, g, b = colorsys.hsv_to_rgb((i / max(n, 1)) % 1.0, 0.75, 0.8)
    return f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"


def render_svg(rep: Representation, show_splits: bool = True) -> str:
    """Each path is drawn slightly offset from the grid line so overlapping
    paths stay visible; bends are dots, pairwise split points are crosses."""
    x0, y0, x1, y1 = rep.bounds()
    width = (x1 - x0 + 2 * MARGIN) * CELL
    height = (y1 - y0 + 2 * MARGIN) * CELL

    def sx(x: float) -> float:
        return (x - x0 + MARGIN) * CELL

    def sy(y: float) -> float:
        # SVG grows downwards
        return (y1 - y + MARGIN) * CELL

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
           '<rect width="100%" height="100%" fill="white"/>', '<g stroke="#e5e5e5" stroke-width="1">']
    for x in range(x0 - MARGIN, x1 + MARGIN + 1):
        out.append(f'<line x1="{sx(x)}" y1="0" x2="{sx(x)}" y2="{height}"/>')
    for y in range(y0 - MARGIN, y1 + MARGIN + 1):
        out.append(f'<line x1="0" y1="{sy(y)}" x2="{width}" y2="{sy(y)}"/>')
    out.append("</g>")
    labels = rep.labels
    n = len(labels)
    for i, v in enumerate(labels):
        colour = _hue(i, n)
        shift = (i - (n - 1) / 2) * min(0.3 / max(n, 1), 0.06)
        pts = " ".join(f"{sx(x + shift):.1f},{sy(y + shift):.1f}" for x, y in rep[v].points)
        out.append(f'<polyline points="{pts}" fill="none" stroke="{colour}" stroke-width="2">'
                   f"<title>{escape(v)}</title></polyline>")
        for bx, by in rep[v].bend_points():
            out.append(f'<circle cx="{sx(bx + shift):.1f}" cy="{sy(by + shift):.1f}" r="3" fill="{colour}"/>')
        lx, ly = rep[v].points[0]
        out.append(f'<text x="{sx(lx + shift) + 3:.1f}" y="{sy(ly + shift) - 3:.1f}" font-size="10" '
                   f'fill="{colour}">{escape(v)}</text>')
    if show_splits and n <= 200:
        crosses = set()
        for a, b in combinations(labels, 2):
            if rep[a].edge_set() & rep[b].edge_set():
                crosses |= split_points(rep[a], rep[b])
        for x, y in sorted(crosses):
            cx, cy, d = sx(x), sy(y), 4
            out.append(f'<path d="M{cx - d},{cy - d}L{cx + d},{cy + d}M{cx - d},{cy + d}L{cx + d},{cy - d}" '
                       'stroke="black" stroke-width="1.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
