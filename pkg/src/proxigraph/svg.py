"""Deterministic SVG rendering of inputs, computed graphs, and constraints.

Figure style: input edges solid, computed graph dashed, constraint edges
bold; viewport from the bounding box plus a 5% margin.  Output is a pure
function of the input, so renders are byte-identical across runs.
"""

from __future__ import annotations

from fractions import Fraction

_W = 640.0
_POINT_R = 3.0


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def render_svg(graph, computed_edges=None, constraint_edges=None, labels=True) -> str:
    pts = [(float(Fraction(p.x)), float(Fraction(p.y))) for p in graph.points]
    if pts:
        minx = min(p[0] for p in pts)
        maxx = max(p[0] for p in pts)
        miny = min(p[1] for p in pts)
        maxy = max(p[1] for p in pts)
    else:
        minx = miny = 0.0
        maxx = maxy = 1.0
    spanx = maxx - minx or 1.0
    spany = maxy - miny or 1.0
    margin = 0.05 * max(spanx, spany)
    minx -= margin
    miny -= margin
    spanx += 2 * margin
    spany += 2 * margin
    scale = _W / spanx
    height = spany * scale

    def sx(x):
        return (x - minx) * scale

    def sy(y):
        return height - (y - miny) * scale  # y grows upward

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(_W)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(_W)} {_fmt(height)}">',
        f'<rect width="{_fmt(_W)}" height="{_fmt(height)}" fill="white"/>',
        f'<line x1="0" y1="{_fmt(height)}" x2="{_fmt(_W)}" y2="{_fmt(height)}" '
        'stroke="#cccccc" stroke-width="1"/>',
        f'<line x1="0" y1="0" x2="0" y2="{_fmt(height)}" '
        'stroke="#cccccc" stroke-width="1"/>',
    ]

    def seg(a, b, style):
        x1, y1 = pts[a]
        x2, y2 = pts[b]
        out.append(
            f'<line x1="{_fmt(sx(x1))}" y1="{_fmt(sy(y1))}" '
            f'x2="{_fmt(sx(x2))}" y2="{_fmt(sy(y2))}" {style}/>'
        )

    for a, b in sorted(computed_edges or []):
        seg(a, b, 'stroke="#888888" stroke-width="1" stroke-dasharray="6 4"')
    for a, b in graph.edges:
        seg(a, b, 'stroke="black" stroke-width="1.5"')
    for a, b in sorted(constraint_edges or []):
        seg(a, b, 'stroke="#cc0000" stroke-width="3.5"')
    for i, (x, y) in enumerate(pts):
        out.append(
            f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="{_fmt(_POINT_R)}" '
            'fill="black"/>'
        )
        if labels and len(pts) <= 50:
            out.append(
                f'<text x="{_fmt(sx(x) + 5)}" y="{_fmt(sy(y) - 5)}" '
                f'font-size="11" font-family="monospace">{i}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
