"""Schematic SVG of the arc patterns on P and R.

Each pants is a disk (∂3) with two holes (∂1 left, ∂2 right).  Slots sit
evenly spaced around their circle in rotation order, arcs are cubic curves
between slot anchors, and the two hexagons are shaded.  Geometry is only
illustrative; the JSON dump is authoritative.
"""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .construction import ConstructionParams, find_hexagons
from .pants import PantsPattern

WIDTH, HEIGHT = 360, 360
CIRCLES = {3: (0.0, 0.0, 150.0), 1: (-68.0, 0.0, 36.0), 2: (68.0, 0.0, 36.0)}
KIND_COLOUR = {"a": "#7a3e9d", "b": "#1f6fb2", "c": "#2a8a4a", "d": "#c0392b"}
HEX_FILL = {1: "#f6d55c", 2: "#8fd3c9"}


def _anchors(pp: PantsPattern) -> dict:
    """(circle, slot) -> (x, y, nx, ny) with (nx, ny) pointing into the pants."""
    out = {}
    for c, order in pp.rotation.items():
        cx, cy, r = CIRCLES[c]
        n = len(order)
        # outer circle runs counterclockwise, holes clockwise: surface on the left
        sign = 1 if c == 3 else -1
        phase = math.pi / 2 if c == 3 else 0.0
        for k, s in enumerate(order):
            t = phase + sign * 2 * math.pi * (k + 0.5) / max(n, 1)
            ux, uy = math.cos(t), math.sin(t)
            inward = -1 if c == 3 else 1
            out[(c, s)] = (cx + r * ux, cy + r * uy, inward * ux, inward * uy)
    return out


def _xy(x, y, ox):
    # math coordinates to screen, y up
    return f"{ox + x + WIDTH / 2:.2f},{HEIGHT / 2 - y:.2f}"


def _bezier(a, b, t):
    return tuple((1 - t) ** 3 * a[i] + 3 * (1 - t) ** 2 * t * a[i + 2]
                 + 3 * (1 - t) * t ** 2 * b[i + 2] + t ** 3 * b[i] for i in (0, 1))


def pants_group(pp: PantsPattern, params: ConstructionParams, ox: float) -> list[str]:
    anchors = _anchors(pp)
    parts = [f'<g id="pants-{pp.side}">']
    for which, region in sorted(find_hexagons(pp, params).items()):
        pts = []
        for c, s, t in region.segments:
            pts += [anchors[(c, s)][:2], anchors[(c, t)][:2]]
        poly = " ".join(_xy(x, y, ox) for x, y in pts)
        parts.append(f'<polygon class="hexagon" data-hexagon="H{which}" points="{poly}" '
                     f'fill="{HEX_FILL[which]}" fill-opacity="0.6" stroke="none"/>')
    for c, (cx, cy, r) in sorted(CIRCLES.items()):
        x, y = _xy(cx, cy, ox).split(",")
        parts.append(f'<circle class="boundary" data-circle="{c}" cx="{x}" cy="{y}" r="{r}" '
                     f'fill="none" stroke="#222" stroke-width="1.5"/>')
    for arc in sorted(pp.arcs, key=lambda a: a.label):
        a, b = anchors[arc.end1], anchors[arc.end2]
        d = math.dist(a[:2], b[:2])
        k = min(60.0, 0.45 * d + 12)
        ca = (a[0], a[1], a[0] + k * a[2], a[1] + k * a[3])
        cb = (b[0], b[1], b[0] + k * b[2], b[1] + k * b[3])
        path = (f"M {_xy(a[0], a[1], ox)} C {_xy(ca[2], ca[3], ox)} "
                f"{_xy(cb[2], cb[3], ox)} {_xy(b[0], b[1], ox)}")
        colour = KIND_COLOUR[arc.label.kind]
        label = escape(str(arc.label))
        parts.append(f'<path class="arc" data-label="{label}" d="{path}" fill="none" '
                     f'stroke="{colour}" stroke-width="1.4"/>')
        mx, my = _bezier((a[0], a[1], ca[2], ca[3]), (b[0], b[1], cb[2], cb[3]), 0.5)
        sx, sy = _xy(mx, my, ox).split(",")
        parts.append(f'<text x="{sx}" y="{sy}" font-size="9" fill="{colour}">{label}</text>')
    x, y = _xy(-150, 165, ox).split(",")
    parts.append(f'<text x="{x}" y="{y}" font-size="16">{pp.side}</text>')
    parts.append("</g>")
    return parts


def render(g, params: ConstructionParams) -> str:
    """Both pants side by side as a standalone SVG document."""
    body = pants_group(g.P, params, 0) + pants_group(g.R, params, WIDTH)
    return "\n".join([
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{2 * WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {2 * WIDTH} {HEIGHT}">',
        f"<title>arc pattern for (p, q) = ({params.p}, {params.q})</title>",
        *body,
        "</svg>",
        "",
    ])
