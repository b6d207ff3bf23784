"""Deterministic SVG rendering of lattice figures and fans.

Scale is 40 px per lattice unit with the origin at the bottom-left corner;
no timestamps, randomness or external assets.
"""

from __future__ import annotations

from fractions import Fraction

from .lattice import Cone2, vadd
from .nash import dn_set, pn_family

UNIT = 40
MARGIN = 1  # lattice units around the drawn points


def _svg_document(width_units, height_units, body) -> str:
    w, h = width_units * UNIT, height_units * UNIT
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    lines.extend(body)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _to_px(p, height_units):
    x = (p[0] + MARGIN) * UNIT
    y = (height_units - MARGIN - p[1]) * UNIT
    return x, y


def _fmt(v) -> str:
    f = Fraction(v).limit_denominator(10 ** 6)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{float(f):.2f}"


def pn_dn_figure(n: int) -> str:
    """P_n and D_n with the dual-cone rays and the dividing polygonal line."""
    fam = pn_family(n)
    dn = sorted(dn_set(n))
    pts = sorted(fam.points())
    max_x = max(p[0] for p in pts + dn) + 2
    max_y = max(p[1] for p in pts + dn) + 2
    width, height = max_x + 2 * MARGIN, max_y + 2 * MARGIN

    body = []
    # boundary rays of the dual cone: directions (1,0) and (3,4)
    ox, oy = _to_px((0, 0), height)
    for ray in ((1, 0), (3, 4)):
        k = max(max_x, max_y)
        ex, ey = _to_px((ray[0] * k, ray[1] * k), height)
        body.append(
            f'<line class="dual-ray" x1="{ox}" y1="{oy}" x2="{ex}" y2="{ey}" '
            'stroke="black" stroke-width="1"/>'
        )
    # polygonal dividing line through the family, continued along (3,4)
    chain = [fam.p] + list(reversed(fam.q)) + list(fam.r) + [fam.s]
    chain.append(vadd(fam.s, (3, 4)))
    coords = " ".join(
        "{},{}".format(*_to_px(p, height)) for p in chain
    )
    body.append(
        f'<polyline class="dividing-line" points="{coords}" '
        'fill="none" stroke="blue" stroke-width="2"/>'
    )
    for p in dn:
        x, y = _to_px(p, height)
        body.append(
            f'<circle class="d-marker" cx="{x}" cy="{y}" r="5" '
            'fill="white" stroke="black" stroke-width="1.5"/>'
        )
    for p in pts:
        x, y = _to_px(p, height)
        body.append(
            f'<circle class="p-marker" cx="{x}" cy="{y}" r="5" fill="black"/>'
        )
    return _svg_document(width, height, body)


def fan_figure(cones, support: Cone2) -> str:
    """The fan inside its support cone, rays drawn to a fixed radius."""
    rays = [support.ray1]
    for gc in cones:
        rays.append(gc.cone.ray2)
    max_c = max(max(abs(r[0]), abs(r[1])) for r in rays)
    radius = 6  # lattice units
    width = height = 2 * (radius + 2 * MARGIN)
    cx, cy = (width // 2, height // 2)
    ox, oy = (cx * UNIT, cy * UNIT)

    def ray_end(r):
        scale = Fraction(radius, max(abs(r[0]), abs(r[1])))
        return ox + float(scale * r[0]) * UNIT, oy - float(scale * r[1]) * UNIT

    body = []
    for r in rays:
        ex, ey = ray_end(r)
        body.append(
            f'<line class="fan-ray" x1="{ox}" y1="{oy}" x2="{_fmt(ex)}" y2="{_fmt(ey)}" '
            'stroke="black" stroke-width="1.5"/>'
        )
    for gc in cones:
        from .lattice import multiplicity
        mid = vadd(gc.cone.ray1, gc.cone.ray2)
        mx, my = ray_end(mid)
        body.append(
            f'<text class="mult-label" x="{_fmt((ox + mx) / 2)}" y="{_fmt((oy + my) / 2)}" '
            f'font-family="monospace" font-size="14">{multiplicity(gc.cone)}</text>'
        )
    return _svg_document(width, height, body)
