"""SVG pictures of instances and solutions.

Cells are flat-topped hexagons.  Direction indices increase clockwise on
screen with direction 2 pointing up, so compiled circuits read top to bottom.
Each tile is drawn as its rotation-0 word inside a group turned by
``60 * rotation`` degrees; two renderings of the same tile differ only in
that angle.
"""

import math
from typing import Optional

from .instance import Instance, Solution
from .tiles import COLORS

SIDE = 20.0
PALETTE = {"b": "#1f5fbf", "g": "#2e9e44", "r": "#d62728", "y": "#e8b910"}

_SPACING = SIDE * math.sqrt(3)
# screen angle of direction d, clockwise with y pointing down
_ANGLE = [math.radians(90 + 60 * (d - 5)) for d in range(6)]
_STEP = [(math.cos(a) * _SPACING, math.sin(a) * _SPACING) for a in _ANGLE]


def _num(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def center(c):
    u, w = c
    return (u * _STEP[0][0] + w * _STEP[2][0], u * _STEP[0][1] + w * _STEP[2][1])


def _hexagon(cx, cy):
    pts = []
    for k in range(6):
        a = math.radians(60 * k)
        pts.append(f"{_num(cx + SIDE * math.cos(a))},{_num(cy + SIDE * math.sin(a))}")
    return " ".join(pts)


def _paths(code, cx, cy):
    """Three colour lines of ``code`` at rotation 0, as SVG path elements."""
    out = []
    for color in COLORS:
        ends = [d for d in range(6) if code[d] == color]
        if not ends:
            continue
        (x1, y1), (x2, y2) = (
            (cx + _STEP[d][0] / 2, cy + _STEP[d][1] / 2) for d in ends
        )
        out.append(
            f'<path d="M{_num(x1)},{_num(y1)} Q{_num(cx)},{_num(cy)} {_num(x2)},{_num(y2)}" '
            f'stroke="{PALETTE[color]}"/>'
        )
    return out


def render_svg(instance: Instance, solution: Optional[Solution] = None) -> str:
    cells = instance.cells()
    if cells:
        xs, ys = zip(*(center(c) for c in cells))
        x0, y0 = min(xs) - SIDE - 2, min(ys) - SIDE - 2
        width, height = max(xs) - min(xs) + 2 * SIDE + 4, max(ys) - min(ys) + 2 * SIDE + 4
    else:
        x0 = y0 = 0.0
        width = height = 1.0
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_num(x0)} {_num(y0)} {_num(width)} {_num(height)}">',
        '<g fill="none" stroke-width="4" stroke-linecap="round">',
    ]
    for c in cells:
        cx, cy = center(c)
        rot = solution[c] if solution is not None else 0
        lines.append(
            f'<polygon points="{_hexagon(cx, cy)}" fill="#222" stroke="#555" stroke-width="1"/>'
        )
        lines.append(f'<g transform="rotate({60 * rot} {_num(cx)} {_num(cy)})">')
        lines += _paths(instance.placements[c], cx, cy)
        lines.append("</g>")
    lines += ["</g>", "</svg>"]
    return "\n".join(lines) + "\n"


__all__ = ["center", "render_svg"]
