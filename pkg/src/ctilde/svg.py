"""Static SVG picture of the rank-2 alcove geometry.

Draws the reflection hyperplanes x = m/2, y = m/2, x - y = m, x + y = m and
shades the base alcove 1/2 > x > y > 0.  A diagnostic artifact, not an
interactive surface.
"""

from __future__ import annotations

_VIEW = (-1.0, -1.0, 2.0, 2.0)  # world-coordinate window (xmin, ymin, xmax, ymax)
_SIZE = 640


def _px(x: float, y: float) -> tuple[float, float]:
    xmin, ymin, xmax, ymax = _VIEW
    sx = (x - xmin) / (xmax - xmin) * _SIZE
    sy = (ymax - y) / (ymax - ymin) * _SIZE
    return round(sx, 2), round(sy, 2)


def _line(x1, y1, x2, y2, stroke, width) -> str:
    (a, b), (c, d) = _px(x1, y1), _px(x2, y2)
    return (f'<line x1="{a}" y1="{b}" x2="{c}" y2="{d}" '
            f'stroke="{stroke}" stroke-width="{width}"/>')


def alcove_svg() -> str:
    """The rank-2 hyperplane arrangement with the base alcove highlighted."""
    xmin, ymin, xmax, ymax = _VIEW
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect width="{_SIZE}" height="{_SIZE}" fill="white"/>',
    ]
    # base alcove: triangle (0,0), (1/2,0), (1/2,1/2)
    pts = " ".join(f"{a},{b}" for a, b in (_px(0, 0), _px(0.5, 0), _px(0.5, 0.5)))
    parts.append(f'<polygon points="{pts}" fill="#ffd780" stroke="none"/>')
    # x = m/2 and y = m/2
    m = int(2 * xmin) - 1
    while m <= 2 * xmax + 1:
        level = m / 2
        heavy = m % 2 == 0
        parts.append(_line(level, ymin, level, ymax, "#444" if heavy else "#999",
                           1.2 if heavy else 0.6))
        parts.append(_line(xmin, level, xmax, level, "#444" if heavy else "#999",
                           1.2 if heavy else 0.6))
        m += 1
    # x - y = m and x + y = m
    m = int(xmin + ymin) - 1
    while m <= xmax + ymax + 1:
        parts.append(_line(xmin, xmin - m, xmax, xmax - m, "#2a6", 0.8))
        parts.append(_line(xmin, m - xmin, xmax, m - xmax, "#26a", 0.8))
        m += 1
    parts.append("</svg>")
    return "\n".join(parts)
