"""Static SVG rendering of the triangle subdivision figures.

Each subdivided triangle gets its new vertex drawn at the barycenter with
edges from the three current vertices; the placement is presentational
only, the combinatorics live elsewhere.  Vertices can be labeled with
their coefficient combination of the three corners (the value-sum labels
of the figures) or each deepest triangle with its digit address.
"""

from __future__ import annotations

import math

MAX_RENDER_DEPTH = 7
LABEL_MODES = ("values", "addresses")

_SIZE = 640.0
_MARGIN = 50.0

Point = tuple[float, float]
Coeffs = tuple[int, int, int]


def combo_label(coeffs: Coeffs) -> str:
    """Human-readable combination of the corners, e.g. (2, 2, 1) -> 2v1+2v2+v3."""
    parts = []
    for c, name in zip(coeffs, ("v1", "v2", "v3")):
        if c:
            parts.append(name if c == 1 else f"{c}{name}")
    return "+".join(parts) if parts else "0"


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_subdivision(depth: int, label_mode: str = "values") -> str:
    """Standalone SVG of the subdivision through ``depth``."""
    if not 0 <= depth <= MAX_RENDER_DEPTH:
        raise ValueError(f"depth must be between 0 and {MAX_RENDER_DEPTH}, got {depth}")
    if label_mode not in LABEL_MODES:
        raise ValueError(f"label mode must be one of {LABEL_MODES}, got {label_mode!r}")

    side = _SIZE - 2 * _MARGIN
    base_y = _SIZE - _MARGIN
    corners: tuple[Point, Point, Point] = (
        (_MARGIN, base_y),
        (_MARGIN + side, base_y),
        (_MARGIN + side / 2, base_y - side * math.sqrt(3) / 2),
    )
    corner_coeffs: tuple[Coeffs, Coeffs, Coeffs] = ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    edges: list[tuple[Point, Point]] = [
        (corners[0], corners[1]),
        (corners[1], corners[2]),
        (corners[2], corners[0]),
    ]
    labels: list[tuple[Point, str]] = []
    font = max(5, 18 - 3 * depth)

    if label_mode == "values":
        labels.extend((p, combo_label(c)) for p, c in zip(corners, corner_coeffs))

    def subdivide(points, coeffs, digits: tuple[int, ...]) -> None:
        if len(digits) == depth:
            if label_mode == "addresses":
                cx = sum(p[0] for p in points) / 3
                cy = sum(p[1] for p in points) / 3
                labels.append(((cx, cy), "(" + "".join(map(str, digits)) + ")"))
            return
        (p1, p2, p3) = points
        (c1, c2, c3) = coeffs
        mid: Point = (
            (p1[0] + p2[0] + p3[0]) / 3,
            (p1[1] + p2[1] + p3[1]) / 3,
        )
        mid_coeffs: Coeffs = tuple(a + b + c for a, b, c in zip(c1, c2, c3))
        edges.extend(((p1, mid), (p2, mid), (p3, mid)))
        if label_mode == "values":
            labels.append((mid, combo_label(mid_coeffs)))
        subdivide((p1, p2, mid), (c1, c2, mid_coeffs), digits + (0,))
        subdivide((p2, p3, mid), (c2, c3, mid_coeffs), digits + (1,))
        subdivide((p3, p1, mid), (c3, c1, mid_coeffs), digits + (2,))

    subdivide(corners, corner_coeffs, ())

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE:.0f}" '
        f'height="{_SIZE:.0f}" viewBox="0 0 {_SIZE:.0f} {_SIZE:.0f}">',
        f'<g stroke="black" stroke-width="{max(0.3, 1.6 - 0.2 * depth):.1f}" fill="none">',
    ]
    for (x1, y1), (x2, y2) in edges:
        parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
        )
    parts.append("</g>")
    parts.append(f'<g font-family="sans-serif" font-size="{font}" fill="#b00">')
    for (x, y), text in labels:
        parts.append(f'<text x="{_fmt(x)}" y="{_fmt(y)}" text-anchor="middle">{text}</text>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
