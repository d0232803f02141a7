"""Minimal deterministic SVG scatter plots.

Plots are written by hand rather than through a plotting library so the
output bytes depend only on the data; two runs over identical inputs
produce identical files.
"""

import numpy as np

# All rendering constants live here; changing any of them invalidates
# golden-file comparisons.
CANVAS = {
    "width": 900,
    "height": 700,
    "margin_left": 75,
    "margin_right": 180,   # reserves room for the legend
    "margin_top": 50,
    "margin_bottom": 65,
    "pad_frac": 0.05,      # axis padding around the data bounding box
    "point_radius": 4.0,
    "tick_count": 5,
    "font": "DejaVu Sans, sans-serif",
}

# Discrete 8-step palette (dark to bright) for count coloring.
VIRIDIS8 = (
    "#440154", "#46327e", "#365c8d", "#277f8e",
    "#1fa187", "#4ac16d", "#a0da39", "#fde725",
)

# Cycled colors for categorical groups (source suites).
CATEGORY10 = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)

GOOD_COLOR = "#1f77b4"
BAD_COLOR = "#ff7f0e"


def _axis_range(values: np.ndarray):
    lo, hi = float(values.min()), float(values.max())
    span = hi - lo
    if span == 0:
        span = 1.0
        lo -= 0.5
        hi += 0.5
    pad = CANVAS["pad_frac"] * span
    return lo - pad, hi + pad


class _Mapper:
    def __init__(self, xy: np.ndarray):
        self.x0, self.x1 = _axis_range(xy[:, 0])
        self.y0, self.y1 = _axis_range(xy[:, 1])
        self.left = CANVAS["margin_left"]
        self.right = CANVAS["width"] - CANVAS["margin_right"]
        self.top = CANVAS["margin_top"]
        self.bottom = CANVAS["height"] - CANVAS["margin_bottom"]

    def px(self, x: float) -> float:
        return self.left + (x - self.x0) / (self.x1 - self.x0) * (self.right - self.left)

    def py(self, y: float) -> float:
        return self.bottom - (y - self.y0) / (self.y1 - self.y0) * (self.bottom - self.top)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def scatter_svg(title, xy, colors, legend=None, hulls=None,
                xlabel="z1", ylabel="z2") -> str:
    """Render one scatter view.

    xy is (N, 2); colors is one fill color per point; legend is a list of
    (label, color); hulls is a list of (color, vertex array) polygons
    drawn under the points.
    """
    xy = np.atleast_2d(np.asarray(xy, dtype=float))
    m = _Mapper(xy)
    w, h = CANVAS["width"], CANVAS["height"]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="white"/>',
        f'<text x="{w / 2:.0f}" y="30" font-family="{CANVAS["font"]}" font-size="18" '
        f'text-anchor="middle">{title}</text>',
        f'<rect x="{m.left}" y="{m.top}" width="{m.right - m.left}" '
        f'height="{m.bottom - m.top}" fill="none" stroke="#333" stroke-width="1"/>',
    ]

    for i in range(CANVAS["tick_count"]):
        frac = i / (CANVAS["tick_count"] - 1)
        xv = m.x0 + frac * (m.x1 - m.x0)
        yv = m.y0 + frac * (m.y1 - m.y0)
        xp, yp = m.px(xv), m.py(yv)
        parts.append(
            f'<line x1="{_fmt(xp)}" y1="{m.bottom}" x2="{_fmt(xp)}" '
            f'y2="{m.bottom + 5}" stroke="#333"/>'
            f'<text x="{_fmt(xp)}" y="{m.bottom + 20}" font-family="{CANVAS["font"]}" '
            f'font-size="11" text-anchor="middle">{xv:.3g}</text>'
        )
        parts.append(
            f'<line x1="{m.left - 5}" y1="{_fmt(yp)}" x2="{m.left}" '
            f'y2="{_fmt(yp)}" stroke="#333"/>'
            f'<text x="{m.left - 8}" y="{_fmt(yp + 4)}" font-family="{CANVAS["font"]}" '
            f'font-size="11" text-anchor="end">{yv:.3g}</text>'
        )
    parts.append(
        f'<text x="{(m.left + m.right) / 2:.0f}" y="{h - 15}" '
        f'font-family="{CANVAS["font"]}" font-size="14" text-anchor="middle">{xlabel}</text>'
    )
    parts.append(
        f'<text x="20" y="{(m.top + m.bottom) / 2:.0f}" font-family="{CANVAS["font"]}" '
        f'font-size="14" text-anchor="middle" '
        f'transform="rotate(-90 20 {(m.top + m.bottom) / 2:.0f})">{ylabel}</text>'
    )

    for color, verts in hulls or []:
        if len(verts) < 3:
            continue
        pts = " ".join(f"{_fmt(m.px(x))},{_fmt(m.py(y))}" for x, y in verts)
        parts.append(
            f'<polygon points="{pts}" fill="{color}" fill-opacity="0.15" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )

    r = CANVAS["point_radius"]
    for (x, y), color in zip(xy, colors):
        parts.append(
            f'<circle cx="{_fmt(m.px(x))}" cy="{_fmt(m.py(y))}" r="{r}" '
            f'fill="{color}" fill-opacity="0.85"/>'
        )

    lx = m.right + 20
    for i, (label, color) in enumerate(legend or []):
        ly = m.top + 10 + 22 * i
        parts.append(
            f'<rect x="{lx}" y="{ly}" width="12" height="12" fill="{color}"/>'
            f'<text x="{lx + 18}" y="{ly + 11}" font-family="{CANVAS["font"]}" '
            f'font-size="12">{label}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def convex_hull(points: np.ndarray) -> np.ndarray:
    """Andrew's monotone chain; returns hull vertices in CCW order."""
    pts = np.unique(np.atleast_2d(np.asarray(points, dtype=float)), axis=0)
    if pts.shape[0] < 3:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in pts[::-1]:
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return np.array(lower[:-1] + upper[:-1])


def count_color(count: int, max_count: int) -> str:
    """Map a good-algorithm count to the discrete palette (dark = fewer)."""
    if max_count <= 0:
        return VIRIDIS8[0]
    idx = min(len(VIRIDIS8) - 1, count * (len(VIRIDIS8) - 1) // max_count)
    return VIRIDIS8[idx]
