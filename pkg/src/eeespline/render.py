"""Heatmap rendering of spline basis functions.

Floating point appears here and nowhere else: the exact per-cell polynomials
are sampled on a float grid, colored, and embedded in an SVG as a PNG.
"""
from __future__ import annotations

import base64
import io as _io

import numpy as np
from PIL import Image

from .conformality import Spline

# blue -> white -> red
_ANCHORS = np.array([[49, 54, 149], [116, 173, 209], [247, 247, 247], [244, 109, 67], [165, 0, 38]],
                    dtype=float)


def colormap(t: np.ndarray) -> np.ndarray:
    t = np.clip(t, 0.0, 1.0) * (len(_ANCHORS) - 1)
    lo = np.minimum(np.floor(t).astype(int), len(_ANCHORS) - 2)
    frac = (t - lo)[..., None]
    return (_ANCHORS[lo] * (1 - frac) + _ANCHORS[lo + 1] * frac).astype(np.uint8)


def _inside(poly: np.ndarray, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Even-odd point-in-polygon test over a grid."""
    inside = np.zeros(X.shape, dtype=bool)
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        if y1 == y2:
            continue
        crosses = (Y >= min(y1, y2)) & (Y < max(y1, y2))
        xi = x1 + (Y - y1) * (x2 - x1) / (y2 - y1)
        inside ^= crosses & (X < xi)
    return inside


def sample_grid(s: Spline, n: int = 256):
    """(values, mask, bbox) on an n x n pixel-centre grid, row 0 at the top."""
    p = s.partition
    xs = [float(v[0]) for v in p.vertices]
    ys = [float(v[1]) for v in p.vertices]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    gx = x0 + (np.arange(n) + 0.5) * (x1 - x0) / n
    gy = y1 - (np.arange(n) + 0.5) * (y1 - y0) / n
    X, Y = np.meshgrid(gx, gy)
    values = np.full(X.shape, np.nan)
    for c, poly in enumerate(s.polys):
        pts = np.array([[float(a), float(b)] for a, b in p.cell_points(c)])
        m = _inside(pts, X, Y) & np.isnan(values)
        values[m] = poly.evaluate_float(X[m], Y[m])
    return values, ~np.isnan(values), (x0, x1, y0, y1)


def render_svg(s: Spline, n: int = 256, size: int = 512, title: str = "") -> str:
    values, mask, (x0, x1, y0, y1) = sample_grid(s, n)
    lo = float(np.min(values[mask])) if mask.any() else 0.0
    hi = float(np.max(values[mask])) if mask.any() else 1.0
    span = hi - lo if hi > lo else 1.0
    rgba = np.zeros(values.shape + (4,), dtype=np.uint8)
    rgba[..., :3] = colormap((np.nan_to_num(values, nan=lo) - lo) / span)
    rgba[..., 3] = np.where(mask, 255, 0)
    buf = _io.BytesIO()
    Image.fromarray(rgba, "RGBA").save(buf, format="PNG")
    png = base64.b64encode(buf.getvalue()).decode("ascii")

    w = x1 - x0 or 1.0
    h = y1 - y0 or 1.0
    scale = size / max(w, h)
    W, H = w * scale, h * scale

    def sx(x):
        return (float(x) - x0) * scale

    def sy(y):
        return (y1 - float(y)) * scale

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W:.1f}" height="{H + 24:.1f}" '
             f'viewBox="0 0 {W:.1f} {H + 24:.1f}">',
             f'<image x="0" y="0" width="{W:.1f}" height="{H:.1f}" preserveAspectRatio="none" '
             f'href="data:image/png;base64,{png}"/>']
    p = s.partition
    for c in range(len(p.cells)):
        pts = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in p.cell_points(c))
        parts.append(f'<polygon points="{pts}" fill="none" stroke="black" stroke-width="1"/>')
    label = f"{title}  min {lo:.6g}  max {hi:.6g}".strip()
    parts.append(f'<text x="4" y="{H + 17:.1f}" font-family="monospace" font-size="12">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
