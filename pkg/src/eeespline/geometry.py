"""Exact predicates on rational points."""
from __future__ import annotations

from fractions import Fraction

from .exact import Q


def point(x, y) -> tuple:
    return (Q(x), Q(y))


def cross(o, a, b) -> Fraction:
    """z-component of (a - o) x (b - o); > 0 when o, a, b turn left."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def on_segment(p, a, b) -> bool:
    """p on the closed segment [a, b]."""
    if cross(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segment_parameter(p, a, b) -> Fraction:
    """t with p = a + t (b - a), for p known to lie on the line ab."""
    if a[0] != b[0]:
        return (p[0] - a[0]) / (b[0] - a[0])
    return (p[1] - a[1]) / (b[1] - a[1])


def proper_crossing(a, b, c, d):
    """Single interior crossing point of segments ab and cd, else None.

    Touching at an endpoint and collinear overlap do not count.
    """
    d1, d2 = cross(a, b, c), cross(a, b, d)
    d3, d4 = cross(c, d, a), cross(c, d, b)
    if d1 == 0 or d2 == 0 or d3 == 0 or d4 == 0:
        return None
    if (d1 > 0) == (d2 > 0) or (d3 > 0) == (d4 > 0):
        return None
    t = d3 / (d3 - d4)
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def line_intersection(p, u, a, b):
    """Parameter t at which the line p + t u meets the closed segment [a, b], or None."""
    den = u[0] * (b[1] - a[1]) - u[1] * (b[0] - a[0])
    if den == 0:
        return None
    # solve p + t u = a + s (b - a)
    t = ((a[0] - p[0]) * (b[1] - a[1]) - (a[1] - p[1]) * (b[0] - a[0])) / den
    s = ((a[0] - p[0]) * u[1] - (a[1] - p[1]) * u[0]) / den
    if 0 <= s <= 1:
        return t
    return None


def signed_area(loop) -> Fraction:
    n = len(loop)
    return sum((loop[i][0] * loop[(i + 1) % n][1] - loop[(i + 1) % n][0] * loop[i][1]
                for i in range(n)), Fraction(0)) / 2


def _half(v) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def angle_key_cmp(u, v) -> int:
    """Order direction vectors by polar angle in [0, 2 pi)."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def point_in_polygon(p, loop) -> int:
    """1 strictly inside, 0 on the boundary, -1 outside (crossing-number test)."""
    n = len(loop)
    inside = False
    for i in range(n):
        a, b = loop[i], loop[(i + 1) % n]
        if on_segment(p, a, b):
            return 0
        if (a[1] > p[1]) != (b[1] > p[1]):
            x = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            if x > p[0]:
                inside = not inside
    return 1 if inside else -1


def interior_point(loop) -> tuple:
    """A rational point strictly inside a simple polygon (centroid of an ear)."""
    pts = list(loop)
    # drop straight-angle vertices
    changed = True
    while changed and len(pts) > 3:
        changed = False
        for i in range(len(pts)):
            if cross(pts[i - 1], pts[i], pts[(i + 1) % len(pts)]) == 0:
                del pts[i]
                changed = True
                break
    orient = 1 if signed_area(pts) > 0 else -1
    n = len(pts)
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        if orient * cross(a, b, c) <= 0:
            continue
        tri = [a, b, c] if orient > 0 else [c, b, a]
        if any(point_in_polygon(q, tri) >= 0 for q in pts if q not in (a, b, c)):
            continue
        return ((a[0] + b[0] + c[0]) / 3, (a[1] + b[1] + c[1]) / 3)
    raise ValueError("polygon has no ear; is it simple?")
