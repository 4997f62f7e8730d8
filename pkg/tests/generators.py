"""Random partitions with rational coordinates for property tests."""
from __future__ import annotations

import random
from fractions import Fraction

from eeespline.errors import PartitionError
from eeespline.geometry import cross, point_in_polygon
from eeespline.partition import build_partition


def _rat(rng: random.Random, lo: int, hi: int, den: int = 7) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), den)


def convex_quad(rng: random.Random) -> list:
    """Convex quadrilateral, counter-clockwise, roughly spanning [0, 10]^2."""
    while True:
        q = [(_rat(rng, 0, 2), _rat(rng, 0, 2)), (_rat(rng, 8, 10), _rat(rng, 0, 2)),
             (_rat(rng, 8, 10), _rat(rng, 8, 10)), (_rat(rng, 0, 2), _rat(rng, 8, 10))]
        if all(cross(q[i - 1], q[i], q[(i + 1) % 4]) > 0 for i in range(4)):
            return q


def _boundary_point(rng, quad, side):
    a, b = quad[side], quad[(side + 1) % 4]
    t = Fraction(rng.randint(1, 8), 9)
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def _chords(rng, quad, n):
    chords = []
    while len(chords) < n:
        s1, s2 = rng.sample(range(4), 2)
        P, R = _boundary_point(rng, quad, s1), _boundary_point(rng, quad, s2)
        if any(cross(P, R, A) == 0 and cross(P, R, B) == 0 for A, B in chords):
            continue
        chords.append((P, R))
    return chords


def _build(quad, segs, name):
    pts, idx = [], {}

    def at(p):
        if p not in idx:
            idx[p] = len(pts)
            pts.append(p)
        return idx[p]

    edges = [(at(quad[i]), at(quad[(i + 1) % 4])) for i in range(4)]
    edges += [(at(a), at(b)) for a, b in segs]
    return build_partition(pts, edges, name=name, allow_crossings=True)


def random_cross_cut(rng: random.Random, lines=(2, 5)):
    quad = convex_quad(rng)
    return _build(quad, _chords(rng, quad, rng.randint(*lines)), "random cross-cut")


def random_quasi_cross_cut(rng: random.Random, lines=(1, 3), rays=(1, 3)):
    """Cross-cuts plus rays running from the boundary to a point on an earlier segment."""
    while True:
        quad = convex_quad(rng)
        segs = _chords(rng, quad, rng.randint(*lines))
        for _ in range(rng.randint(*rays)):
            A, B = rng.choice(segs)
            t = Fraction(rng.randint(1, 6), 7)
            T = (A[0] + t * (B[0] - A[0]), A[1] + t * (B[1] - A[1]))
            P = _boundary_point(rng, quad, rng.randrange(4))
            if cross(A, B, P) != 0:
                segs.append((P, T))
        try:
            return _build(quad, segs, "random quasi-cross-cut")
        except PartitionError:
            continue


def random_triangulation(rng: random.Random, inserts=(2, 3)):
    """Point-insertion triangulation of a triangle: usually has interior segments."""
    tri = [(Fraction(0), Fraction(0)), (Fraction(12), Fraction(0)), (_rat(rng, 3, 9), Fraction(11))]
    pts = list(tri)
    faces = [(0, 1, 2)]
    edges = {(0, 1), (1, 2), (0, 2)}
    for _ in range(rng.randint(*inserts)):
        f = rng.randrange(len(faces))
        a, b, c = faces.pop(f)
        w = [rng.randint(1, 5) for _ in range(3)]
        s = sum(w)
        P = tuple(sum(Fraction(wi, s) * pts[v][k] for wi, v in zip(w, (a, b, c))) for k in range(2))
        assert point_in_polygon(P, [pts[a], pts[b], pts[c]]) == 1
        k = len(pts)
        pts.append(P)
        faces += [(a, b, k), (b, c, k), (c, a, k)]
        edges |= {(a, k), (b, k), (c, k)}
    return build_partition(pts, sorted(edges), name="random triangulation")
