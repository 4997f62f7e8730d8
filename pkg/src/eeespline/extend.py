"""Extend interior segments of a partition until it is (quasi-)cross-cut."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import NonConvexDomain
from .geometry import cross, line_intersection, on_segment
from .partition import (Partition, SegmentClass, build_partition, cell_interior_point,
                        classify_segments, is_convex, locate_cell)


@dataclass(frozen=True, eq=False)
class ExtendedPartition:
    base: Partition
    extended: Partition
    added_subedges: tuple   # edge indices of `extended`
    s: int                  # number of extension operations
    extensions: tuple       # ((x, y), (x, y)) start/end point of each extension
    strategy: str = "qcc"

    @cached_property
    def cell_to_base(self) -> tuple:
        """Base cell containing each extended cell."""
        out = []
        for c in range(len(self.extended.cells)):
            loc = locate_cell(self.base, cell_interior_point(self.extended, c))
            if not isinstance(loc, int):
                raise AssertionError(f"extended cell {c} is not inside a base cell")
            out.append(loc)
        return tuple(out)


def _segments_meet(a, b, c, d) -> bool:
    d1, d2 = cross(a, b, c), cross(a, b, d)
    d3, d4 = cross(c, d, a), cross(c, d, b)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    return any(on_segment(p, s, t) for p, s, t in ((c, a, b), (d, a, b), (a, c, d), (b, c, d)))


def _exit_point(p: Partition, start, direction):
    best = None
    loop = p.boundary_loop
    for i in range(len(loop)):
        a, b = p.vertices[loop[i]], p.vertices[loop[(i + 1) % len(loop)]]
        t = line_intersection(start, direction, a, b)
        if t is not None and t > 0 and (best is None or t < best):
            best = t
    if best is None:
        raise NonConvexDomain("extension does not reach the boundary")
    return (start[0] + best * direction[0], start[1] + best * direction[1])


def _crossings(p: Partition, v: int, end) -> int:
    start = p.vertices[v]
    return sum(1 for e in p.interior_edges if v not in p.edges[e]
               and _segments_meet(start, end, p.vertices[p.edges[e][0]], p.vertices[p.edges[e][1]]))


def _options(p: Partition, seg, ends):
    """Candidate extensions (vertex, direction, exit point) from the given segment ends."""
    out = []
    for k in ends:
        v = seg.vertices[k]
        other = seg.vertices[-1 if k == 0 else 0]
        P, R = p.vertices[v], p.vertices[other]
        u = (P[0] - R[0], P[1] - R[1])
        out.append((v, u, _exit_point(p, P, u)))
    return out


def _domain_centroid(p: Partition):
    pts = [p.vertices[v] for v in p.boundary_loop]
    n = len(pts)
    return (sum(x for x, _ in pts) / n, sum(y for _, y in pts) / n)


def _choose(p: Partition, seg, options):
    """Fewest crossings; ties go to the direction with the domain centroid on its left."""
    if len(options) == 1:
        return options[0]
    centroid = _domain_centroid(p)

    def key(opt):
        v, u, X = opt
        tail = p.vertices[v]
        back = (tail[0] - u[0], tail[1] - u[1])
        left = cross(back, tail, centroid) > 0
        return (_crossings(p, v, X), not left, tuple(-c for c in u))

    return min(options, key=key)


def _extend(p: Partition, full: bool) -> ExtendedPartition:
    if not is_convex(p):
        raise NonConvexDomain("extension requires a convex domain")
    points = list(p.vertices)
    segments = list(p.edges)
    extensions = []
    cur = p
    while True:
        classes, _ = classify_segments(cur)
        todo = [(s, c) for s, c in zip(cur.maximal_segments, classes)
                if c is SegmentClass.INTERIOR or (full and c is SegmentClass.RAY)]
        if not todo:
            break
        seg, cls = todo[0]
        ends = [k for k in (0, -1) if seg.vertices[k] not in cur.boundary_vertices]
        if full:
            ends = ends[:1]
        v, u, X = _choose(cur, seg, _options(cur, seg, ends))
        points = list(cur.vertices)
        segments = list(cur.edges)
        if X in points:
            xi = points.index(X)
        else:
            xi = len(points)
            points.append(X)
        segments.append((v, xi))
        extensions.append((cur.vertices[v], X))
        cur = build_partition(points, segments, name=p.name, allow_crossings=True)

    added = []
    for e, (a, b) in enumerate(cur.edges):
        A, B = cur.vertices[a], cur.vertices[b]
        mid = ((A[0] + B[0]) / 2, (A[1] + B[1]) / 2)
        in_base = any(on_segment(mid, p.vertices[i], p.vertices[j]) for i, j in p.edges)
        if not in_base and any(on_segment(mid, s, t) for s, t in extensions):
            added.append(e)
    return ExtendedPartition(p, cur, tuple(added), len(extensions), tuple(extensions),
                             "crosscut" if full else "qcc")


def extend_to_qcc(p: Partition) -> ExtendedPartition:
    """Extend every interior maximal segment one way to the boundary."""
    return _extend(p, full=False)


def extend_to_crosscut(p: Partition) -> ExtendedPartition:
    """Extend every maximal segment both ways; the result is a cross-cut partition."""
    return _extend(p, full=True)


def extend(p: Partition, strategy: str = "qcc") -> ExtendedPartition:
    if strategy == "qcc":
        return extend_to_qcc(p)
    if strategy == "crosscut":
        return extend_to_crosscut(p)
    raise ValueError(f"unknown strategy {strategy!r}")
