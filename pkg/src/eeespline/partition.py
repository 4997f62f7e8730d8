"""Planar polygonal partitions built from rational segments.

Segments are split at every intersection, faces are traced with a half-edge
walk, and interior edges are grouped into maximal collinear segments, which
are then classified as cross-cuts, rays or interior segments.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, cmp_to_key
from typing import NamedTuple, Sequence

from .errors import CrossingSegments, NotSimplyConnected, OpenBoundary
from .exact import Q
from .geometry import (angle_key_cmp, cross, interior_point, on_segment, point_in_polygon,
                       proper_crossing, segment_parameter, signed_area)
from .poly import LineForm


class SegmentClass(enum.Enum):
    CROSS_CUT = "cross-cut"
    RAY = "ray"
    INTERIOR = "interior"


class PartitionClass(enum.Enum):
    CROSS_CUT = "cross-cut"
    QUASI_CROSS_CUT = "quasi-cross-cut"
    GENERAL = "general"


class Location(enum.Enum):
    ON_EDGE = "on-edge"
    OUTSIDE = "outside"


class MaximalSegment(NamedTuple):
    line: LineForm
    vertices: tuple  # ordered along the line
    edges: tuple     # edges[i] joins vertices[i] and vertices[i + 1]


class TreeEdge(NamedTuple):
    parent: int
    child: int
    edge: int


@dataclass(frozen=True, eq=False)
class Partition:
    vertices: tuple
    edges: tuple          # (u, v) with u < v, sorted
    lines: tuple          # canonical LineForm per edge
    cells: tuple          # counter-clockwise vertex loops
    edge_cells: tuple     # (cell left of u->v, cell right of u->v); None = outside
    boundary_loop: tuple  # counter-clockwise
    maximal_segments: tuple
    name: str = field(default="", compare=False)

    # derived -----------------------------------------------------------
    @cached_property
    def boundary_vertices(self) -> frozenset:
        return frozenset(self.boundary_loop)

    @cached_property
    def interior_vertices(self) -> tuple:
        return tuple(v for v in range(len(self.vertices)) if v not in self.boundary_vertices)

    @cached_property
    def interior_edges(self) -> tuple:
        return tuple(e for e, (l, r) in enumerate(self.edge_cells) if l is not None and r is not None)

    @cached_property
    def vertex_edges(self) -> tuple:
        inc = [[] for _ in self.vertices]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def edge_index(self) -> dict:
        return {uv: e for e, uv in enumerate(self.edges)}

    def cell_points(self, c: int) -> list:
        return [self.vertices[v] for v in self.cells[c]]

    def is_boundary_edge(self, e: int) -> bool:
        return None in self.edge_cells[e]

    def positive_cell(self, e: int):
        """Cell on the side of edge e where its canonical line form is positive."""
        return self.edge_cells[e][0] if self._left_is_positive(e) else self.edge_cells[e][1]

    def negative_cell(self, e: int):
        return self.edge_cells[e][1] if self._left_is_positive(e) else self.edge_cells[e][0]

    def _left_is_positive(self, e: int) -> bool:
        u, v = self.edges[e]
        (x1, y1), (x2, y2) = self.vertices[u], self.vertices[v]
        ln = self.lines[e]
        # left normal of u->v is (-(y2 - y1), x2 - x1)
        return ln.a * (y1 - y2) + ln.b * (x2 - x1) > 0

    def crossing_sign(self, e: int, v: int) -> int:
        """+1 if a counter-clockwise walk around v crosses e from - to + side."""
        u, w = self.edges[e]
        other = w if u == v else u
        (x1, y1), (x2, y2) = self.vertices[v], self.vertices[other]
        ln = self.lines[e]
        return 1 if ln.a * (y1 - y2) + ln.b * (x2 - x1) > 0 else -1

    def lines_through(self, v: int) -> tuple:
        """Distinct lines of interior edges incident to v."""
        seen = []
        for e in self.vertex_edges[v]:
            if not self.is_boundary_edge(e) and self.lines[e] not in seen:
                seen.append(self.lines[e])
        return tuple(seen)

    @cached_property
    def cell_adjacency(self) -> tuple:
        adj = [[] for _ in self.cells]
        for e in self.interior_edges:
            l, r = self.edge_cells[e]
            adj[l].append((r, e))
            adj[r].append((l, e))
        return tuple(tuple(sorted(a)) for a in adj)

    def area(self):
        return signed_area([self.vertices[v] for v in self.boundary_loop])

    def segment_of_edge(self, e: int):
        for s in self.maximal_segments:
            if e in s.edges:
                return s
        return None

    def fingerprint_doc(self) -> dict:
        return {"vertices": [[str(x), str(y)] for x, y in self.vertices],
                "edges": [list(uv) for uv in self.edges]}

    def __repr__(self):
        return (f"Partition({self.name!r}, V={len(self.vertices)}, E={len(self.edges)}, "
                f"cells={len(self.cells)})")


# construction ----------------------------------------------------------

def _arrange(points, segments, allow_crossings):
    index = {}
    pts = []
    remap = []
    for p in points:
        p = (Q(p[0]), Q(p[1]))
        if p not in index:
            index[p] = len(pts)
            pts.append(p)
        remap.append(index[p])
    segs = []
    for i, j in segments:
        i, j = remap[i], remap[j]
        if i == j:
            raise OpenBoundary(f"zero-length segment at vertex {i}")
        segs.append((i, j))
    for s in range(len(segs)):
        for t in range(s + 1, len(segs)):
            a, b = pts[segs[s][0]], pts[segs[s][1]]
            c, d = pts[segs[t][0]], pts[segs[t][1]]
            x = proper_crossing(a, b, c, d)
            if x is None:
                continue
            if not allow_crossings:
                raise CrossingSegments(f"segments {segs[s]} and {segs[t]} cross at {x}")
            if x not in index:
                index[x] = len(pts)
                pts.append(x)
    edges = set()
    for i, j in segs:
        a, b = pts[i], pts[j]
        on = [k for k, p in enumerate(pts) if on_segment(p, a, b)]
        on.sort(key=lambda k: segment_parameter(pts[k], a, b))
        for k1, k2 in zip(on, on[1:]):
            edges.add((min(k1, k2), max(k1, k2)))
    return pts, sorted(edges)


def _trace_faces(pts, edges):
    nbrs = [[] for _ in pts]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    for v, ns in enumerate(nbrs):
        if not ns:
            raise OpenBoundary(f"vertex {v} is not on any edge")
        if len(ns) < 2:
            raise OpenBoundary(f"vertex {v} has a dangling edge")
        ns.sort(key=cmp_to_key(lambda a, b, v=v: angle_key_cmp(
            (pts[a][0] - pts[v][0], pts[a][1] - pts[v][1]),
            (pts[b][0] - pts[v][0], pts[b][1] - pts[v][1]))))
    pos = [{w: k for k, w in enumerate(ns)} for ns in nbrs]

    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in nbrs[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(pts):
        raise NotSimplyConnected("partition graph is disconnected")

    face_of = {}
    faces = []
    for u, v in edges:
        for he in ((u, v), (v, u)):
            if he in face_of:
                continue
            loop = []
            cur = he
            while cur not in face_of:
                face_of[cur] = len(faces)
                loop.append(cur[0])
                a, b = cur
                k = pos[b][a]
                cur = (b, nbrs[b][k - 1])
            faces.append(loop)
    return faces, face_of


def build_partition(points: Sequence, segments: Sequence, name: str = "",
                    allow_crossings: bool = False) -> Partition:
    """Build a partition from rational points and index-pair segments.

    Segments may touch (T-junctions, shared endpoints, collinear overlap);
    proper crossings raise :class:`CrossingSegments` unless
    ``allow_crossings`` is set, in which case they are split.
    """
    pts, edges = _arrange(points, segments, allow_crossings)
    faces, face_of = _trace_faces(pts, edges)

    areas = [signed_area([pts[v] for v in f]) for f in faces]
    outer = [i for i, a in enumerate(areas) if a <= 0]
    if len(outer) != 1 or areas[outer[0]] == 0:
        raise NotSimplyConnected("expected exactly one outer face")
    for i, f in enumerate(faces):
        if len(set(f)) != len(f):
            raise NotSimplyConnected(f"face {i} touches itself (bridge or pinch)")
    outer_face = outer[0]

    def rotate(loop):
        k = loop.index(min(loop))
        return tuple(loop[k:] + loop[:k])

    inner = sorted((rotate(f), i) for i, f in enumerate(faces) if i != outer_face)
    cell_id = {i: c for c, (_, i) in enumerate(inner)}
    cells = tuple(loop for loop, _ in inner)

    edge_cells = []
    for u, v in edges:
        edge_cells.append((cell_id.get(face_of[(u, v)]), cell_id.get(face_of[(v, u)])))
    if len(pts) - len(edges) + len(cells) + 1 != 2:
        raise NotSimplyConnected("Euler characteristic is not 2")
    boundary = rotate(list(reversed(faces[outer_face])))
    lines = tuple(LineForm.through(pts[u], pts[v]) for u, v in edges)
    segs = _maximal_segments(pts, edges, lines, edge_cells)
    return Partition(tuple(pts), tuple(edges), lines, cells, tuple(edge_cells), boundary, segs, name)


def _maximal_segments(pts, edges, lines, edge_cells):
    groups = {}
    for e, (l, r) in enumerate(edge_cells):
        if l is None or r is None:
            continue
        groups.setdefault(lines[e], []).append(e)
    out = []
    for line, es in groups.items():
        remaining = set(es)
        by_vertex = {}
        for e in es:
            for v in edges[e]:
                by_vertex.setdefault(v, []).append(e)
        while remaining:
            start = min(remaining)
            comp = {start}
            stack = [start]
            while stack:
                e = stack.pop()
                for v in edges[e]:
                    for f in by_vertex[v]:
                        if f not in comp:
                            comp.add(f)
                            stack.append(f)
            remaining -= comp
            verts = sorted({v for e in comp for v in edges[e]}, key=lambda v: pts[v])
            chain = tuple(_edge_between(edges, verts[k], verts[k + 1]) for k in range(len(verts) - 1))
            out.append(MaximalSegment(line, tuple(verts), chain))
    out.sort(key=lambda s: (pts[s.vertices[0]], pts[s.vertices[-1]]))
    return tuple(out)


def _edge_between(edges, u, v):
    return edges.index((min(u, v), max(u, v)))


# queries ---------------------------------------------------------------

def segment_class(p: Partition, seg: MaximalSegment) -> SegmentClass:
    ends = sum(v in p.boundary_vertices for v in (seg.vertices[0], seg.vertices[-1]))
    return (SegmentClass.INTERIOR, SegmentClass.RAY, SegmentClass.CROSS_CUT)[ends]


def classify_segments(p: Partition):
    """Per-segment classes and the partition class."""
    classes = tuple(segment_class(p, s) for s in p.maximal_segments)
    if all(c is SegmentClass.CROSS_CUT for c in classes):
        kind = PartitionClass.CROSS_CUT
    elif all(c is not SegmentClass.INTERIOR for c in classes):
        kind = PartitionClass.QUASI_CROSS_CUT
    else:
        kind = PartitionClass.GENERAL
    return classes, kind


def locate_cell(p: Partition, pt):
    """Cell index containing pt, Location.ON_EDGE or Location.OUTSIDE."""
    pt = (Q(pt[0]), Q(pt[1]))
    for u, v in p.edges:
        if on_segment(pt, p.vertices[u], p.vertices[v]):
            return Location.ON_EDGE
    for c in range(len(p.cells)):
        if point_in_polygon(pt, p.cell_points(c)) > 0:
            return c
    return Location.OUTSIDE


def cells_containing(p: Partition, pt) -> list:
    """Every cell whose closure contains pt."""
    pt = (Q(pt[0]), Q(pt[1]))
    return [c for c in range(len(p.cells)) if point_in_polygon(pt, p.cell_points(c)) >= 0]


def dual_spanning_tree(p: Partition, source_cell: int = 0) -> list:
    """Breadth-first spanning tree of the cell adjacency graph.

    Neighbours are visited in cell-index order.  Returns TreeEdge records in
    visiting order; the root has no record.
    """
    if not 0 <= source_cell < len(p.cells):
        raise IndexError("source cell out of range")
    seen = {source_cell}
    queue = deque([source_cell])
    tree = []
    while queue:
        c = queue.popleft()
        for nb, e in p.cell_adjacency[c]:
            if nb not in seen:
                seen.add(nb)
                tree.append(TreeEdge(c, nb, e))
                queue.append(nb)
    return tree


def cell_interior_point(p: Partition, c: int):
    return interior_point(p.cell_points(c))


def is_convex(p: Partition) -> bool:
    loop = [p.vertices[v] for v in p.boundary_loop]
    n = len(loop)
    return all(cross(loop[i - 1], loop[i], loop[(i + 1) % n]) >= 0 for i in range(n))
