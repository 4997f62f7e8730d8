import random
from fractions import Fraction

import pytest

from conftest import A, B, C, D, E, F
from eeespline.errors import CrossingSegments, NotSimplyConnected, OpenBoundary
from eeespline.fixtures import NAMES, load_fixture
from eeespline.partition import (Location, PartitionClass, SegmentClass, build_partition,
                                 cells_containing, classify_segments, dual_spanning_tree,
                                 is_convex, locate_cell)
from generators import random_cross_cut, random_quasi_cross_cut, random_triangulation

NAMES_BY_INDEX = "ABCDEF"


def cell_names(p):
    return sorted("".join(sorted(NAMES_BY_INDEX[v] for v in c)) for c in p.cells)


def test_morgan_scott_cells(ms_sym):
    assert cell_names(ms_sym) == ["ABD", "ACE", "ADE", "BCF", "BDF", "CEF", "DEF"]
    assert ms_sym.interior_vertices == (D, E, F)
    assert len(ms_sym.interior_edges) == 9


def test_morgan_scott_is_general(ms_sym):
    classes, kind = classify_segments(ms_sym)
    assert kind is PartitionClass.GENERAL
    inner = {frozenset(s.vertices) for s, c in zip(ms_sym.maximal_segments, classes)
             if c is SegmentClass.INTERIOR}
    assert inner == {frozenset((D, E)), frozenset((E, F)), frozenset((D, F))}


def test_symmetric_fixture_is_concurrent(ms_sym, ms_gen):
    """AF, BE, CD meet in one point only on the symmetric fixture."""
    from eeespline.poly import LineForm

    def meet(p):
        V = p.vertices
        lines = [LineForm.through(V[A], V[F]), LineForm.through(V[B], V[E]), LineForm.through(V[C], V[D])]
        l1, l2, l3 = lines
        det = l1.a * l2.b - l1.b * l2.a
        x = Fraction(-l1.c * l2.b + l1.b * l2.c, det)
        y = Fraction(-l1.a * l2.c + l1.c * l2.a, det)
        return l3(x, y) == 0

    assert meet(ms_sym)
    assert not meet(ms_gen)


def test_crossing_segments_rejected():
    pts = [(0, 0), (2, 0), (2, 2), (0, 2)]
    segs = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]
    with pytest.raises(CrossingSegments):
        build_partition(pts, segs)
    p = build_partition(pts, segs, allow_crossings=True)
    assert len(p.cells) == 4 and (1, 1) in p.vertices


def test_dangling_edge_rejected():
    pts = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]
    with pytest.raises(OpenBoundary):
        build_partition(pts, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def test_hole_rejected():
    pts = [(0, 0), (6, 0), (6, 6), (0, 6), (2, 2), (4, 2), (4, 4), (2, 4)]
    segs = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]
    with pytest.raises(NotSimplyConnected):
        build_partition(pts, segs)


def test_t_junction_splits_edge():
    pts = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 0), (1, 1)]
    p = build_partition(pts, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (0, 2)])
    assert len(p.cells) == 3
    _, kind = classify_segments(p)
    assert kind is PartitionClass.QUASI_CROSS_CUT


def test_locate(ms_sym):
    assert locate_cell(ms_sym, (0, 5)) in range(7)
    assert locate_cell(ms_sym, (9, 9)) is Location.OUTSIDE
    assert locate_cell(ms_sym, (0, 6)) is Location.ON_EDGE
    assert len(cells_containing(ms_sym, ms_sym.vertices[D])) == 4


def test_crossing_sign_sums_to_zero_on_straight_lines():
    p = load_fixture("square_cross")
    v = p.interior_vertices[0]
    signs = [p.crossing_sign(e, v) for e in p.vertex_edges[v]]
    assert sorted(signs) == [-1, -1, 1, 1]


@pytest.mark.parametrize("name", NAMES)
def test_fixtures_are_consistent(name):
    p = load_fixture(name)
    assert is_convex(p)
    assert sum(abs(_area(p, c)) for c in range(len(p.cells))) == p.area()
    tree = dual_spanning_tree(p)
    assert len(tree) == len(p.cells) - 1
    for e in p.interior_edges:
        assert p.positive_cell(e) != p.negative_cell(e)


def _area(p, c):
    from eeespline.geometry import signed_area
    return signed_area(p.cell_points(c))


@pytest.mark.parametrize("gen,kinds", [
    (random_cross_cut, {PartitionClass.CROSS_CUT}),
    (random_quasi_cross_cut, {PartitionClass.QUASI_CROSS_CUT, PartitionClass.CROSS_CUT}),
    (random_triangulation, {PartitionClass.GENERAL}),
])
def test_generators_produce_expected_class(gen, kinds):
    rng = random.Random(7)
    for _ in range(5):
        p = gen(rng)
        assert classify_segments(p)[1] in kinds
        assert sum(_area(p, c) for c in range(len(p.cells))) == p.area()
