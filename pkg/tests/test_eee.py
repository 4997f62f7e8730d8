import random

import pytest

from eeespline.conformality import conformality_basis, dimension_oracle, qcc_basis
from eeespline.eee import (assemble_eee, assemble_eee_directional, dimension_via_eee,
                           run_pipeline, synthesize_basis)
from eeespline.errors import NotABasis, NonConvexDomain
from eeespline.exact import rank, same_row_space
from eeespline.extend import extend
from eeespline.fixtures import NAMES, load_fixture
from eeespline.partition import build_partition
from generators import random_triangulation


def test_ms_matrix_shape(ms_sym):
    ep = extend(ms_sym)
    b = qcc_basis(ep, 2, 1)
    m = assemble_eee(ep, b)
    assert m.matrix.cols == 9
    assert m.nonzero_columns() == [6, 7, 8]
    assert m.rank == 2
    assert {lbl[0] for lbl in m.row_labels} == set(ep.added_subedges)


def test_ms_generic_rank(ms_gen):
    ep = extend(ms_gen)
    assert assemble_eee(ep, qcc_basis(ep, 2, 1)).rank == 3


@pytest.mark.parametrize("fixture,expected", [("ms_symmetric", 7), ("ms_generic", 6)])
@pytest.mark.parametrize("strategy", ["qcc", "crosscut"])
def test_dimension_via_eee(fixture, expected, strategy):
    assert dimension_via_eee(load_fixture(fixture), 2, 1, strategy) == expected


def test_pipeline_symmetric(ms_sym):
    b = run_pipeline(ms_sym, 2, 1)
    assert len(b) == 7
    assert sum(not s.is_global_polynomial() for s in b) == 1
    assert all(s.partition is ms_sym and s.is_valid() for s in b)
    assert b.is_independent()


def test_pipeline_generic_is_quadratics(ms_gen):
    b = run_pipeline(ms_gen, 2, 1)
    assert len(b) == 6 and all(s.is_global_polynomial() for s in b)


def test_no_added_edges_keeps_basis():
    p = load_fixture("square_cross")
    ep = extend(p)
    basis = qcc_basis(ep, 2, 1)
    m = assemble_eee(ep, basis)
    assert m.matrix.rows == 0
    out = synthesize_basis(ep, basis, m)
    assert [s.polys for s in out] == [s.polys for s in basis]


def test_not_a_basis_detected(ms_sym):
    ep = extend(ms_sym)
    b = qcc_basis(ep, 2, 1)
    b.functions.pop()
    with pytest.raises(NotABasis):
        assemble_eee(ep, b)
    b2 = qcc_basis(ep, 2, 1)
    b2.functions[-1] = b2.functions[0]
    with pytest.raises(NotABasis):
        assemble_eee(ep, b2)
    wrong = conformality_basis(ms_sym, 2, 1)
    with pytest.raises(NotABasis):
        assemble_eee(ep, wrong)


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("d,mu", [(1, 0), (2, 1), (3, 1)])
def test_pipeline_size_matches_oracle(name, d, mu):
    p = load_fixture(name)
    assert len(run_pipeline(p, d, mu)) == dimension_oracle(p, d, mu)


def test_row_forms_agree_on_random_partitions():
    rng = random.Random(5)
    for _ in range(3):
        p = random_triangulation(rng)
        ep = extend(p)
        b = qcc_basis(ep, 3, 1)
        assert same_row_space(assemble_eee(ep, b).matrix, assemble_eee_directional(ep, b).matrix)


def test_affine_change_keeps_rank(ms_gen):
    """Rational affine maps change M but not its rank."""
    pts = [(2 * x + y + 1, x - 3 * y) for x, y in ms_gen.vertices]
    moved = build_partition(pts, ms_gen.edges)
    ep1 = extend(ms_gen)
    m1 = assemble_eee(ep1, qcc_basis(ep1, 2, 1))
    ep2 = extend(moved)
    m2 = assemble_eee(ep2, qcc_basis(ep2, 2, 1))
    assert m1.rank == m2.rank == 3


def test_nonconvex_rejected():
    pts = [(0, 0), (4, 0), (4, 4), (2, 1), (0, 4), (2, 0)]
    p = build_partition(pts, [(0, 5), (5, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 3)])
    with pytest.raises(NonConvexDomain):
        dimension_via_eee(p, 2, 1)
