import random
from fractions import Fraction

import pytest

from eeespline.errors import NotARefinement, OutOfDomain
from eeespline.exact import rank
from eeespline.spline1d import (KnotVector, bspline_eval, coarse_basis_1d, eee_1d,
                                eval_combination, insertion_matrix)

half, quarter = Fraction(1, 2), Fraction(1, 4)


def test_knot_multiplicities():
    kv = KnotVector.of([0, half, 1], 3, 1)
    assert kv.knots == (0, 0, 0, 0, half, half, 1, 1, 1, 1)
    assert len(kv) == kv.dimension == 6


def test_degree_zero():
    kv = KnotVector.of([0, 1], 0, 0)
    assert bspline_eval(kv, 0, half) == 1


def test_quadratic_values_by_hand():
    # knots 0,0,0,1/2,1,1,1; at x=1/2 the middle two B-splines are 1/2 each
    kv = KnotVector.of([0, half, 1], 2, 1)
    assert [bspline_eval(kv, i, half) for i in range(4)] == [0, half, half, 0]
    # B_1 on [0,1/2) is 4x - 6x^2 (hand recursion), so B_1(1/4) = 5/8
    assert bspline_eval(kv, 1, quarter) == Fraction(5, 8)
    assert bspline_eval(kv, 1, quarter, r=1) == 1


def test_one_sided_derivatives():
    kv = KnotVector.of([0, half, 1], 2, 1)
    right = bspline_eval(kv, 1, half, r=2, side="right")
    left = bspline_eval(kv, 1, half, r=2, side="left")
    assert right != left


def test_out_of_domain():
    kv = KnotVector.of([0, 1], 2, 1)
    with pytest.raises(OutOfDomain):
        bspline_eval(kv, 0, 2)


def test_partition_of_unity(rng):
    for _ in range(10):
        d = rng.randint(0, 4)
        mu = rng.randint(0, d)
        bp = sorted({Fraction(rng.randint(1, 49), 50) for _ in range(rng.randint(0, 4))} | {0, 1})
        kv = KnotVector.of(bp, d, mu)
        x = Fraction(rng.randint(0, 97), 97)
        assert sum(bspline_eval(kv, i, x) for i in range(len(kv))) == 1


def test_eee_small_example():
    coarse = KnotVector.of([0, half, 1], 2, 1)
    fine = KnotVector.of([0, quarter, half, 1], 2, 1)
    m = eee_1d(fine, coarse)
    assert (m.rows, m.cols) == (1, 5)
    assert len(coarse_basis_1d(fine, coarse)) == 4


def test_row_count_cubic():
    coarse = KnotVector.of([0, 1], 3, 1)
    fine = KnotVector.of([0, half, 1], 3, 1)
    assert eee_1d(fine, coarse).rows == 2


def test_identical_knots():
    kv = KnotVector.of([0, half, 1], 2, 0)
    assert eee_1d(kv, kv).rows == 0
    vecs = coarse_basis_1d(kv, kv)
    assert [list(v) for v in vecs] == [[int(i == j) for j in range(len(kv))] for i in range(len(kv))]


def test_not_a_refinement():
    a = KnotVector.of([0, half, 1], 2, 1)
    b = KnotVector.of([0, quarter, 1], 2, 1)
    with pytest.raises(NotARefinement):
        eee_1d(b, a)
    with pytest.raises(NotARefinement):
        eee_1d(KnotVector.of([0, half, 1], 2, 0), a)


def test_synthesized_functions_match_insertion():
    coarse = KnotVector.of([0, half, 1], 3, 1)
    fine = KnotVector.of([0, quarter, half, Fraction(3, 4), 1], 3, 1)
    A = insertion_matrix(coarse, fine)
    xs = [Fraction(k, 40) for k in range(41)]
    for j in range(len(coarse)):
        col = A.column(j)
        assert [eval_combination(fine, col, x) for x in xs] == [bspline_eval(coarse, j, x) for x in xs]


def test_jumps_vanish_only_at_removed_knots():
    coarse = KnotVector.of([0, half, 1], 2, 0)
    fine = KnotVector.of([0, quarter, half, 1], 2, 0)
    for v in coarse_basis_1d(fine, coarse):
        for r in (1, 2):
            j = eval_combination(fine, v, quarter, r, "right") - eval_combination(fine, v, quarter, r, "left")
            assert j == 0
    jumps = [eval_combination(fine, v, half, 1, "right") - eval_combination(fine, v, half, 1, "left")
             for v in coarse_basis_1d(fine, coarse)]
    assert any(jumps)
