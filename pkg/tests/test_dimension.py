import random
from math import comb

import pytest

from eeespline.conformality import dimension_oracle
from eeespline.dimension import (dim_cross_cut, dim_quasi_cross_cut, dimension_report, k_d_mu)
from eeespline.errors import DegreeSmoothnessOrder, NotCrossCut, NotQuasiCrossCut
from eeespline.extend import extend_to_qcc
from eeespline.fixtures import load_fixture
from generators import random_cross_cut, random_quasi_cross_cut


def test_k_values():
    assert k_d_mu(2, 1, 4) == 1
    assert k_d_mu(2, 1, 3) == 0
    assert [k_d_mu(1, 0, n) for n in range(1, 6)] == [0, 0, 1, 2, 3]
    assert k_d_mu(3, 3, 7) == 0
    with pytest.raises(DegreeSmoothnessOrder):
        k_d_mu(1, 2, 3)


def test_single_cell_is_polynomial_space():
    p = load_fixture("triangle")
    for d in range(5):
        assert dim_cross_cut(p, d, 0) == comb(d + 2, 2)


def test_square_cross():
    p = load_fixture("square_cross")
    assert dim_cross_cut(p, 2, 1) == 8
    assert dim_cross_cut(p, 1, 0) == 5


def test_ms_extension(ms_sym):
    q = extend_to_qcc(ms_sym).extended
    assert dim_quasi_cross_cut(q, 2, 1) == 9
    with pytest.raises(NotCrossCut):
        dim_cross_cut(q, 2, 1)


def test_general_rejected(ms_sym):
    with pytest.raises(NotQuasiCrossCut):
        dim_quasi_cross_cut(ms_sym, 2, 1)


def test_report(ms_sym):
    r = dimension_report(ms_sym, 2, 1, with_eee=True)
    assert r.formula is None and r.oracle == r.eee == 7 and r.agree


@pytest.mark.parametrize("gen", [random_cross_cut, random_quasi_cross_cut])
def test_formula_matches_oracle_sample(gen):
    rng = random.Random(11)
    for _ in range(4):
        p = gen(rng)
        for d, mu in [(2, 0), (3, 1), (4, 2)]:
            assert dim_quasi_cross_cut(p, d, mu) == dimension_oracle(p, d, mu)
