from __future__ import annotations

import pytest

from qspieri import combinat, nc, qsym
from qspieri.duality import pair
from qspieri.nc import R, S
from qspieri.qsym import F, M, theta


def test_pair_examples():
    assert pair(S(2, 1), M(2, 1)) == 1
    assert pair(S(2, 1), M(1, 2)) == 0
    assert pair(nc.euler_element(1), theta(2)) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_dual_bases(n):
    comps = combinat.compositions(n)
    for a in comps:
        for b in comps:
            assert pair(S(*a), M(*b)) == (a == b)
            assert pair(R(*a), F(*b)) == (a == b)


def test_theta_kills_euler_ideal_in_low_degree():
    for n in range(2, 6):
        for gen in nc.ideal_degree_basis(nc.euler_ideal_generators(n), n):
            for alpha in combinat.peak_compositions(n):
                assert pair(gen, theta(*alpha)) == 0


def test_pairing_is_bilinear():
    x = S(1, 2).scale(3) - S(3)
    y = M(1, 2) + M(3).scale(5)
    assert pair(x, y) == 3 - 5
    assert pair(x, qsym.zero()) == 0
