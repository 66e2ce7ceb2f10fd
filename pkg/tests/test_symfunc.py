from __future__ import annotations

import pytest

from qspieri import catalog, pieri, symfunc
from qspieri.combinat import partitions
from qspieri.qsym import F, M
from qspieri.symfunc import SymExpansion


def test_try_symmetric_examples():
    assert symfunc.try_symmetric(M(2) + M(1, 1).scale(2)) == SymExpansion("m", {(2,): 1, (1, 1): 2})
    assert symfunc.try_symmetric(F(2, 1)) is None
    assert symfunc.try_symmetric(F(2, 1) + F(1, 2)) == SymExpansion("m", {(2, 1): 1, (1, 1, 1): 2})


def test_m_to_schur_examples():
    assert symfunc.m_to_schur(SymExpansion("m", {(1, 1): 1})) == SymExpansion("s", {(1, 1): 1})
    assert symfunc.m_to_schur(SymExpansion("m", {(2,): 1})) == SymExpansion("s", {(2,): 1, (1, 1): -1})
    assert symfunc.m_to_schur(SymExpansion("m", {(2, 1): 1, (1, 1, 1): 2})) == SymExpansion("s", {(2, 1): 1})
    assert symfunc.m_to_schur(SymExpansion("m", {})) == SymExpansion("s", {})


@pytest.mark.parametrize("n", range(1, 6))
def test_schur_m_roundtrip(n):
    for lam in partitions(n):
        s = SymExpansion("s", {lam: 1})
        assert symfunc.m_to_schur(symfunc.schur_to_m(s)) == s


def test_kostka_small_values():
    assert symfunc.kostka((2, 1), (1, 1, 1)) == 2
    assert symfunc.kostka((3,), (1, 1, 1)) == 1
    assert symfunc.kostka((1, 1, 1), (2, 1)) == 0


def test_skew_schur_oracle_examples():
    assert symfunc.skew_schur_oracle((2, 1), ()) == SymExpansion("m", {(2, 1): 1, (1, 1, 1): 2})
    assert len(symfunc.semistandard_tableaux((2, 1), 3)) == 8
    assert symfunc.skew_schur_oracle((2, 1), (2, 1)) == SymExpansion("m", {(): 1})
    assert symfunc.skew_schur_oracle((1,), ()) == SymExpansion("m", {(1,): 1})
    with pytest.raises(ValueError):
        symfunc.skew_schur_oracle((1,), (2,))


def test_young_intervals_are_skew_schur():
    y = catalog.young_lattice_upto(4)
    f = pieri.Descent(y)
    for x, top, r in y.intervals():
        lam = tuple(int(t) for t in top.strip("()").split(",") if t)
        mu = tuple(int(t) for t in x.strip("()").split(",") if t)
        got = symfunc.try_symmetric(pieri.kfunction(f, x, top, r))
        assert got == symfunc.skew_schur_oracle(lam, mu)


def test_schur_qsym_is_fundamental_sum():
    # s_(2,1) is F_(2,1) + F_(1,2)
    assert symfunc.schur_qsym((2, 1)) == F(2, 1) + F(1, 2)


def test_str_rendering():
    assert str(SymExpansion("s", {(2,): 1, (1, 1): -1})) == "1*s(2) - 1*s(1,1)"
