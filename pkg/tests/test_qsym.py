from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qspieri import combinat, qsym
from qspieri.combinat import Composition
from qspieri.qsym import F, M, theta

comp_st = st.lists(st.integers(1, 3), min_size=0, max_size=3).map(Composition)


def elem_st(max_terms=3):
    return st.lists(st.tuples(comp_st, st.integers(-3, 3)), max_size=max_terms).map(
        lambda ts: sum((M(*a).scale(c) for a, c in ts), qsym.zero())
    )


def test_conversion_examples():
    assert F(2).to_M() == M(2) + M(1, 1)
    assert F(1).to_M() == M(1)
    assert M(2).to_F() == F(2) - F(1, 1)


@given(comp_st)
def test_f_m_roundtrip(alpha):
    x = F(*alpha)
    assert x.to_M().to_F() == x
    assert M(*alpha).to_F().to_M() == M(*alpha)


def test_theta_examples():
    assert theta(1) == M(1).scale(2)
    assert theta(2) == M(2).scale(2) + M(1, 1).scale(4)
    assert theta(2, 1) == M(2, 1).scale(4) + M(1, 2).scale(4) + M(1, 1, 1).scale(8)


def test_product_examples():
    assert M(1) * M(1) == M(1, 1).scale(2) + M(2)
    assert qsym.one() * M(2, 1) == M(2, 1)
    assert M(1) * M(2) == M(1, 2) + M(2, 1) + M(3)


def test_coproduct_examples():
    assert qsym.coproduct(M(2, 1)) == {((), (2, 1)): 1, ((2,), (1,)): 1, ((2, 1), ()): 1}
    assert qsym.coproduct(qsym.one()) == {((), ()): 1}
    assert qsym.coproduct(M(1, 1)) == {((), (1, 1)): 1, ((1,), (1,)): 1, ((1, 1), ()): 1}


def test_antipode_examples():
    assert qsym.antipode(qsym.one()) == qsym.one()
    assert qsym.antipode(M(1)) == M(1).scale(-1)
    assert qsym.antipode(M(2)) == M(2).scale(-1)


def _mu(t: dict) -> qsym.QSymElem:
    out = qsym.zero()
    for (a, b), c in t.items():
        out = out + (M(*a) * M(*b)).scale(c)
    return out


@pytest.mark.parametrize("n", range(0, 6))
def test_antipode_axiom(n):
    # mu (S x 1) Delta = mu (1 x S) Delta = unit o counit, on every M_alpha of weight n
    for alpha in combinat.compositions(n):
        left = qsym.zero()
        right = qsym.zero()
        for (a, b), c in qsym.coproduct(M(*alpha)).items():
            left = left + (qsym.antipode(M(*a)) * M(*b)).scale(c)
            right = right + (M(*a) * qsym.antipode(M(*b))).scale(c)
        expect = qsym.one() if n == 0 else qsym.zero()
        assert left == expect and right == expect


@pytest.mark.parametrize("n", range(1, 6))
def test_antipode_closed_form(n):
    # S(M_alpha) = (-1)^l(alpha) sum over coarsenings beta of reverse(alpha) of M_beta
    for alpha in combinat.compositions(n):
        rev = Composition(tuple(reversed(alpha)))
        expect = sum((M(*b) for b in combinat.coarsenings(rev)), qsym.zero()).scale((-1) ** len(alpha))
        assert qsym.antipode(M(*alpha)) == expect


@settings(max_examples=40, deadline=None)
@given(elem_st(), elem_st(), elem_st())
def test_product_associative_commutative(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x


@settings(max_examples=40, deadline=None)
@given(elem_st(), elem_st())
def test_coproduct_multiplicative(x, y):
    lhs = qsym.coproduct(x * y)
    dx, dy = qsym.coproduct(x), qsym.coproduct(y)
    rhs: dict = {}
    for (a, b), c in dx.items():
        for (a2, b2), c2 in dy.items():
            pa = M(*a) * M(*a2)
            pb = M(*b) * M(*b2)
            for ka, va in pa.to_M()._coeffs.items():
                for kb, vb in pb.to_M()._coeffs.items():
                    rhs[(ka, kb)] = rhs.get((ka, kb), 0) + c * c2 * va * vb
    rhs = {k: v for k, v in rhs.items() if v}
    assert {k: v for k, v in lhs.items() if v} == rhs


@given(comp_st)
def test_coproduct_coassociative(alpha):
    # deconcatenation: both iterated coproducts list each splitting of alpha into three pieces once
    x = M(*alpha)
    left = {}
    for (a, b), c in qsym.coproduct(x).items():
        for (a1, a2), c1 in qsym.coproduct(M(*a)).items():
            left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * c1
    right = {}
    for (a, b), c in qsym.coproduct(x).items():
        for (b1, b2), c1 in qsym.coproduct(M(*b)).items():
            right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * c1
    assert left == right


def test_psi_phi_examples():
    assert qsym.psi(M(1)) == M(2) + M(1, 1).scale(2)
    assert qsym.phi(M(2)) == M(2, 1).scale(2)
    assert qsym.psi(F(1, 1)) == F(1, 2) + F(1, 1, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_psi_phi_on_theta(n):
    for alpha in combinat.peak_compositions(n):
        plus = Composition(alpha[:-1] + (alpha[-1] + 1,))
        assert qsym.psi(theta(*alpha)) == theta(*plus)
        if n > 1:
            assert qsym.phi(theta(*alpha)) == theta(*(alpha + (1,)))
    assert qsym.phi(theta(1)) == theta(2)


def test_peak_membership():
    assert qsym.in_peak_dual(theta(2, 1))
    assert not qsym.in_peak_dual(M(2))
    assert qsym.in_shifted_dual(theta(3, 1))


def test_peak_expansion_roundtrip():
    x = theta(2, 1).scale(3) - theta(3)
    exp = qsym.peak_expansion(x)
    assert exp is not None
    back = sum((theta(*a).scale(c) for a, c in exp.items()), qsym.zero())
    assert back == x
    assert qsym.peak_expansion(M(2)) is None


@given(elem_st())
def test_parse_roundtrip(x):
    assert qsym.parse(str(x)) == x
    assert qsym.parse(str(x.to_F())) == x


def test_parse_theta_and_errors():
    assert qsym.parse("1/4*theta(2,1)") == theta(2, 1).scale(Fraction(1, 4))
    assert qsym.parse("0") == qsym.zero()
    with pytest.raises(ValueError):
        qsym.parse("M(1,0)")
