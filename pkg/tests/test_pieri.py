from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qspieri import catalog, pieri, qsym
from qspieri.poset import Interval, LabelledReseau, double, interval_product
from qspieri.qsym import F, M, theta
from qspieri.verify import random_ranked_poset


def test_apply_h_examples():
    y = catalog.young_lattice_upto(3)
    assert pieri.Descent(y).apply_h({"()": 1}, 2) == {"(2)": 1}
    b2 = catalog.boolean_lattice(2)
    assert pieri.RankSelection(b2).apply_h({"{}": 1}, 1) == {"{1}": 1, "{2}": 1}


def test_path_count_is_multiplicative():
    g = LabelledReseau(["a", "b", "c"], [("a", "b", 1), ("a", "b", 2), ("b", "c", 1)])
    f = pieri.PathCount(g)
    for a in range(1, 3):
        for b in range(1, 3):
            v = {"a": 1}
            assert f.apply_h(f.apply_h(v, a), b) == f.apply_h(v, a + b)


def test_apply_h_rejects_bad_degree():
    f = pieri.RankSelection(catalog.boolean_lattice(2))
    with pytest.raises(ValueError):
        f.apply_h({"{}": 1}, 0)


def test_kfunction_examples():
    y = catalog.young_lattice_upto(3)
    assert pieri.kfunction(pieri.Descent(y), "()", "(2,1)") == F(2, 1) + F(1, 2)
    b3 = catalog.boolean_lattice(3)
    assert pieri.kfunction(pieri.RankSelection(b3), "{}", "{1,2,3}") == (
        M(3) + M(1, 2).scale(3) + M(2, 1).scale(3) + M(1, 1, 1).scale(6))
    s3 = catalog.weak_order_Sn(3)
    assert pieri.kfunction(pieri.Descent(s3), "(1,2,3)", "(3,2,1)") == F(2, 1) + F(1, 2)
    b2 = catalog.boolean_lattice(2)
    assert pieri.kfunction(pieri.RankSelection(b2), "{}", "{1,2}") == M(2) + M(1, 1).scale(2)
    assert pieri.kfunction(pieri.RankSelection(b2), "{1}", "{1}") == qsym.one()
    assert pieri.kfunction(pieri.RankSelection(b2), "{1}", "{2}") == qsym.zero()


def test_peak_kfunction_examples():
    ch = catalog.chain(4, (1, 2, 1))
    assert pieri.peak_kfunction(ch, "0", "3") == theta(2, 1)
    assert pieri.kfunction(pieri.ModifiedDescent(double(ch)), "0", "3") == theta(2, 1)
    assert pieri.peak_kfunction(catalog.chain(2, (5,)), "0", "1") == theta(1)
    assert pieri.peak_kfunction(ch, "1", "1") == qsym.one()


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(["descent", "modified_descent", "rank_selection"]))
def test_chain_enumeration_matches_operator_evaluation(seed, kind):
    rng = random.Random(seed)
    g = random_ranked_poset(rng, max_rank=4, labels=(-2, -1, 1, 2) if kind == "modified_descent" else (1, 2, 3))
    f = pieri.make_family(g, kind)
    for x, y, r in g.intervals():
        k = pieri.kfunction(f, x, y, r)
        if kind == "rank_selection":
            # the M_alpha coefficient counts chains through the ranks selected by alpha
            for alpha, c in k.to_M()._coeffs.items():
                cuts = [sum(alpha[:i]) for i in range(len(alpha) + 1)]
                assert c == _selected_chains(g, x, y, cuts)
        else:
            assert k == pieri.kfunction_chains(f, x, y, r)


def _selected_chains(g, x, y, cuts):
    # count multichains x = v_0 < v_1 < ... < v_l = y with v_i at rank offset cuts[i]
    layer = {x: 1}
    for lo, hi in zip(cuts, cuts[1:]):
        nxt: dict = {}
        for v, c in layer.items():
            for w in g.vertices:
                if g.path_count(v, w, hi - lo):
                    nxt[w] = nxt.get(w, 0) + c
        layer = nxt
    return layer.get(y, 0)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_peak_enumerator_matches_doubled_descent(seed):
    g = random_ranked_poset(random.Random(seed), max_rank=4)
    f = pieri.ModifiedDescent(double(g))
    for x, y, r in g.intervals():
        k = pieri.kfunction(f, x, y, r)
        assert k == pieri.peak_kfunction(g, x, y, r)
        assert qsym.in_peak_dual(k)


def test_tensor_family_matches_factorwise():
    b2 = catalog.boolean_lattice(2)
    s3 = catalog.weak_order_Sn(3)
    a = Interval(b2, "{}", "{1,2}", 2)
    b = Interval(s3, "(1,2,3)", "(2,3,1)", 2)
    ip = interval_product(a, b)
    fam = {b2: pieri.RankSelection(b2), s3: pieri.RankSelection(s3)}
    got = pieri.kfunction_of_product(ip, lambda g: fam[g], method="tensor")
    assert got == pieri.kfunction_of_product(ip, lambda g: fam[g])
    assert got == pieri.kfunction(fam[b2], a.x, a.y, 2) * pieri.kfunction(fam[s3], b.x, b.y, 2)


def test_symmetry_examples():
    assert pieri.is_symmetric(pieri.Descent(catalog.young_lattice_upto(4)), 4)
    q = catalog.quantum_poset(2, 2)
    low = [v for v in q.vertices if q.rank[v] <= 5]
    assert pieri.is_symmetric(pieri.Quantum(q, 2, 2), 3, low)


def test_labelled_chain_is_not_symmetric():
    # search label words on the 4-element chain for ones whose descent operators do not commute
    found = [w for w in itertools.product((1, 2, 3), repeat=3)
             if not pieri.is_symmetric(pieri.Descent(catalog.chain(4, w)), 3)]
    assert (2, 1, 2) in found
    assert (1, 1, 1) not in found and (3, 2, 1) not in found


def test_eulerian_examples():
    assert pieri.is_eulerian(pieri.RankSelection(catalog.boolean_lattice(3)), None, 3)
    assert not pieri.is_eulerian(pieri.RankSelection(catalog.chain(3)), None, 2)
    rng = random.Random(5)
    for _ in range(5):
        g = double(random_ranked_poset(rng, max_rank=4))
        assert pieri.is_eulerian(pieri.ModifiedDescent(g), None, 4)


def test_halved_bruhat_family():
    g = double(catalog.zero_bruhat_Bn(2))
    f = pieri.Halved(pieri.ModifiedDescent(g), Fraction(1, 2))
    assert pieri.is_eulerian(f, 2, 4)
    assert not pieri.is_eulerian(f, None, 4)
    assert pieri.is_symmetric(f, 4)


def test_quantum_literal_rule_fails_commutation():
    # expected negative: with the span bound m+p the operators on C_{2,2} do not commute
    q = catalog.quantum_poset(2, 2)
    low = [v for v in q.vertices if q.rank[v] <= 7]
    assert pieri.commutation_failures(pieri.Quantum(q, 2, 2, "literal"), 4, low)
    assert not pieri.commutation_failures(pieri.Quantum(q, 2, 2), 4, low)


def test_quantum_rejects_large_generator():
    q = catalog.quantum_poset(2, 2)
    with pytest.raises(ValueError):
        pieri.Quantum(q, 2, 2).apply_h({q.vertices[0]: 1}, 3)


def test_make_family_unknown_kind():
    with pytest.raises(ValueError):
        pieri.make_family(catalog.boolean_lattice(1), "nope")
