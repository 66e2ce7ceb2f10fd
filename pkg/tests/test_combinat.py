from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from qspieri import combinat as c
from qspieri.combinat import Composition, SignedPermutation

compositions_st = st.lists(st.integers(1, 4), max_size=5).map(Composition)


@pytest.mark.parametrize("beta,alpha,expected", [
    ((1, 1), (2,), True),
    ((2,), (1, 1), False),
    ((1, 2, 1), (3, 1), True),
    ((), (), True),
])
def test_refines(beta, alpha, expected):
    assert c.refines(Composition(beta), Composition(alpha)) is expected


def test_composition_rejects_zero_parts():
    with pytest.raises(ValueError):
        Composition((1, 0))


def test_composition_counts():
    for n in range(1, 8):
        assert len(c.compositions(n)) == 2 ** (n - 1)
    assert c.compositions(0) == [Composition()] or list(c.compositions(0)) == [Composition()]


@given(compositions_st)
def test_refinement_and_coarsening_counts(alpha):
    # alpha has 2^(w - l) refinements and 2^(l - 1) coarsenings
    if not alpha:
        return
    assert len(list(c.refinements(alpha))) == 2 ** (alpha.weight - len(alpha))
    assert len(list(c.coarsenings(alpha))) == 2 ** (len(alpha) - 1)
    assert all(c.refines(b, alpha) for b in c.refinements(alpha))
    assert all(c.refines(alpha, b) for b in c.coarsenings(alpha))


@pytest.mark.parametrize("beta,expected", [((3,), (3,)), ((1, 3, 2), (1, 1, 2, 1, 1)), ((), ())])
def test_star(beta, expected):
    assert c.star(Composition(beta)) == expected


@pytest.mark.parametrize("labels,expected", [((1, 2, 3), (3,)), ((1, 2, 1), (2, 1)), ((2, 1, 2), (1, 2))])
def test_descent_composition(labels, expected):
    assert c.descent_composition(labels) == expected


@pytest.mark.parametrize("labels,expected", [((-1, -1), (1, 1)), ((1, 1), (2,)), ((1, -2, -1), (1, 2))])
def test_modified_descent_composition(labels, expected):
    assert c.modified_descent_composition(labels) == expected


@pytest.mark.parametrize("labels,expected", [((1, 2, 1), (2, 1)), ((3, 2, 1), (3,)), ((1, 3, 2, 4, 1), (2, 2, 1))])
def test_peak_composition(labels, expected):
    assert c.peak_composition(labels) == expected


@given(st.lists(st.integers(1, 4), min_size=1, max_size=7))
def test_peak_composition_is_peak(labels):
    alpha = c.peak_composition(labels)
    assert alpha.weight == len(labels)
    assert c.is_peak_composition(alpha)


def test_peak_composition_counts_are_fibonacci():
    fib = [1, 1]
    for _ in range(8):
        fib.append(fib[-1] + fib[-2])
    for n in range(1, 9):
        assert len(c.peak_compositions(n)) == fib[n - 1]


def test_lengths_and_sign_changes():
    e = SignedPermutation((1, 2))
    assert c.bn_length(e) == 0
    assert c.bn_length(SignedPermutation((-1, 2))) == 1
    assert c.bn_length(SignedPermutation((-2, -1))) == 3
    assert c.sign_changes(e) == 0
    assert c.sign_changes(SignedPermutation((-1, 2))) == 1
    assert c.sign_changes(SignedPermutation((-2, -1))) == 2


@pytest.mark.parametrize("n", [2, 3])
def test_bn_length_matches_bfs(n):
    gens = [c.bn_simple(i, n) for i in range(n)]
    dist = c.bfs_lengths(gens, n)
    assert len(dist) == 2 ** n * [1, 1, 2, 6][n]
    for w, d in dist.items():
        assert c.bn_length(w) == d


def test_dn_length_matches_bfs():
    n = 3
    gens = [c.dn_simple(name, n) for name in ("1hat", 1, 2)]
    dist = c.bfs_lengths(gens, n)
    assert len(dist) == 24
    for w, d in dist.items():
        assert c.dn_length(w) == d


def test_partitions_count():
    assert [len(c.partitions(n)) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


def test_composition_from_set_roundtrip():
    for n in range(1, 7):
        for alpha in c.compositions(n):
            assert c.composition_from_set(alpha.descent_set(), n) == alpha
