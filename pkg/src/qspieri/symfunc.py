"""Recognizing symmetric quasi-symmetric functions and expanding them in Schur functions.

Schur functions enter only through semistandard tableau enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from ._linear import add_into, render
from .combinat import Composition, Partition, partitions
from .qsym import QSymElem


@dataclass(frozen=True)
class SymExpansion:
    """A symmetric function written in the monomial (m) or Schur (s) basis."""

    basis: str
    coeffs: Mapping = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("m", "s"):
            raise ValueError("basis must be 'm' or 's'")
        clean = {Partition(k): Fraction(v) for k, v in self.coeffs.items() if v}
        object.__setattr__(self, "coeffs", clean)

    def items(self) -> list:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def __str__(self) -> str:
        return render(self.items(), self.basis)

    def __eq__(self, other):
        if not isinstance(other, SymExpansion):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, frozenset(self.coeffs.items())))

    def to_qsym(self) -> QSymElem:
        out = QSymElem._raw({}, "M")
        for lam, c in self.coeffs.items():
            term = monomial_symmetric(lam) if self.basis == "m" else schur_qsym(lam)
            out = out + term.scale(c)
        return out


def _class_representatives(alpha: Composition) -> Partition:
    return Partition(sorted(alpha, reverse=True))


def try_symmetric(x: QSymElem) -> SymExpansion | None:
    """The m-expansion of x, or None when x is not symmetric."""
    coeffs = x.to_M()._coeffs
    out: dict = {}
    for alpha, c in coeffs.items():
        lam = _class_representatives(alpha)
        if lam in out:
            continue
        for beta in set(itertools.permutations(alpha)):
            if coeffs.get(Composition._trusted(beta), 0) != c:
                return None
        out[lam] = c
    return SymExpansion("m", out)


def is_symmetric_function(x: QSymElem) -> bool:
    return try_symmetric(x) is not None


def monomial_symmetric(parts: Sequence[int]) -> QSymElem:
    """m_lambda = sum of M_alpha over the distinct rearrangements alpha of lambda."""
    lam = Partition(sorted(parts, reverse=True))
    return QSymElem._raw(
        {Composition._trusted(a): Fraction(1) for a in set(itertools.permutations(lam))}, "M"
    )


# -- tableaux ---------------------------------------------------------------------


def semistandard_tableaux(shape: Sequence[int], max_entry: int, inner: Sequence[int] = ()) -> list:
    """All semistandard fillings of the skew shape shape/inner with entries in 1..max_entry.

    A tableau is a tuple of rows; each row lists the entries of its boxes left to right.
    """
    shape = tuple(shape)
    inner = tuple(inner) + (0,) * (len(shape) - len(inner))
    cells = [(i, j) for i in range(len(shape)) for j in range(inner[i], shape[i])]
    filling: dict = {}
    out = []

    def rec(k: int) -> None:
        if k == len(cells):
            out.append(tuple(tuple(filling[(i, j)] for j in range(inner[i], shape[i])) for i in range(len(shape))))
            return
        i, j = cells[k]
        lo = 1
        if j > inner[i]:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0 and j < shape[i - 1] and j >= inner[i - 1]:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, max_entry + 1):
            filling[(i, j)] = v
            rec(k + 1)
        filling.pop((i, j), None)

    rec(0)
    return out


def _content(tableau, n: int) -> tuple:
    c = [0] * n
    for row in tableau:
        for v in row:
            c[v - 1] += 1
    return tuple(c)


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of SSYT of shape lam and content mu, by enumeration."""
    if lam.weight != mu.weight:
        return 0
    n = len(mu)
    target = tuple(mu)
    return sum(1 for t in semistandard_tableaux(lam, n) if _content(t, n) == target)


def schur_qsym(parts: Sequence[int]) -> QSymElem:
    """s_lambda = sum over mu of K_{lambda, mu} m_mu."""
    lam = Partition(parts)
    out = QSymElem._raw({}, "M")
    for mu in partitions(lam.weight):
        k = kostka(lam, mu)
        if k:
            out = out + monomial_symmetric(mu).scale(k)
    return out


def m_to_schur(e: SymExpansion) -> SymExpansion:
    """Invert the unitriangular Kostka matrix: peel off the dominance-largest term repeatedly."""
    if e.basis != "m":
        raise ValueError("m_to_schur expects an m-expansion")
    rest = dict(e.coeffs)
    out: dict = {}
    while rest:
        # partitions in reverse lexicographic order refine dominance; the top one leads
        lam = max(rest, key=lambda p: (p.weight, tuple(p)))
        c = rest[lam]
        out[lam] = c
        for mu in partitions(lam.weight):
            k = kostka(lam, mu)
            if k:
                add_into(rest, mu, -c * k)
    return SymExpansion("s", out)


def schur_to_m(e: SymExpansion) -> SymExpansion:
    if e.basis != "s":
        raise ValueError("schur_to_m expects an s-expansion")
    out: dict = {}
    for lam, c in e.coeffs.items():
        for mu in partitions(lam.weight):
            k = kostka(lam, mu)
            if k:
                add_into(out, mu, c * k)
    return SymExpansion("m", out)


def skew_schur_oracle(lam: Sequence[int], mu: Sequence[int], variable_bound: int | None = None) -> SymExpansion:
    """The skew Schur function s_{lam/mu} in the m basis, from skew SSYT in `variable_bound` letters.

    With variable_bound >= |lam/mu| (the default) the truncation loses nothing.
    """
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    if lam.weight > 6:
        raise ValueError("skew_schur_oracle is limited to |lambda| <= 6")
    size = lam.weight - mu.weight
    n = size if variable_bound is None else variable_bound
    counts: dict = {}
    for t in semistandard_tableaux(lam, n, mu):
        c = _content(t, n)
        counts[c] = counts.get(c, 0) + 1
    out: dict = {}
    for c, k in counts.items():
        # every content that is already a partition gives the m_lambda coefficient
        if all(a >= b for a, b in zip(c, c[1:])):
            out[Partition(c)] = k
    if size == 0:
        out = {Partition(()): 1}
    return SymExpansion("m", out)
