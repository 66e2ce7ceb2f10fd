"""Noncommutative symmetric functions: the free algebra on h_1, h_2, ...

The complete basis S^alpha = h_{alpha_1} ... h_{alpha_l} is canonical.  The
ribbon basis R is the basis dual to the fundamental quasi-symmetric
functions, obtained from S^alpha = sum over coarsenings beta of R_beta.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterable, Mapping

from ._linear import LinearCombination, add_into, parse_terms
from .combinat import Composition, coarsenings, compositions


class NCElem(LinearCombination):
    __slots__ = ()
    bases = ("S", "R")
    canonical_basis = "S"
    key_type = Composition

    def in_basis(self, basis: str) -> NCElem:
        if basis == self.basis:
            return self
        if basis == "S":
            return NCElem._raw(_r_to_s(self._coeffs), "S")
        if basis == "R":
            return NCElem._raw(_s_to_r(self._coeffs), "R")
        raise ValueError(f"unknown basis {basis!r}")

    def to_S(self) -> NCElem:
        return self.in_basis("S")

    def to_R(self) -> NCElem:
        return self.in_basis("R")

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NCElem):
            return NotImplemented
        return product(self, other)

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return NCElem({(): other}, "S")
        return super()._coerce(other)


def _s_to_r(coeffs: Mapping) -> dict:
    out: dict = {}
    for a, c in coeffs.items():
        for b in coarsenings(a):
            add_into(out, b, c)
    return out


def _r_to_s(coeffs: Mapping) -> dict:
    out: dict = {}
    for a, c in coeffs.items():
        la = len(a)
        for b in coarsenings(a):
            add_into(out, b, c if (la - len(b)) % 2 == 0 else -c)
    return out


def S(*parts) -> NCElem:
    return NCElem._raw({_parts(parts): Fraction(1)}, "S")


def R(*parts) -> NCElem:
    return NCElem._raw({_parts(parts): Fraction(1)}, "R")


def h(k: int) -> NCElem:
    if k < 0:
        raise ValueError("h_k needs k >= 0")
    return S(()) if k == 0 else S(k)


def _parts(parts) -> Composition:
    if len(parts) == 1 and not isinstance(parts[0], int):
        return Composition(parts[0])
    return Composition(parts)


def zero() -> NCElem:
    return NCElem._raw({}, "S")


def one() -> NCElem:
    return S(())


def to_S(x: NCElem) -> NCElem:
    return x.to_S()


def to_R(x: NCElem) -> NCElem:
    return x.to_R()


def product(x: NCElem, y: NCElem) -> NCElem:
    xs, ys = x.to_S()._coeffs, y.to_S()._coeffs
    out: dict = {}
    for a, ca in xs.items():
        for b, cb in ys.items():
            add_into(out, a + b, ca * cb)
    return NCElem._raw(out, "S")


@lru_cache(maxsize=None)
def _coproduct_basis(alpha: Composition) -> tuple:
    # product over the parts of sum_{i} h_i (x) h_{k-i}
    out: dict = {}
    for split in cartesian(*(range(a + 1) for a in alpha)):
        left = Composition._trusted(tuple(i for i in split if i))
        right = Composition._trusted(tuple(a - i for a, i in zip(alpha, split) if a - i))
        add_into(out, (left, right), 1)
    return tuple(out.items())


def coproduct(x: NCElem) -> dict:
    """Returns {(alpha, beta): coeff} meaning sum coeff S^alpha (x) S^beta."""
    out: dict = {}
    for a, c in x.to_S()._coeffs.items():
        for k, v in _coproduct_basis(a):
            add_into(out, k, c * v)
    return out


def counit(x: NCElem) -> Fraction:
    return x.to_S().coefficient(())


@lru_cache(maxsize=None)
def _antipode_basis(alpha: Composition) -> tuple:
    if not alpha:
        return (((), Fraction(1)),)
    n = alpha.weight
    out: dict = {}
    for (left, right), k in _coproduct_basis(alpha):
        if left.weight == n:
            continue
        for a, c in _antipode_basis(left):
            add_into(out, Composition._trusted(tuple(a) + tuple(right)), -c * k)
    return tuple(out.items())


def antipode(x: NCElem) -> NCElem:
    out: dict = {}
    for a, c in x.to_S()._coeffs.items():
        for b, k in _antipode_basis(a):
            add_into(out, b, c * k)
    return NCElem._raw(out, "S")


def euler_element(n: int) -> NCElem:
    """X_{2n} = sum_{i+j=2n} (-1)^i h_i h_j."""
    if n < 1:
        raise ValueError("euler_element needs n >= 1")
    out: dict = {Composition._trusted((2 * n,)): Fraction(2)}
    for i in range(1, 2 * n):
        add_into(out, Composition._trusted((i, 2 * n - i)), Fraction((-1) ** i))
    return NCElem._raw(out, "S")


def ideal_degree_basis(generators: Iterable[NCElem], n: int) -> list[NCElem]:
    """The products S^beta * g * S^gamma of degree n, a spanning set of the ideal's degree-n slice."""
    out = []
    for g in generators:
        d = g.degree()
        if d is None:
            if g.is_zero():
                continue
            raise ValueError("ideal generators must be homogeneous")
        if d > n:
            continue
        for left_deg in range(n - d + 1):
            for beta in compositions(left_deg):
                for gamma in compositions(n - d - left_deg):
                    out.append(S(beta) * g * S(gamma))
    return out


def ideal_slice_rank(generators: Iterable[NCElem], n: int) -> int:
    from .linalg import rank

    return rank(w.to_S()._coeffs for w in ideal_degree_basis(list(generators), n))


def quotient_dimension(generators: Iterable[NCElem], n: int) -> int:
    """dim NC_n minus the rank of the ideal slice."""
    total = len(compositions(n))
    return total - ideal_slice_rank(generators, n)


def euler_ideal_generators(n: int) -> list[NCElem]:
    return [euler_element(m) for m in range(1, n // 2 + 1)]


def parse(text: str) -> NCElem:
    out = zero()
    for c, symbol, parts in parse_terms(text):
        if symbol == "S":
            term = S(parts)
        elif symbol == "R":
            term = R(parts)
        else:
            raise ValueError(f"unknown noncommutative symbol {symbol!r}")
        out = out + term.scale(c)
    return out
