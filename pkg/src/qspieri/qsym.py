"""Quasi-symmetric functions over the rationals.

Elements are stored in the monomial (M) or fundamental (F) basis; every
operation converts to M, where the Hopf structure is written down.  Peak
functions ``theta(alpha)`` are built directly in M.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import combinat
from ._linear import LinearCombination, add_into, parse_terms, render
from .combinat import Composition, compositions, refinements, coarsenings, star


class QSymElem(LinearCombination):
    __slots__ = ()
    bases = ("M", "F")
    canonical_basis = "M"
    key_type = Composition

    def in_basis(self, basis: str) -> QSymElem:
        if basis == self.basis:
            return self
        if basis == "M":
            return QSymElem._raw(_f_to_m(self._coeffs), "M")
        if basis == "F":
            return QSymElem._raw(_m_to_f(self._coeffs), "F")
        raise ValueError(f"unknown basis {basis!r}")

    def to_M(self) -> QSymElem:
        return self.in_basis("M")

    def to_F(self) -> QSymElem:
        return self.in_basis("F")

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSymElem):
            return NotImplemented
        return product(self, other)

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return QSymElem({(): other}, "M")
        return super()._coerce(other)


def _f_to_m(coeffs: Mapping) -> dict:
    out: dict = {}
    for beta, c in coeffs.items():
        for alpha in refinements(beta):
            add_into(out, alpha, c)
    return out


def _m_to_f(coeffs: Mapping) -> dict:
    out: dict = {}
    for beta, c in coeffs.items():
        lb = len(beta)
        for alpha in refinements(beta):
            add_into(out, alpha, c if (len(alpha) - lb) % 2 == 0 else -c)
    return out


def M(*parts) -> QSymElem:
    """M(2, 1) or M((2, 1)); M() is the unit."""
    alpha = _parts(parts)
    return QSymElem._raw({alpha: Fraction(1)}, "M")


def F(*parts) -> QSymElem:
    alpha = _parts(parts)
    return QSymElem._raw({alpha: Fraction(1)}, "F")


def _parts(parts) -> Composition:
    if len(parts) == 1 and not isinstance(parts[0], int):
        return Composition(parts[0])
    return Composition(parts)


def zero() -> QSymElem:
    return QSymElem._raw({}, "M")


def one() -> QSymElem:
    return M()


def to_M(x: QSymElem) -> QSymElem:
    return x.to_M()


def to_F(x: QSymElem) -> QSymElem:
    return x.to_F()


@lru_cache(maxsize=None)
def _theta_coeffs(alpha: Composition) -> tuple:
    m = alpha.weight
    return tuple(
        (beta, Fraction(2 ** len(beta)))
        for beta in compositions(m)
        if combinat.refines(star(beta), alpha)
    )


def theta(*parts) -> QSymElem:
    """The function sum over beta with star(beta) refining alpha of 2^len(beta) M_beta.

    Defined here for every composition alpha; only peak compositions (and, for
    the shifted span, compositions with a first part > 1) index a basis.
    """
    alpha = _parts(parts)
    return QSymElem._raw(dict(_theta_coeffs(alpha)), "M")


# -- Hopf structure -----------------------------------------------------------

@lru_cache(maxsize=None)
def quasi_shuffle(a: Composition, b: Composition) -> tuple:
    """M_a * M_b as a tuple of (composition, multiplicity)."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out: dict = {}
    ha, ta = a[0], Composition._trusted(a[1:])
    hb, tb = b[0], Composition._trusted(b[1:])
    for c, k in quasi_shuffle(ta, b):
        add_into(out, Composition._trusted((ha,) + c), k)
    for c, k in quasi_shuffle(a, tb):
        add_into(out, Composition._trusted((hb,) + c), k)
    for c, k in quasi_shuffle(ta, tb):
        add_into(out, Composition._trusted((ha + hb,) + c), k)
    return tuple(out.items())


def product(x: QSymElem, y: QSymElem) -> QSymElem:
    xm, ym = x.to_M()._coeffs, y.to_M()._coeffs
    out: dict = {}
    for a, ca in xm.items():
        for b, cb in ym.items():
            for c, k in quasi_shuffle(a, b):
                add_into(out, c, ca * cb * k)
    return QSymElem._raw(out, "M")


def coproduct(x: QSymElem) -> dict:
    """Deconcatenation on M; returns {(alpha, beta): coeff} meaning sum coeff M_alpha (x) M_beta."""
    out: dict = {}
    for g, c in x.to_M()._coeffs.items():
        for i in range(len(g) + 1):
            add_into(out, (Composition._trusted(g[:i]), Composition._trusted(g[i:])), c)
    return out


def counit(x: QSymElem) -> Fraction:
    return x.to_M().coefficient(())


@lru_cache(maxsize=None)
def _antipode_basis(g: Composition) -> tuple:
    if not g:
        return (((), Fraction(1)),)
    # s(x) = - sum s(y) z over coproduct terms y (x) z with deg y < deg x
    out: dict = {}
    for i in range(len(g)):
        left, right = Composition._trusted(g[:i]), Composition._trusted(g[i:])
        s_left = QSymElem._raw(dict(_antipode_basis(left)), "M")
        for c, k in product(s_left, M(right))._coeffs.items():
            add_into(out, c, -k)
    return tuple(out.items())


def antipode(x: QSymElem) -> QSymElem:
    out: dict = {}
    for g, c in x.to_M()._coeffs.items():
        for h, k in _antipode_basis(g):
            add_into(out, h, c * k)
    return QSymElem._raw(out, "M")


def tensor_product(x: QSymElem, y: QSymElem) -> dict:
    """The pure tensor x (x) y in M (x) M coordinates."""
    out: dict = {}
    for a, ca in x.to_M()._coeffs.items():
        for b, cb in y.to_M()._coeffs.items():
            add_into(out, (a, b), ca * cb)
    return out


def tensor_map(t: Mapping, f, g) -> dict:
    """Apply f (x) g to a tensor {(a, b): c} where f, g map compositions to QSymElem."""
    out: dict = {}
    for (a, b), c in t.items():
        for k, v in tensor_product(f(a), g(b)).items():
            add_into(out, k, c * v)
    return out


# -- raising maps ---------------------------------------------------------------

def _homogeneous_degree(x: QSymElem) -> int | None:
    ds = x.degrees()
    if len(ds) > 1:
        raise ValueError("expected a homogeneous element")
    return ds.pop() if ds else None


def psi(x: QSymElem) -> QSymElem:
    """M_beta -> M_{beta+} + 2 M_{beta.1}."""
    n = _homogeneous_degree(x)
    if n == 0:
        raise ValueError("psi is defined on positive degrees")
    out: dict = {}
    for b, c in x.to_M()._coeffs.items():
        add_into(out, b.plus(), c)
        add_into(out, b.append_one(), 2 * c)
    return QSymElem._raw(out, "M")


def phi(x: QSymElem) -> QSymElem:
    """M_beta -> [last part of beta is 1] M_{beta+} + 2 M_{beta.1}."""
    n = _homogeneous_degree(x)
    if n == 0:
        raise ValueError("phi is defined on positive degrees")
    out: dict = {}
    for b, c in x.to_M()._coeffs.items():
        if b[-1] == 1:
            add_into(out, b.plus(), c)
        add_into(out, b.append_one(), 2 * c)
    return QSymElem._raw(out, "M")


# -- peak and shifted spans ------------------------------------------------------

def shifted_index_set(n: int) -> list[Composition]:
    """Compositions alpha of n with alpha_1 > 1 when n > 1."""
    return [a for a in compositions(n) if n <= 1 or a[0] > 1]


def _annihilates(x: QSymElem, generator_degrees: Iterable[int]) -> bool:
    from . import duality, nc

    n = _homogeneous_degree(x)
    if n is None:
        return True
    for m in generator_degrees:
        if 2 * m > n:
            continue
        gen = nc.euler_element(m)
        for w in nc.ideal_degree_basis([gen], n):
            if duality.pair(w, x) != 0:
                return False
    return True


def in_peak_dual(x: QSymElem) -> bool:
    """x kills every S^beta X_{2m} S^gamma of its degree (membership in the peak span)."""
    n = _homogeneous_degree(x)
    if n is None:
        return True
    return _annihilates(x, range(1, n // 2 + 1))


def in_shifted_dual(x: QSymElem) -> bool:
    """x kills every S^beta X_2 S^gamma of its degree."""
    return _annihilates(x, [1])


peak_membership = in_peak_dual
xi_membership = in_shifted_dual


def peak_expansion(x: QSymElem) -> dict | None:
    """Coordinates of x in the peak basis {theta_alpha}, or None if x is outside the peak span."""
    from .linalg import solve_combination

    out: dict = {}
    xm = x.to_M()
    for n in sorted(xm.degrees()):
        comps = combinat.peak_compositions(n)
        sol = solve_combination([theta(a)._coeffs for a in comps], xm.homogeneous_component(n)._coeffs)
        if sol is None:
            return None
        for a, c in zip(comps, sol):
            if c:
                out[a] = c
    return out


def render_theta(expansion: Mapping) -> str:
    return render(sorted(expansion.items(), key=lambda kv: kv[0].sort_key()), "theta")


def parse(text: str) -> QSymElem:
    """Parse the printed grammar, e.g. "2*M(2,1) - 1/2*F(3) + theta(1)".

    Accepted symbols: M, F, theta, and the symmetric bases m and s.
    """
    from . import symfunc

    out = zero()
    for c, symbol, parts in parse_terms(text):
        if symbol == "M":
            term = M(parts)
        elif symbol == "F":
            term = F(parts)
        elif symbol == "theta":
            term = theta(parts)
        elif symbol == "m":
            term = symfunc.monomial_symmetric(parts)
        elif symbol == "s":
            term = symfunc.schur_qsym(parts)
        else:
            raise ValueError(f"unknown quasi-symmetric symbol {symbol!r}")
        out = out + term.scale(c)
    return out
