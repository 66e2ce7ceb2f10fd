"""Pieri operator families on reseaux and the quasi-symmetric functions K they define.

A family assigns to each generator h_k of NC an operator on the span of the
vertices, acting on the right.  ``kfunction`` evaluates the Cauchy element
along an interval; for descent-type families the same function is also
available as a sum of fundamental functions over chains.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from . import combinat
from ._linear import add_into, as_fraction
from .combinat import Composition, compositions
from .duality import cauchy_evaluation
from .poset import Interval, IntervalProduct, LabelledReseau, UNIT
from .qsym import QSymElem, F, M, theta, zero


class PieriFamily:
    """Base class: subclasses implement ``_row(x, k)`` = x.h_k as {vertex: coeff}."""

    kind = "abstract"
    max_generator: int | None = None

    def __init__(self, reseau: LabelledReseau):
        self.reseau = reseau
        self._rows: dict = {}

    def __repr__(self) -> str:
        return f"<{type(self).__name__} on {self.reseau!r}>"

    def _row(self, x, k: int) -> dict:
        raise NotImplementedError

    def row(self, x, k: int) -> dict:
        key = (x, k)
        r = self._rows.get(key)
        if r is None:
            r = self._row(x, k)
            self._rows[key] = r
        return r

    def apply_h(self, vec: Mapping, k: int) -> dict:
        """vec . h_k"""
        if k <= 0:
            raise ValueError("h_k is applied for k > 0")
        if self.max_generator is not None and k > self.max_generator:
            raise ValueError(f"{self.kind} operators are defined for k <= {self.max_generator}")
        out: dict = {}
        for v, c in vec.items():
            for y, d in self.row(v, k).items():
                add_into(out, y, c * d)
        return out

    def _apply_or_zero(self, vec: Mapping, k: int) -> dict:
        if self.max_generator is not None and k > self.max_generator:
            return {}
        return self.apply_h(vec, k)

    def act(self, vec: Mapping, alpha: Sequence[int]) -> dict:
        """vec . S^alpha, applying h_{alpha_1} first."""
        out = dict(vec)
        for k in alpha:
            out = self._apply_or_zero(out, k)
            if not out:
                break
        return out

    def vertices(self) -> Iterable:
        return self.reseau.vertices

    def can_reach(self, y, r: int) -> Callable[[Hashable, int], bool]:
        table = self.reseau.paths_to(y, r)
        return lambda v, s: bool(table[s].get(v))


class RankSelection(PieriFamily):
    """x.h_k = sum of all y reachable from x by a path of length k."""

    kind = "rank_selection"

    def _row(self, x, k):
        return {y: 1 for y in self.reseau.reachable(x, k)}


class PathCount(PieriFamily):
    """x.h_k = sum over y of E^k(x, y) y."""

    kind = "path_count"

    def _row(self, x, k):
        return dict(self.reseau.reachable(x, k))


class Descent(PieriFamily):
    """x.h_k = sum of end(w) over length-k chains from x whose labels never descend."""

    kind = "descent"

    @staticmethod
    def step_allowed(a: int, b: int) -> bool:
        return a <= b

    @staticmethod
    def descent_composition(labels: Sequence[int]) -> Composition:
        return combinat.descent_composition(labels)

    def _chains_ok(self, x, k: int, extra: Callable[[int, int], bool] | None = None) -> dict:
        g = self.reseau
        ok = self.step_allowed
        out: dict = {}

        def walk(v, remaining: int, first: int | None, last: int | None) -> None:
            if remaining == 0:
                out[v] = out.get(v, 0) + 1
                return
            for e in g.out_edges(v):
                if last is not None and not ok(last, e.label):
                    continue
                f = e.label if first is None else first
                if remaining == 1 and extra is not None and not extra(f, e.label):
                    continue
                walk(e.target, remaining - 1, f, e.label)

        walk(x, k, None, None)
        return out

    def _row(self, x, k):
        return self._chains_ok(x, k)


class ModifiedDescent(Descent):
    """Descent operator where equal negative labels also count as a descent."""

    kind = "modified_descent"

    @staticmethod
    def step_allowed(a: int, b: int) -> bool:
        return a < b or (a == b and a > 0)

    @staticmethod
    def descent_composition(labels: Sequence[int]) -> Composition:
        return combinat.modified_descent_composition(labels)


class Quantum(Descent):
    """No-descent chains of length k <= p on C_{m,p} with a bound on b_k - b_1.

    The bound is b_k - b_1 < m + p - 1 by default.  With ``restriction="literal"``
    it is b_k - b_1 < m + p; that version admits chains whose added boxes wrap
    into a single column of the cylinder, and its operators do not commute once
    p >= 2.  The default reproduces the quantum Pieri rule of the Grassmannian
    (see catalog.quantum_pieri_oracle).
    """

    kind = "quantum"

    def __init__(self, reseau: LabelledReseau, m: int, p: int, restriction: str = "cylindric"):
        super().__init__(reseau)
        if m < 1 or p < 1:
            raise ValueError("quantum operators need m, p >= 1")
        if restriction not in ("cylindric", "literal"):
            raise ValueError("restriction must be 'cylindric' or 'literal'")
        self.m, self.p = m, p
        self.restriction = restriction
        self.span = m + p - 1 if restriction == "cylindric" else m + p
        self.max_generator = p

    def _row(self, x, k):
        span = self.span
        return self._chains_ok(x, k, extra=lambda first, last: last - first < span)


class Halved(PieriFamily):
    """h_k acts as scalar(k) times the inner family's h_k."""

    kind = "halved"

    def __init__(self, inner: PieriFamily, scalar=Fraction(1, 2)):
        super().__init__(inner.reseau)
        self.inner = inner
        self.max_generator = inner.max_generator
        if callable(scalar):
            self._scalar = lambda k: as_fraction(scalar(k))
        elif isinstance(scalar, Mapping):
            self._scalar = lambda k: as_fraction(scalar[k])
        else:
            c = as_fraction(scalar)
            self._scalar = lambda k: c

    def scalar(self, k: int) -> Fraction:
        return self._scalar(k)

    def _row(self, x, k):
        c = self._scalar(k)
        return {y: c * d for y, d in self.inner.row(x, k).items()}


class TensorFamily(PieriFamily):
    """The action of NC on tuples of vertices pulled back along the coproduct.

    A state is a tuple of (vertex, steps taken) pairs, one per factor; h_k acts
    by sum over i_1 + ... + i_n = k of the factor operators h_{i_j} (h_0 = 1).
    """

    kind = "tensor"

    def __init__(self, families: Sequence[PieriFamily]):
        self.families = tuple(families)
        self.reseau = None
        self._rows = {}
        self.max_generator = None

    def _factor_row(self, j: int, v, i: int) -> dict:
        if i == 0:
            return {v: 1}
        f = self.families[j]
        if f.max_generator is not None and i > f.max_generator:
            return {}
        return f.row(v, i)

    def _row(self, state, k):
        out: dict = {}

        def rec(j: int, remaining: int, acc: list, coeff) -> None:
            if j == len(self.families) - 1:
                v, steps = state[j]
                for w, c in self._factor_row(j, v, remaining).items():
                    add_into(out, tuple(acc) + ((w, steps + remaining),), coeff * c)
                return
            v, steps = state[j]
            for i in range(remaining + 1):
                for w, c in self._factor_row(j, v, i).items():
                    acc.append((w, steps + i))
                    rec(j + 1, remaining - i, acc, coeff * c)
                    acc.pop()

        rec(0, k, [], 1)
        return out

    def vertices(self):
        raise TypeError("a tensor family has no finite vertex list")


FAMILY_KINDS = {
    "rank_selection": RankSelection,
    "path_count": PathCount,
    "descent": Descent,
    "modified_descent": ModifiedDescent,
}


def make_family(reseau: LabelledReseau, kind: str, **params) -> PieriFamily:
    if kind in FAMILY_KINDS:
        return FAMILY_KINDS[kind](reseau)
    if kind == "quantum":
        return Quantum(reseau, params["m"], params["p"], params.get("restriction", "cylindric"))
    if kind == "halved":
        inner = make_family(reseau, params.get("inner", "modified_descent"))
        return Halved(inner, params.get("scalar", Fraction(1, 2)))
    raise ValueError(f"unknown Pieri family kind {kind!r}")


# -- K functions -------------------------------------------------------------------


def kfunction(f: PieriFamily, x, y, r: int | None = None) -> QSymElem:
    """K_[x,y]^(r) = sum over alpha of <x.S^alpha, y> M_alpha (Cauchy evaluation)."""
    g = f.reseau
    g.check_vertex(x)
    g.check_vertex(y)
    r = g.default_length(x, y, r)
    return cauchy_evaluation(
        f._apply_or_zero, x, y, r, max_generator=f.max_generator, can_reach=f.can_reach(y, r)
    )


def kfunction_chains(f: PieriFamily, x, y, r: int | None = None) -> QSymElem:
    """sum over paths w from x to y of F_{D(w)}, for descent and modified-descent families."""
    if type(f) not in (Descent, ModifiedDescent):
        raise TypeError("the chain formula applies to descent and modified-descent families")
    out: dict = {}
    for ch in f.reseau.chains(x, y, r):
        add_into(out, f.descent_composition(ch.labels), Fraction(1))
    return QSymElem._raw(out, "F").to_M()


def peak_kfunction(p: LabelledReseau, x, y, r: int | None = None) -> QSymElem:
    """The peak enumerator: sum over paths w from x to y of theta of the peak composition of w."""
    if not p.labels_positive():
        raise ValueError("the peak enumerator needs positive labels")
    counts: dict = {}
    for ch in p.chains(x, y, r):
        key = combinat.peak_composition(ch.labels)
        counts[key] = counts.get(key, 0) + 1
    out = zero()
    for alpha, c in counts.items():
        out = out + theta(alpha).scale(c)
    return out


def peak_coefficients(p: LabelledReseau, x, y, r: int | None = None) -> dict:
    """Number of chains of [x, y] with each peak composition."""
    counts: dict = {}
    for ch in p.chains(x, y, r):
        key = combinat.peak_composition(ch.labels)
        counts[key] = counts.get(key, 0) + 1
    return counts


def kfunction_of_product(
    ip: IntervalProduct,
    family_for: Callable[[LabelledReseau], PieriFamily] | PieriFamily,
    method: str = "factorwise",
) -> QSymElem:
    """K of a product of intervals.

    ``factorwise`` multiplies the factors' K functions in QSym; ``tensor``
    evaluates the Cauchy element for the coproduct action on tuples of
    vertices, which is what the product formula asserts they agree with.
    """
    if isinstance(family_for, PieriFamily):
        fam = family_for
        family_for = lambda g: fam
    if not ip.factors:
        return M()
    if method == "factorwise":
        out = M()
        for fac in ip.factors:
            out = out * kfunction(family_for(fac.reseau), fac.x, fac.y, fac.r)
        return out
    if method != "tensor":
        raise ValueError(f"unknown method {method!r}")
    fams = [family_for(fac.reseau) for fac in ip.factors]
    tf = TensorFamily(fams)
    start = tuple((fac.x, 0) for fac in ip.factors)
    target = tuple((fac.y, fac.r) for fac in ip.factors)
    tables = [fac.reseau.paths_to(fac.y, fac.r) for fac in ip.factors]

    def can_reach(state, s):
        need = 0
        for (v, steps), fac, table in zip(state, ip.factors, tables):
            left = fac.r - steps
            if left < 0 or not table[left].get(v):
                return False
            need += left
        return need == s

    return cauchy_evaluation(tf._apply_or_zero, start, target, ip.degree, can_reach=can_reach)


def kfunction_of_element(a: Mapping, family_for, method: str = "factorwise") -> QSymElem:
    out = zero()
    for ip, c in a.items():
        out = out + kfunction_of_product(ip, family_for, method).scale(c)
    return out


def kfunction_of_tensor(t: Mapping, family_for) -> dict:
    """(K (x) K) applied to {(P, Q): c}, as {(alpha, beta): coeff} in M (x) M."""
    cache: dict = {}

    def k_of(ip):
        if ip not in cache:
            cache[ip] = kfunction_of_product(ip, family_for).to_M()._coeffs
        return cache[ip]

    out: dict = {}
    for (p, q), c in t.items():
        kp, kq = k_of(p), k_of(q)
        for a, ca in kp.items():
            for b, cb in kq.items():
                add_into(out, (a, b), c * ca * cb)
    return out


# -- classification --------------------------------------------------------------------


def _generator_range(f: PieriFamily, bound: int) -> range:
    top = bound if f.max_generator is None else min(bound, f.max_generator)
    return range(1, top + 1)


def commutation_failures(f: PieriFamily, degree_bound: int, vertices: Iterable | None = None) -> list:
    """(a, b, x) with x.h_a h_b != x.h_b h_a, for a < b, a + b <= degree_bound."""
    gens = _generator_range(f, degree_bound)
    bad = []
    for x in (f.vertices() if vertices is None else vertices):
        for a in gens:
            for b in gens:
                if a < b and a + b <= degree_bound:
                    lhs = f.apply_h(f.apply_h({x: 1}, a), b)
                    rhs = f.apply_h(f.apply_h({x: 1}, b), a)
                    if lhs != rhs:
                        bad.append((a, b, x))
    return bad


def is_symmetric(f: PieriFamily, degree_bound: int, vertices: Iterable | None = None) -> bool:
    """True iff h_a h_b = h_b h_a for all a + b <= degree_bound."""
    return not commutation_failures(f, degree_bound, vertices)


def _scalar_fn(scalars) -> Callable[[int], Fraction]:
    if scalars is None:
        return lambda k: Fraction(1)
    if callable(scalars):
        return lambda k: as_fraction(scalars(k))
    if isinstance(scalars, Mapping):
        return lambda k: as_fraction(scalars.get(k, 1))
    if isinstance(scalars, (list, tuple)):
        return lambda k: as_fraction(scalars[k - 1])
    c = as_fraction(scalars)
    return lambda k: c


def euler_defects(f: PieriFamily, scalars=None, degree_bound: int = 4, vertices: Iterable | None = None) -> list:
    """(2n, x, residue) where sum_{i+j=2n} (-1)^i (a_i h_i)(a_j h_j) does not kill x."""
    alpha = _scalar_fn(scalars)
    bad = []

    def scaled(vec, k):
        if k == 0:
            return dict(vec)
        c = alpha(k)
        return {v: c * d for v, d in f._apply_or_zero(vec, k).items()}

    for x in (f.vertices() if vertices is None else vertices):
        for n in range(1, degree_bound // 2 + 1):
            total: dict = {}
            for i in range(2 * n + 1):
                step = scaled(scaled({x: 1}, i), 2 * n - i)
                sign = 1 if i % 2 == 0 else -1
                for v, d in step.items():
                    add_into(total, v, sign * d)
            if total:
                bad.append((2 * n, x, total))
    return bad


def is_eulerian(f: PieriFamily, scalars=None, degree_bound: int = 4, vertices: Iterable | None = None) -> bool:
    """True iff the scaled operators a_k h_k satisfy every even Euler relation up to degree_bound."""
    return not euler_defects(f, scalars, degree_bound, vertices)
