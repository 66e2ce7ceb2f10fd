"""Finitely supported linear combinations with exact rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping


def as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {c!r}")


def format_coefficient(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def add_into(target: dict, key, coeff) -> None:
    v = target.get(key, 0) + coeff
    if v:
        target[key] = v
    else:
        target.pop(key, None)


def render(terms: Iterable[tuple], symbol: str) -> str:
    """Render (key, coeff) pairs as "c1*X(a,b) + c2*X(c)"; keys must print as "(...)"."""
    pieces = []
    for key, c in terms:
        body = f"{format_coefficient(abs(c))}*{symbol}{key}"
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces) if pieces else "0"


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?([A-Za-z_][A-Za-z_0-9]*)\s*\(\s*([\d,\s]*)\)\s*"
)


def parse_terms(text: str) -> list[tuple[Fraction, str, tuple[int, ...]]]:
    """Parse "c1*X(a,b) + c2*Y(c)" into (coeff, symbol, parts) triples."""
    text = text.strip()
    if text == "0" or not text:
        return []
    out = []
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse expression at: {text[pos:]!r}")
        sign, coeff, symbol, parts = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator before: {text[pos:]!r}")
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        body = parts.replace(" ", "")
        key = tuple(int(s) for s in body.split(",")) if body else ()
        out.append((c, symbol, key))
        pos = m.end()
        first = False
    return out


class LinearCombination:
    """Immutable mapping key -> nonzero Fraction, tagged with the basis it is written in.

    Subclasses define ``_canonical`` (conversion of a coefficient dict into the
    canonical basis) so that equality is basis-independent.
    """

    __slots__ = ("basis", "_coeffs")
    bases: tuple = ()
    canonical_basis: str = ""
    key_type: Callable = tuple

    def __init__(self, coeffs: Mapping | None = None, basis: str | None = None):
        basis = basis or self.canonical_basis
        if basis not in self.bases:
            raise ValueError(f"unknown basis {basis!r}; expected one of {self.bases}")
        clean: dict = {}
        if coeffs:
            for k, c in coeffs.items():
                c = as_fraction(c)
                if c:
                    add_into(clean, self.key_type(k), c)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def _raw(cls, coeffs: dict, basis: str):
        """Wrap a dict already keyed by key_type with nonzero Fraction values."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "basis", basis)
        object.__setattr__(obj, "_coeffs", coeffs)
        return obj

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, key) -> Fraction:
        return self._coeffs.get(self.key_type(key), Fraction(0))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def in_basis(self, basis: str):
        raise NotImplementedError

    def canonical(self):
        return self.in_basis(self.canonical_basis)

    def degrees(self) -> set:
        return {sum(k) for k in self._coeffs}

    def degree(self) -> int | None:
        """The degree if homogeneous and nonzero, else None."""
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def homogeneous_component(self, n: int):
        return type(self)._raw({k: c for k, c in self._coeffs.items() if sum(k) == n}, self.basis)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)({(): other}, self.canonical_basis)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.basis != self.basis:
            return self.canonical() + other.canonical()
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            add_into(out, k, c)
        return type(self)._raw(out, self.basis)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self._coeffs.items()}, self.basis)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = as_fraction(c)
        if not c:
            return type(self)._raw({}, self.basis)
        return type(self)._raw({k: v * c for k, v in self._coeffs.items()}, self.basis)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        if self.basis == other.basis:
            return self._coeffs == other._coeffs
        return self.canonical()._coeffs == other.canonical()._coeffs

    def __hash__(self):
        return hash(frozenset(self.canonical()._coeffs.items()))

    def __str__(self) -> str:
        return render(self.items(), self.basis)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"
