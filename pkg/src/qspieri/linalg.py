"""Exact Gaussian elimination over the rationals on sparse row vectors.

Rows are dicts mapping a column key to a nonzero coefficient.  Degree slices
in this package have at most a few hundred columns, so plain elimination is
enough.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence


class EchelonBasis:
    """Incrementally maintained reduced row echelon basis of a span of sparse vectors."""

    def __init__(self, pivot_key: Callable[[Hashable], object] = repr):
        self._pivot_key = pivot_key
        self._pivots: dict = {}

    def _pivot_col(self, row: dict):
        return min(row, key=self._pivot_key)

    def reduce(self, vector: Mapping) -> dict:
        """Reduce a vector against the current basis; returns the remainder."""
        row = {k: Fraction(v) for k, v in vector.items() if v}
        changed = True
        while changed and row:
            changed = False
            for col in [c for c in row if c in self._pivots]:
                if col not in row:
                    continue
                f = row[col]
                for k, v in self._pivots[col].items():
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                changed = True
        return row

    def add(self, vector: Mapping) -> bool:
        """Insert a vector; returns True if it increased the rank."""
        row = self.reduce(vector)
        if not row:
            return False
        col = self._pivot_col(row)
        inv = 1 / row[col]
        row = {k: v * inv for k, v in row.items()}
        for other in self._pivots.values():
            f = other.get(col)
            if f:
                for k, v in row.items():
                    nv = other.get(k, 0) - f * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self._pivots[col] = row
        return True

    def contains(self, vector: Mapping) -> bool:
        return not self.reduce(vector)

    @property
    def rank(self) -> int:
        return len(self._pivots)


def rank(vectors: Iterable[Mapping]) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return basis.rank


def solve_combination(targets: Sequence[Mapping], vector: Mapping) -> list[Fraction] | None:
    """Coefficients c with sum c_i * targets[i] == vector, or None if no solution.

    The targets must be linearly independent.
    """
    tagged = []
    for i, t in enumerate(targets):
        row = {("v", k): Fraction(c) for k, c in t.items() if c}
        row[("t", i)] = Fraction(1)
        tagged.append(row)
    # value columns pivot first, so a vector in the span reduces to tag columns only
    basis = EchelonBasis(pivot_key=lambda col: (col[0] != "v", repr(col[1])))
    for row in tagged:
        basis.add(row)
    rem = basis.reduce({("v", k): c for k, c in vector.items() if c})
    if any(k[0] == "v" for k in rem):
        return None
    # vector - sum(c_i * (t_i + e_i)) = -sum(c_i * e_i)
    coeffs = [Fraction(0)] * len(targets)
    for (_, i), v in rem.items():
        coeffs[i] = -v
    return coeffs
