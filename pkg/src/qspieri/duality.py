"""The pairing between NC and QSym, and evaluation of the Cauchy element along an interval."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Mapping

from ._linear import add_into
from .combinat import Composition
from .nc import NCElem
from .qsym import QSymElem

Vector = Mapping[Hashable, object]


def pair(f: NCElem, g: QSymElem) -> Fraction:
    """Bilinear extension of <S^alpha, M_beta> = [alpha == beta]."""
    fs = f.to_S()._coeffs
    gm = g.to_M()._coeffs
    if len(fs) > len(gm):
        fs, gm = gm, fs
    return sum((c * gm[k] for k, c in fs.items() if k in gm), Fraction(0))


def pair_tensor(nc_tensor: Mapping, qsym_tensor: Mapping) -> Fraction:
    """Pairing of {(a, b): c} in S (x) S against {(a, b): c} in M (x) M."""
    if len(nc_tensor) > len(qsym_tensor):
        nc_tensor, qsym_tensor = qsym_tensor, nc_tensor
    return sum((c * qsym_tensor[k] for k, c in nc_tensor.items() if k in qsym_tensor), Fraction(0))


def cauchy_evaluation(
    apply_h: Callable[[Vector, int], dict],
    x: Hashable,
    y: Hashable,
    degree: int,
    *,
    max_generator: int | None = None,
    can_reach: Callable[[Hashable, int], bool] | None = None,
) -> QSymElem:
    """sum over alpha of degree `degree` of <x.S^alpha, y> M_alpha.

    `apply_h(vec, k)` is the right action of h_k on a vector {vertex: coeff}.
    The action of S^alpha is built left to right and shared along common
    prefixes.  Generators beyond `max_generator` act as zero.  `can_reach(v, s)`
    may prune vertices that have no path of length s to y.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    top = degree if max_generator is None else min(degree, max_generator)
    out: dict = {}

    def walk(prefix: tuple, vec: dict, remaining: int) -> None:
        if remaining == 0:
            c = vec.get(y, 0)
            if c:
                out[Composition._trusted(prefix)] = Fraction(c)
            return
        for k in range(1, min(top, remaining) + 1):
            nxt = apply_h(vec, k)
            if can_reach is not None:
                rest = remaining - k
                nxt = {v: c for v, c in nxt.items() if can_reach(v, rest)}
            if nxt:
                walk(prefix + (k,), nxt, remaining - k)

    start = {x: 1}
    if can_reach is None or can_reach(x, degree):
        walk((), start, degree)
    return QSymElem._raw(out, "M")


functional_of_matrix_column = cauchy_evaluation
