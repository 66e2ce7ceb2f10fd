"""Compositions, partitions, word statistics and signed permutations."""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class Composition(tuple):
    """A finite sequence of positive integers.

    Compositions hash and compare equal to the plain tuple of their parts, so
    either can be used as a dictionary key.  Ordering is by weight, then by
    number of parts, then lexicographically; this is the order in which
    algebra elements are printed.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Composition:
        if isinstance(parts, Composition):
            return parts
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"composition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple) -> Composition:
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def sort_key(self) -> tuple:
        return (sum(self), len(self), tuple(self))

    def __lt__(self, other):
        return self.sort_key() < Composition(other).sort_key()

    def __le__(self, other):
        return self.sort_key() <= Composition(other).sort_key()

    def __gt__(self, other):
        return self.sort_key() > Composition(other).sort_key()

    def __ge__(self, other):
        return self.sort_key() >= Composition(other).sort_key()

    __hash__ = tuple.__hash__
    __eq__ = tuple.__eq__
    __ne__ = tuple.__ne__

    def __add__(self, other) -> Composition:
        return Composition._trusted(tuple(self) + tuple(Composition(other)))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"

    def __repr__(self) -> str:
        return f"Composition{str(self)}"

    def plus(self) -> Composition:
        """Increase the last part by one."""
        if not self:
            raise ValueError("the empty composition has no last part")
        return Composition._trusted(self[:-1] + (self[-1] + 1,))

    def append_one(self) -> Composition:
        return Composition._trusted(tuple(self) + (1,))

    def descent_set(self) -> frozenset:
        """Partial sums except the last: the subset of [n-1] this composition encodes."""
        out, s = [], 0
        for p in self[:-1]:
            s += p
            out.append(s)
        return frozenset(out)

    def to_partition(self) -> Partition:
        return Partition(sorted(self, reverse=True))


class Partition(tuple):
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def sort_key(self) -> tuple:
        return (sum(self), len(self), tuple(self))

    def __lt__(self, other):
        return self.sort_key() < Partition(other).sort_key()

    def __le__(self, other):
        return self.sort_key() <= Partition(other).sort_key()

    def __gt__(self, other):
        return self.sort_key() > Partition(other).sort_key()

    def __ge__(self, other):
        return self.sort_key() >= Partition(other).sort_key()

    __hash__ = tuple.__hash__
    __eq__ = tuple.__eq__
    __ne__ = tuple.__ne__

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"

    def __repr__(self) -> str:
        return f"Partition{str(self)}"

    def contains(self, other: Sequence[int]) -> bool:
        """Young-diagram containment: other is a subshape of self."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))


def parse_parts(text: str) -> tuple[int, ...]:
    """Parse "(2,1)", "2,1", "()" or "" into a tuple of ints."""
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    t = t.strip()
    if not t:
        return ()
    return tuple(int(s) for s in t.split(","))


@lru_cache(maxsize=None)
def _compositions_cached(n: int) -> tuple:
    if n == 0:
        return (Composition(),)
    out = []
    for k in range(n):
        for cut in combinations(range(1, n), k):
            bounds = (0,) + cut + (n,)
            out.append(Composition._trusted(tuple(b - a for a, b in zip(bounds, bounds[1:]))))
    return tuple(sorted(out, key=Composition.sort_key))


def compositions(n: int) -> tuple:
    """All compositions of n in printing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _compositions_cached(n)


def compositions_upto(n: int) -> Iterator[Composition]:
    for m in range(n + 1):
        yield from compositions(m)


@lru_cache(maxsize=None)
def _partitions_cached(n: int, max_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_cached(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> list[Partition]:
    return sorted((Partition(p) for p in _partitions_cached(n, n)), key=Partition.sort_key)


def composition_from_set(subset: Iterable[int], n: int) -> Composition:
    """The composition (j_1, j_2-j_1, ..., n-j_k) of a subset {j_1<...<j_k} of [n-1]."""
    js = sorted(subset)
    if js and (js[0] < 1 or js[-1] > n - 1):
        raise ValueError(f"subset {js} is not contained in [1, {n - 1}]")
    if n == 0:
        return Composition()
    bounds = [0] + js + [n]
    return Composition._trusted(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def refines(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """True iff beta is a refinement of alpha (beta can be cut into blocks summing to alpha's parts)."""
    if sum(beta) != sum(alpha):
        return False
    i, acc = 0, 0
    for a in alpha:
        while acc < a:
            if i >= len(beta):
                return False
            acc += beta[i]
            i += 1
        if acc != a:
            return False
        acc = 0
    return i == len(beta)


def refinements(alpha: Sequence[int]) -> Iterator[Composition]:
    """All compositions beta with beta refining alpha."""
    alpha = Composition(alpha)
    pieces = [compositions(a) for a in alpha]

    def rec(i: int, acc: tuple):
        if i == len(pieces):
            yield Composition._trusted(acc)
            return
        for c in pieces[i]:
            yield from rec(i + 1, acc + tuple(c))

    yield from rec(0, ())


def coarsenings(alpha: Sequence[int]) -> Iterator[Composition]:
    """All compositions beta that alpha refines."""
    alpha = tuple(alpha)
    if not alpha:
        yield Composition()
        return
    for k in range(len(alpha)):
        for cut in combinations(range(1, len(alpha)), k):
            bounds = (0,) + cut + (len(alpha),)
            yield Composition._trusted(tuple(sum(alpha[a:b]) for a, b in zip(bounds, bounds[1:])))


def star(beta: Sequence[int]) -> Composition:
    """Replace every part b > 1 after the first by the pair (1, b - 1)."""
    beta = tuple(beta)
    if not beta:
        return Composition()
    out = [beta[0]]
    for b in beta[1:]:
        if b > 1:
            out.extend((1, b - 1))
        else:
            out.append(b)
    return Composition._trusted(tuple(out))


def is_peak_composition(alpha: Sequence[int]) -> bool:
    """All parts greater than 1, except possibly the last."""
    return all(a > 1 for a in tuple(alpha)[:-1])


def peak_compositions(n: int) -> list[Composition]:
    return [c for c in compositions(n) if is_peak_composition(c)]


def descent_set(labels: Sequence[int]) -> frozenset:
    return frozenset(i for i in range(1, len(labels)) if labels[i - 1] > labels[i])


def descent_composition(labels: Sequence[int]) -> Composition:
    return composition_from_set(descent_set(labels), len(labels))


def modified_descent_set(labels: Sequence[int]) -> frozenset:
    if any(b == 0 for b in labels):
        raise ValueError("modified descents need nonzero labels")
    out = set()
    for i in range(1, len(labels)):
        a, b = labels[i - 1], labels[i]
        if a > b or (a == b and a < 0):
            out.add(i)
    return frozenset(out)


def modified_descent_composition(labels: Sequence[int]) -> Composition:
    return composition_from_set(modified_descent_set(labels), len(labels))


def peak_set(labels: Sequence[int]) -> frozenset:
    """Positions 1 < i < n with b_{i-1} <= b_i > b_{i+1} (1-indexed)."""
    n = len(labels)
    return frozenset(
        i for i in range(2, n) if labels[i - 2] <= labels[i - 1] > labels[i]
    )


def peak_composition(labels: Sequence[int]) -> Composition:
    if not labels:
        return Composition()
    return composition_from_set(peak_set(labels), len(labels))


class SignedPermutation(tuple):
    """A signed permutation in window notation (w(1), ..., w(n)).

    Products are composition of maps: (u * v)(i) = u(v(i)), with w(-i) = -w(i).
    Right multiplication by a simple reflection therefore acts on positions.
    """

    __slots__ = ()

    def __new__(cls, window: Iterable[int]) -> SignedPermutation:
        if isinstance(window, SignedPermutation):
            return window
        window = tuple(int(x) for x in window)
        if sorted(abs(x) for x in window) != list(range(1, len(window) + 1)):
            raise ValueError(f"not a signed permutation window: {window}")
        return super().__new__(cls, window)

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return tuple.__new__(cls, tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        if i > 0:
            return self[i - 1]
        return -self[-i - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return tuple.__new__(SignedPermutation, tuple(self(other(i)) for i in range(1, len(self) + 1)))

    def inverse(self) -> SignedPermutation:
        inv = [0] * len(self)
        for i, x in enumerate(self, start=1):
            inv[abs(x) - 1] = i if x > 0 else -i
        return tuple.__new__(SignedPermutation, tuple(inv))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self) + ")"

    def __repr__(self) -> str:
        return f"SignedPermutation{str(self)}"

    __hash__ = tuple.__hash__
    __eq__ = tuple.__eq__
    __ne__ = tuple.__ne__


def sign_changes(w: Sequence[int]) -> int:
    return sum(1 for x in w if x < 0)


def type_a_length(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def bn_length(w: Sequence[int]) -> int:
    """Coxeter length in B_n: inversions, negative pair sums, and negative entries."""
    n = len(w)
    inv = type_a_length(w)
    neg_pairs = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)
    return inv + neg_pairs + sign_changes(w)


def dn_length(w: Sequence[int]) -> int:
    """Coxeter length in D_n (w must have an even number of negative entries)."""
    n = len(w)
    inv = type_a_length(w)
    return inv + sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)


def bn_simple(i: int, n: int) -> SignedPermutation:
    """s_0 negates the first entry; s_i (i > 0) swaps positions i and i + 1."""
    w = list(range(1, n + 1))
    if i == 0:
        w[0] = -1
    elif 1 <= i < n:
        w[i - 1], w[i] = w[i], w[i - 1]
    else:
        raise ValueError(f"no simple reflection s_{i} in B_{n}")
    return tuple.__new__(SignedPermutation, tuple(w))


def dn_simple(name: str | int, n: int) -> SignedPermutation:
    """D_n generators s_1hat (w -> (-w2, -w1, ...)) and s_i, i >= 1, swapping positions i, i+1."""
    w = list(range(1, n + 1))
    if name == "1hat":
        if n < 2:
            raise ValueError("D_n needs n >= 2")
        w[0], w[1] = -2, -1
    else:
        i = int(name)
        if not 1 <= i < n:
            raise ValueError(f"no simple reflection s_{i} in D_{n}")
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple.__new__(SignedPermutation, tuple(w))


def bfs_lengths(generators: Sequence[SignedPermutation], n: int) -> dict:
    """Word length of every group element, by breadth-first search from the identity."""
    e = SignedPermutation.identity(n)
    dist = {e: 0}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        for s in generators:
            v = w * s
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist
