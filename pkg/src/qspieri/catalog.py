"""Constructors for the labelled posets and reseaux used throughout, with brute-force oracles.

Vertex identifiers are strings: subsets are written "{1,2}", partitions and
sequences "(2,1)", permutations and signed permutations by their window
"(-2,1,3)", order ideals by their sorted elements "{0,2}".
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import combinat
from ._linear import add_into
from .combinat import Composition, Partition, SignedPermutation, partitions
from .poset import Edge, LabelledReseau, ReseauError, double, erase_negative
from .qsym import QSymElem, theta, zero


class CostGuard(ValueError):
    """Raised when a constructor or oracle is asked for something too large."""


def _guard(ok: bool, message: str) -> None:
    if not ok:
        raise CostGuard(message)


# -- Boolean lattices and chains ------------------------------------------------------


def subset_id(s: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def boolean_lattice(n: int) -> LabelledReseau:
    """Subsets of {1..n}; the cover S < S + {i} is labelled i."""
    _guard(0 <= n <= 10, "boolean_lattice needs 0 <= n <= 10")
    subsets = [s for r in range(n + 1) for s in itertools.combinations(range(1, n + 1), r)]
    edges = []
    for s in subsets:
        for i in range(1, n + 1):
            if i not in s:
                edges.append((subset_id(s), subset_id(s + (i,)), i))
    return LabelledReseau(
        [subset_id(s) for s in subsets], edges, rank={subset_id(s): len(s) for s in subsets},
        name=f"boolean:{n}",
    )


def chain(n: int, labels: Sequence[int] | None = None) -> LabelledReseau:
    """The chain 0 < 1 < ... < n-1 with n elements; covers labelled 1 unless given."""
    _guard(n >= 1, "a chain has at least one element")
    if labels is None:
        labels = [1] * (n - 1)
    if len(labels) != n - 1:
        raise ValueError("a chain on n elements has n - 1 covers")
    vs = [str(i) for i in range(n)]
    edges = [(vs[i], vs[i + 1], labels[i]) for i in range(n - 1)]
    return LabelledReseau(vs, edges, rank={v: i for i, v in enumerate(vs)}, name=f"chain:{n}")


# -- Young's lattice ------------------------------------------------------------------


def young_lattice_interval(mu: Sequence[int], bound: Sequence[int]) -> LabelledReseau:
    """Partitions nu with mu contained in nu contained in bound.

    The cover nu < nu + box in row i, column j (1-based) is labelled by the
    content j - i of the added box.
    """
    mu, bound = Partition(mu), Partition(bound)
    if not bound.contains(mu):
        raise ValueError(f"{mu} is not contained in {bound}")
    _guard(bound.weight <= 12, "Young's lattice intervals are limited to |bound| <= 12")
    shapes = []

    def rec(i: int, acc: list) -> None:
        if i == len(bound):
            shapes.append(Partition(acc))
            return
        lo = mu[i] if i < len(mu) else 0
        hi = bound[i] if i == 0 else min(bound[i], acc[-1])
        for v in range(lo, hi + 1):
            rec(i + 1, acc + [v])

    rec(0, [])
    ids = {s: str(s) for s in shapes}
    edges = []
    for s in shapes:
        rows = list(s) + [0] * (len(bound) - len(s))
        for i in range(len(bound)):
            if rows[i] < bound[i] and (i == 0 or rows[i] < rows[i - 1]):
                t = rows.copy()
                t[i] += 1
                col = t[i]
                edges.append((ids[s], ids[Partition(t)], col - (i + 1)))
    return LabelledReseau(
        [ids[s] for s in shapes], edges, rank={ids[s]: s.weight for s in shapes},
        name=f"young[{mu},{bound}]",
    )


def young_lattice_upto(n: int) -> LabelledReseau:
    """All partitions of size at most n, with content labels."""
    _guard(0 <= n <= 10, "young_lattice_upto needs n <= 10")
    shapes = [lam for k in range(n + 1) for lam in partitions(k)]
    seen = set(shapes)
    edges = []
    for s in shapes:
        rows = list(s) + [0]
        for i in range(len(rows)):
            if i == 0 or rows[i] < rows[i - 1]:
                t = rows.copy()
                t[i] += 1
                nu = Partition(v for v in t if v)
                if nu in seen:
                    edges.append((str(s), str(nu), t[i] - (i + 1)))
    return LabelledReseau(
        [str(s) for s in shapes], edges, rank={str(s): s.weight for s in shapes}, name=f"young<={n}",
    )


# -- symmetric groups -------------------------------------------------------------------


def perm_id(w: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def _permutations(n: int) -> list[tuple]:
    return list(itertools.permutations(range(1, n + 1)))


def weak_order_Sn(n: int) -> LabelledReseau:
    """Right weak order: w < w(i,i+1), labelled i, when the length goes up by one."""
    _guard(1 <= n <= 6, "weak_order_Sn needs 1 <= n <= 6")
    perms = _permutations(n)
    edges = []
    for w in perms:
        lw = combinat.type_a_length(w)
        for i in range(1, n):
            v = list(w)
            v[i - 1], v[i] = v[i], v[i - 1]
            if combinat.type_a_length(v) == lw + 1:
                edges.append((perm_id(w), perm_id(v), i))
    return LabelledReseau(
        [perm_id(w) for w in perms], edges,
        rank={perm_id(w): combinat.type_a_length(w) for w in perms}, name=f"weakS:{n}",
    )


def k_bruhat_Sn(n: int, k: int) -> LabelledReseau:
    """k-Bruhat order: u < u(i,j) with i <= k < j and length up by one, labelled max(u(i), u(j))."""
    _guard(1 <= n <= 6, "k_bruhat_Sn needs n <= 6")
    if not 1 <= k < n:
        raise ValueError("k-Bruhat order needs 1 <= k < n")
    perms = _permutations(n)
    edges = []
    for u in perms:
        lu = combinat.type_a_length(u)
        for i in range(1, k + 1):
            for j in range(k + 1, n + 1):
                w = list(u)
                w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
                if combinat.type_a_length(w) == lu + 1:
                    # w u^{-1} is the transposition of the values u(i), u(j)
                    edges.append((perm_id(u), perm_id(w), max(u[i - 1], u[j - 1])))
    return LabelledReseau(
        [perm_id(w) for w in perms], edges,
        rank={perm_id(w): combinat.type_a_length(w) for w in perms}, name=f"kbruhat:{n}:{k}",
    )


# -- signed permutations -------------------------------------------------------------------


@lru_cache(maxsize=None)
def signed_permutations(n: int) -> tuple:
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(SignedPermutation(tuple(s * x for s, x in zip(signs, perm))))
    return tuple(out)


def even_signed_permutations(n: int) -> tuple:
    return tuple(w for w in signed_permutations(n) if combinat.sign_changes(w) % 2 == 0)


def weak_order_Bn(n: int) -> LabelledReseau:
    """w < w s_i labelled i + 1 (so s_0 gives label 1)."""
    _guard(1 <= n <= 4, "weak_order_Bn needs 1 <= n <= 4")
    gens = [combinat.bn_simple(i, n) for i in range(n)]
    group = signed_permutations(n)
    edges = []
    for w in group:
        lw = combinat.bn_length(w)
        for i, s in enumerate(gens):
            v = w * s
            if combinat.bn_length(v) == lw + 1:
                edges.append((perm_id(w), perm_id(v), i + 1))
    return LabelledReseau(
        [perm_id(w) for w in group], edges,
        rank={perm_id(w): combinat.bn_length(w) for w in group}, name=f"weakB:{n}",
    )


# label encoding for D_n: 1hat -> 1, 1 -> 2, i -> i + 1
D_HAT_LABEL = 1


def dn_label(name: str | int) -> int:
    return D_HAT_LABEL if name == "1hat" else int(name) + 1


def dn_label_name(label: int) -> str:
    return "1hat" if label == D_HAT_LABEL else str(label - 1)


def dn_generator_names(n: int) -> list:
    return ["1hat"] + list(range(1, n))


def weak_order_Dn(n: int) -> LabelledReseau:
    """w < w s_i labelled by i, with 1hat < 1 < 2 < ..., encoded as integers by dn_label."""
    _guard(2 <= n <= 4, "weak_order_Dn needs 2 <= n <= 4")
    names = dn_generator_names(n)
    gens = [combinat.dn_simple(a, n) for a in names]
    group = even_signed_permutations(n)
    edges = []
    for w in group:
        lw = combinat.dn_length(w)
        for a, s in zip(names, gens):
            v = w * s
            if combinat.dn_length(v) == lw + 1:
                edges.append((perm_id(w), perm_id(v), dn_label(a)))
    return LabelledReseau(
        [perm_id(w) for w in group], edges,
        rank={perm_id(w): combinat.dn_length(w) for w in group}, name=f"weakD:{n}",
    )


def _classify_zero_bruhat(u: SignedPermutation, w: SignedPermutation) -> tuple | None:
    """("sign", beta) if w u^{-1} = (-beta, beta); ("pair", beta) if w u^{-1} = (-b,-a)(a,b), a < b = beta."""
    v = w * u.inverse()
    moved = [i for i in range(1, len(v) + 1) if v(i) != i]
    if len(moved) == 1 and v(moved[0]) == -moved[0]:
        return ("sign", moved[0])
    if len(moved) == 2:
        a, b = moved
        if v(a) == b and v(b) == a:
            return ("pair", b)
    return None


def zero_bruhat_Bn(n: int) -> LabelledReseau:
    """The 0-Bruhat order on B_n.

    u < w when l(w) = l(u) + 1 and w = u t with t negating one position, or t
    sending positions i, j to -j, -i.  The cover is kept when w u^{-1} is
    (-beta, beta) or (-beta, -alpha)(alpha, beta) with alpha < beta, and is
    labelled beta.
    """
    _guard(1 <= n <= 4, "zero_bruhat_Bn needs 1 <= n <= 4")
    group = signed_permutations(n)
    edges = []
    for u in group:
        lu = combinat.bn_length(u)
        targets = []
        for i in range(n):
            w = list(u)
            w[i] = -w[i]
            targets.append(w)
        for i in range(n):
            for j in range(i + 1, n):
                w = list(u)
                w[i], w[j] = -u[j], -u[i]
                targets.append(w)
        for w in targets:
            w = SignedPermutation(w)
            if combinat.bn_length(w) != lu + 1:
                continue
            kind = _classify_zero_bruhat(u, w)
            if kind is not None:
                edges.append((perm_id(u), perm_id(w), kind[1]))
    return LabelledReseau(
        [perm_id(w) for w in group], edges,
        rank={perm_id(w): combinat.bn_length(w) for w in group}, name=f"bruhat0B:{n}",
    )


def parse_window(text: str) -> SignedPermutation:
    return SignedPermutation(combinat.parse_parts(text))


def is_sign_change_cover(u: str, w: str) -> bool:
    kind = _classify_zero_bruhat(parse_window(u), parse_window(w))
    return kind is not None and kind[0] == "sign"


def lagrangian_zero_bruhat(n: int) -> LabelledReseau:
    """delta B_n^0 with the negative edge removed on covers where w u^{-1} = (-beta, beta)."""
    return erase_negative(double(zero_bruhat_Bn(n)), lambda u, w, b: is_sign_change_cover(u, w))


def lagrangian_weak_Bn(n: int) -> LabelledReseau:
    """delta of weak order B_n with the edges labelled -1 (the s_0 covers) removed."""
    return erase_negative(double(weak_order_Bn(n)), lambda u, w, b: b == 1)


def lagrangian_weak_Dn(n: int) -> LabelledReseau:
    """delta of weak order D_n with the edges labelled -1 and -1hat removed."""
    return erase_negative(double(weak_order_Dn(n)), lambda u, w, b: b in (dn_label("1hat"), dn_label(1)))


def sign_change_count(u: str, w: str) -> int:
    return sum(1 for a, b in zip(parse_window(u), parse_window(w)) if (a < 0) != (b < 0))


# -- Stanley symmetric functions of types B, C, D ----------------------------------------------


def _e(n: int) -> str:
    return perm_id(range(1, n + 1))


def stanley_B(w: Sequence[int]) -> QSymElem:
    """K of the modified descent operators on delta(weak order B_n) over [e, w]."""
    from .pieri import ModifiedDescent, kfunction

    w = SignedPermutation(w)
    _guard(len(w) <= 3 and combinat.bn_length(w) <= 6, "stanley_B needs n <= 3, length <= 6")
    g = _cached("dB", len(w))
    return kfunction(ModifiedDescent(g), _e(len(w)), perm_id(w))


def stanley_C(w: Sequence[int]) -> QSymElem:
    """K of the modified descent operators on L B_n over [e, w]."""
    from .pieri import ModifiedDescent, kfunction

    w = SignedPermutation(w)
    _guard(len(w) <= 3 and combinat.bn_length(w) <= 6, "stanley_C needs n <= 3, length <= 6")
    g = _cached("LB", len(w))
    return kfunction(ModifiedDescent(g), _e(len(w)), perm_id(w))


def stanley_D(w: Sequence[int]) -> QSymElem:
    """K of the modified descent operators on L D_n over [e, w]."""
    from .pieri import ModifiedDescent, kfunction

    w = SignedPermutation(w)
    _guard(2 <= len(w) <= 3 and combinat.dn_length(w) <= 6, "stanley_D needs 2 <= n <= 3, length <= 6")
    if combinat.sign_changes(w) % 2:
        raise ValueError(f"{w} is not in D_{len(w)}")
    g = _cached("LD", len(w))
    return kfunction(ModifiedDescent(g), _e(len(w)), perm_id(w))


@lru_cache(maxsize=None)
def _cached(kind: str, n: int) -> LabelledReseau:
    if kind == "dB":
        return double(weak_order_Bn(n))
    if kind == "LB":
        return lagrangian_weak_Bn(n)
    if kind == "LD":
        return lagrangian_weak_Dn(n)
    if kind == "B":
        return weak_order_Bn(n)
    if kind == "D":
        return weak_order_Dn(n)
    raise KeyError(kind)


def reduced_words(w: Sequence[int], group: str) -> list[tuple]:
    """Reduced words of w built letter by letter with signed permutations directly.

    Type B letters are i + 1 for s_i; type D letters use the dn_label encoding.
    """
    w = SignedPermutation(w)
    n = len(w)
    if group == "B":
        gens = [(i + 1, combinat.bn_simple(i, n)) for i in range(n)]
        length = combinat.bn_length
    elif group == "D":
        gens = [(dn_label(a), combinat.dn_simple(a, n)) for a in dn_generator_names(n)]
        length = combinat.dn_length
    else:
        raise ValueError("group must be 'B' or 'D'")
    target = length(w)
    out = []

    def rec(v: SignedPermutation, word: tuple) -> None:
        # v = w s_{a_k} ... s_{a_j}: peel letters off the right end
        if len(word) == target:
            if v == SignedPermutation.identity(n):
                out.append(word[::-1])
            return
        lv = length(v)
        for letter, s in gens:
            u = v * s
            if length(u) == lv - 1:
                rec(u, word + (letter,))

    rec(w, ())
    return sorted(out)


def stanley_B_oracle(w: Sequence[int]) -> QSymElem:
    """sum over reduced words a of theta of the peak composition of a."""
    out: dict = {}
    for a in reduced_words(w, "B"):
        add_into(out, combinat.peak_composition(a), 1)
    return _theta_sum(out)


def stanley_D_oracle(w: Sequence[int]) -> QSymElem:
    """sum over reduced words a of 2^{-o(a)} theta of the peak composition of a with 1hat read as 1."""
    out: dict = {}
    hat, one = dn_label("1hat"), dn_label(1)
    for a in reduced_words(w, "D"):
        o = sum(1 for x in a if x in (hat, one))
        merged = tuple(one if x == hat else x for x in a)
        add_into(out, combinat.peak_composition(merged), Fraction(1, 2 ** o))
    return _theta_sum(out)


def _theta_sum(coeffs: Mapping) -> QSymElem:
    out = zero()
    for alpha, c in coeffs.items():
        out = out + theta(alpha).scale(c)
    return out


# -- labelled posets, order ideals, P-partitions ----------------------------------------------


@dataclass(frozen=True)
class VertexLabelledPoset:
    """A poset on 0..n-1 given by its relations x < y, with a labelling gamma."""

    n: int
    relations: frozenset
    gamma: tuple

    def __post_init__(self):
        if len(self.gamma) != self.n:
            raise ValueError("one label per element")
        for x, y in self.relations:
            if not (0 <= x < self.n and 0 <= y < self.n) or x == y:
                raise ValueError(f"bad relation {(x, y)}")
        closure = transitive_closure(self.n, self.relations)
        if any((y, x) in closure for x, y in closure):
            raise ValueError("relations contain a cycle")
        object.__setattr__(self, "relations", closure)

    def less(self, x: int, y: int) -> bool:
        return (x, y) in self.relations

    def covers(self) -> list[tuple]:
        rel = self.relations
        return [
            (x, y) for x, y in rel
            if not any((x, z) in rel and (z, y) in rel for z in range(self.n))
        ]

    def linear_extensions(self) -> list[tuple]:
        out = []

        def rec(placed: tuple, left: frozenset) -> None:
            if not left:
                out.append(placed)
                return
            for x in sorted(left):
                if not any((y, x) in self.relations for y in left if y != x):
                    rec(placed + (x,), left - {x})

        rec((), frozenset(range(self.n)))
        return out

    def relabel(self, gamma: Sequence[int]) -> VertexLabelledPoset:
        return VertexLabelledPoset(self.n, self.relations, tuple(gamma))


def transitive_closure(n: int, relations: Iterable[tuple]) -> frozenset:
    rel = set(relations)
    for z in range(n):
        for x in range(n):
            if (x, z) in rel:
                for y in range(n):
                    if (z, y) in rel:
                        rel.add((x, y))
    return frozenset(rel)


def ideal_lattice(p: VertexLabelledPoset) -> LabelledReseau:
    """Lower order ideals ordered by inclusion; I < I + {x} labelled gamma(x)."""
    _guard(p.n <= 10, "ideal_lattice needs at most 10 elements")
    ideals = []
    for r in range(p.n + 1):
        for s in itertools.combinations(range(p.n), r):
            ss = set(s)
            if all(x in ss for (x, y) in p.relations if y in ss):
                ideals.append(s)
    edges = []
    for s in ideals:
        ss = set(s)
        for x in range(p.n):
            if x not in ss and all(y in ss for (y, z) in p.relations if z == x):
                edges.append((subset_id(s), subset_id(sorted(ss | {x})), p.gamma[x]))
    return LabelledReseau(
        [subset_id(s) for s in ideals], edges, rank={subset_id(s): len(s) for s in ideals},
        name="ideals",
    )


def enumerate_p_partitions(p: VertexLabelledPoset, parts_bound: int) -> dict:
    """sum over (P, gamma)-partitions f into {1..parts_bound} of prod z_{f(x)}.

    Returned as {exponent tuple of length parts_bound: count}.
    """
    _guard(1 <= parts_bound <= 6, "parts_bound must be between 1 and 6")
    _guard(p.n <= 6, "P-partition enumeration needs at most 6 elements")
    order = p.linear_extensions()[0]
    preds = {x: [y for y in range(p.n) if p.less(y, x)] for x in range(p.n)}
    out: dict = {}
    f = [0] * p.n

    def ok(x: int, v: int) -> bool:
        for y in preds[x]:
            if f[y] > v or (f[y] == v and p.gamma[y] > p.gamma[x]):
                return False
        return True

    def rec(i: int) -> None:
        if i == p.n:
            exp = [0] * parts_bound
            for v in f:
                exp[v - 1] += 1
            key = tuple(exp)
            out[key] = out.get(key, 0) + 1
            return
        x = order[i]
        for v in range(1, parts_bound + 1):
            if ok(x, v):
                f[x] = v
                rec(i + 1)

    rec(0)
    return out


def enumerate_enriched(p: VertexLabelledPoset, parts_bound: int, convention: str = "peak") -> dict:
    """Enriched (P, gamma)-partitions into 1bar < 1 < 2bar < ... < parts_bound, with z_kbar = z_k.

    f is order preserving.  For x < y with f(x) = f(y), the "peak" convention
    requires gamma(x) > gamma(y) at a barred value and gamma(x) < gamma(y) at an
    unbarred one; this is the convention under which a linear extension
    contributes theta of its peak composition.  The "literal" convention swaps
    the two conditions (it corresponds to order-reversing maps).
    """
    _guard(1 <= parts_bound <= 6, "parts_bound must be between 1 and 6")
    _guard(p.n <= 6, "enriched enumeration needs at most 6 elements")
    if convention not in ("peak", "literal"):
        raise ValueError("convention must be 'peak' or 'literal'")
    barred_needs_increase = convention == "literal"
    order = p.linear_extensions()[0]
    preds = {x: [y for y in range(p.n) if p.less(y, x)] for x in range(p.n)}
    # value 2k - 1 is kbar, 2k is k
    values = range(1, 2 * parts_bound + 1)
    out: dict = {}
    f = [0] * p.n

    def ok(x: int, v: int) -> bool:
        for y in preds[x]:
            if f[y] > v:
                return False
            if f[y] == v:
                increase = p.gamma[y] < p.gamma[x]
                if (v % 2 == 1) == barred_needs_increase:
                    if not increase:
                        return False
                elif increase:
                    return False
        return True

    def rec(i: int) -> None:
        if i == p.n:
            exp = [0] * parts_bound
            for v in f:
                exp[(v - 1) // 2] += 1
            key = tuple(exp)
            out[key] = out.get(key, 0) + 1
            return
        x = order[i]
        for v in values:
            if ok(x, v):
                f[x] = v
                rec(i + 1)

    rec(0)
    return out


def monomial_truncation(x: QSymElem, nvars: int) -> dict:
    """x(z_1, ..., z_nvars, 0, 0, ...) as {exponent tuple: coefficient}."""
    out: dict = {}
    for alpha, c in x.to_M()._coeffs.items():
        if len(alpha) > nvars:
            continue
        for support in itertools.combinations(range(nvars), len(alpha)):
            exp = [0] * nvars
            for i, a in zip(support, alpha):
                exp[i] = a
            add_into(out, tuple(exp), c)
    return out


def fundamental_p_partition_sum(p: VertexLabelledPoset) -> QSymElem:
    """sum over linear extensions w of F_{D(w, gamma)}."""
    out: dict = {}
    for w in p.linear_extensions():
        add_into(out, combinat.descent_composition([p.gamma[x] for x in w]), 1)
    return QSymElem._raw({k: Fraction(v) for k, v in out.items()}, "F").to_M()


def peak_p_partition_sum(p: VertexLabelledPoset) -> QSymElem:
    """sum over linear extensions w of theta of the peak composition of (w, gamma)."""
    out: dict = {}
    for w in p.linear_extensions():
        add_into(out, combinat.peak_composition([p.gamma[x] for x in w]), 1)
    return _theta_sum(out)


def _canonical_relations(n: int, rel: frozenset) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted((perm[x], perm[y]) for x, y in rel))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def posets_up_to_isomorphism(n: int) -> tuple:
    """One naturally labelled representative (x < y implies x < y as integers) per isomorphism class."""
    _guard(0 <= n <= 5, "poset generation is limited to 5 elements")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen: dict = {}
    for mask in range(1 << len(pairs)):
        rel = frozenset(pr for b, pr in enumerate(pairs) if mask >> b & 1)
        if transitive_closure(n, rel) != rel:
            continue
        key = _canonical_relations(n, rel)
        if key not in seen:
            seen[key] = rel
    reps = sorted(seen.values(), key=lambda r: (len(r), sorted(r)))
    return tuple(VertexLabelledPoset(n, r, tuple(range(1, n + 1))) for r in reps)


def labelings(n: int, exhaustive_up_to: int = 4, samples: int = 4, seed: int = 0) -> list[tuple]:
    """Injective labellings by {1..n}: all of them for n <= exhaustive_up_to, else a fixed sample."""
    if n <= exhaustive_up_to:
        return list(itertools.permutations(range(1, n + 1)))
    rng = random.Random(seed + n)
    out = [tuple(range(1, n + 1)), tuple(range(n, 0, -1))]
    while len(out) < samples:
        g = list(range(1, n + 1))
        rng.shuffle(g)
        if tuple(g) not in out:
            out.append(tuple(g))
    return out


# -- the quantum poset C_{m,p} ------------------------------------------------------------


def _check_mp(m: int, p: int) -> None:
    if m < 1 or p < 1:
        raise ValueError("C_{m,p} needs m, p >= 1")


def is_quantum_sequence(alpha: Sequence[int], m: int, p: int) -> bool:
    return (
        len(alpha) == p
        and alpha[0] >= 1
        and all(a < b for a, b in zip(alpha, alpha[1:]))
        and alpha[-1] - alpha[0] < m + p
    )


def index_to_sequence(a: int, lam: Sequence[int], m: int, p: int) -> tuple:
    """(a, lambda) -> alpha: start from the residues lambda_i + p + 1 - i, then rotate a times."""
    _check_mp(m, p)
    lam = tuple(lam) + (0,) * (p - len(lam))
    if a < 0 or len(lam) > p or any(x > m or x < 0 for x in lam) or list(lam) != sorted(lam, reverse=True):
        raise ValueError(f"bad quantum index ({a}, {lam}) for m={m}, p={p}")
    seq = sorted(lam[i] + p - i for i in range(p))
    for _ in range(a):
        seq = seq[1:] + [seq[0] + m + p]
    return tuple(seq)


def sequence_to_index(alpha: Sequence[int], m: int, p: int) -> tuple:
    """alpha -> (a, lambda) with lambda a partition in a p x m box."""
    _check_mp(m, p)
    alpha = tuple(alpha)
    if not is_quantum_sequence(alpha, m, p):
        raise ValueError(f"{alpha} is not a vertex of C_{{{m},{p}}}")
    n = m + p
    c = sorted(((x - 1) % n + 1 for x in alpha), reverse=True)
    lam = tuple(c[i] - (p - i) for i in range(p))
    num = sum(alpha) - sum(lam) - p * (p + 1) // 2
    if num % n:
        raise ValueError("inconsistent quantum index")
    return num // n, tuple(x for x in lam if x)


def quantum_id(alpha: Sequence[int]) -> str:
    return perm_id(alpha)


def quantum_poset(m: int, p: int, max_rank: int | None = None) -> LabelledReseau:
    """Vertices of C_{m,p} up to rank max_rank (rank = sum of entries).

    alpha < alpha + e_i labelled by the new entry alpha_i + 1.
    """
    _check_mp(m, p)
    base = p * (p + 1) // 2
    if max_rank is None:
        max_rank = base + 8
    _guard(max_rank - base <= 16, "quantum_poset is limited to 16 ranks above the bottom")
    verts = []

    def rec(i: int, acc: list, total: int) -> None:
        if i == p:
            verts.append(tuple(acc))
            return
        lo = acc[-1] + 1 if acc else 1
        remaining = p - i - 1
        v = lo
        while True:
            # the smallest completion adds v+1, ..., v+remaining
            if total + v * (remaining + 1) + remaining * (remaining + 1) // 2 > max_rank:
                break
            if not acc or v - acc[0] < m + p:
                rec(i + 1, acc + [v], total + v)
            else:
                break
            v += 1

    rec(0, [], 0)
    vs = set(verts)
    edges = []
    for a in verts:
        for i in range(p):
            b = list(a)
            b[i] += 1
            b = tuple(b)
            if b in vs:
                edges.append((quantum_id(a), quantum_id(b), b[i]))
    return LabelledReseau(
        [quantum_id(a) for a in verts], edges, rank={quantum_id(a): sum(a) for a in verts},
        name=f"quantum:{m}:{p}",
    )


def quantum_vertex(a: int, lam: Sequence[int], m: int, p: int) -> str:
    return quantum_id(index_to_sequence(a, lam, m, p))


# -- catalog lookup ------------------------------------------------------------------------


CATALOG_HELP = (
    "boolean:N, chain:N, young, weakS:N, weakB:N, weakD:N, bruhat0B:N, kbruhat:N:K, quantum:M:P[:RANK]"
)


def from_name(name: str, *, target: str | None = None) -> LabelledReseau:
    """Build a catalog reseau from a name such as "boolean:3" or "kbruhat:3:1".

    Young's lattice is built as the finite interval below ``target``.
    """
    parts = name.split(":")
    head, args = parts[0], parts[1:]
    try:
        nums = [int(a) for a in args]
    except ValueError as exc:
        raise ValueError(f"bad catalog parameters in {name!r}") from exc

    def need(k: int) -> None:
        if len(nums) != k:
            raise ValueError(f"catalog:{head} takes {k} parameter(s)")

    if head == "boolean":
        need(1)
        return boolean_lattice(nums[0])
    if head == "chain":
        need(1)
        return chain(nums[0])
    if head == "young":
        if nums:
            raise ValueError("catalog:young takes no parameters")
        bound = combinat.parse_parts(target) if target else (2, 1)
        return young_lattice_interval((), Partition(bound))
    if head == "weakS":
        need(1)
        return weak_order_Sn(nums[0])
    if head == "weakB":
        need(1)
        return weak_order_Bn(nums[0])
    if head == "weakD":
        need(1)
        return weak_order_Dn(nums[0])
    if head == "bruhat0B":
        need(1)
        return zero_bruhat_Bn(nums[0])
    if head == "kbruhat":
        need(2)
        return k_bruhat_Sn(nums[0], nums[1])
    if head == "quantum":
        if len(nums) not in (2, 3):
            raise ValueError("catalog:quantum takes M:P or M:P:RANK")
        return quantum_poset(nums[0], nums[1], nums[2] if len(nums) == 3 else None)
    raise ValueError(f"unknown catalog entry {head!r}; known: {CATALOG_HELP}")


def resolve_vertex(g: LabelledReseau, text: str) -> str:
    """Accept a vertex id or an alias: e, s0, s1, s1hat (Coxeter generators), compact windows like 321."""
    t = text.strip().replace(" ", "")
    if t in g:
        return t
    if not g.vertices:
        raise ReseauError("empty reseau")
    sample = g.vertices[0]
    if t.startswith("(") or t.startswith("{"):
        # normalize spacing / empty partitions written "()"
        body = t.strip("(){}")
        for cand in ("(" + body + ")", "{" + body + "}"):
            if cand in g:
                return cand
        raise ReseauError(f"unknown vertex {text!r}")
    if sample.startswith("(") and "," in sample or sample in ("(1)", "(-1)"):
        n = len(combinat.parse_parts(sample))
        e = list(range(1, n + 1))
        if t == "e":
            cand = perm_id(e)
        elif t.isdigit() and len(t) == n:
            cand = perm_id(int(ch) for ch in t)
        elif t == "s1hat":
            cand = perm_id(combinat.dn_simple("1hat", n))
        elif t.startswith("s") and t[1:].isdigit():
            i = int(t[1:])
            try:
                cand = perm_id(combinat.bn_simple(i, n))
            except ValueError as exc:
                raise ReseauError(str(exc)) from exc
        else:
            raise ReseauError(f"unknown vertex {text!r}")
        if cand in g:
            return cand
    raise ReseauError(f"unknown vertex {text!r}")


def _horizontal_strips(lam: Sequence[int], k: int, rows: int) -> list[tuple]:
    """nu with nu/lam a horizontal strip of size k and at most `rows` rows."""
    lam = tuple(lam) + (0,) * (rows - len(lam))
    out = []

    def rec(i: int, left: int, acc: list) -> None:
        if i == rows:
            if left == 0:
                out.append(tuple(acc))
            return
        hi = lam[i] + left if i == 0 else min(lam[i] + left, lam[i - 1])
        for v in range(lam[i], hi + 1):
            rec(i + 1, left - (v - lam[i]), acc + [v])

    rec(0, k, [])
    return out


def _reduce_rim_hooks(nu: tuple, m: int, p: int) -> tuple | None:
    """Strip (m+p)-rim hooks until nu fits in the p x m box: (sign, q-power, partition) or None for zero."""
    n = m + p
    q, sign = 0, 1
    nu = list(nu)
    while nu and nu[0] > m:
        beads = {nu[i] + p - 1 - i for i in range(p)}
        moves = [x for x in beads if x - n >= 0 and (x - n) not in beads]
        if not moves:
            return None
        if len(moves) > 1:
            raise AssertionError("rim hook removal is not unique")
        x = moves[0]
        leg = sum(1 for b in beads if x - n < b < x)
        beads = (beads - {x}) | {x - n}
        sign *= (-1) ** (p - 1 - leg)
        q += 1
        ordered = sorted(beads, reverse=True)
        nu = [ordered[i] - (p - 1 - i) for i in range(p)]
    return sign, q, tuple(v for v in nu if v)


def quantum_pieri_oracle(a: int, lam: Sequence[int], k: int, m: int, p: int) -> dict:
    """q^a sigma_lam * sigma_k in the quantum cohomology of Gr(p, m+p), by the rim hook algorithm.

    Returns {(b, mu): coefficient}.  Independent of the chain-based operators.
    """
    out: dict = {}
    for nu in _horizontal_strips(lam, k, p):
        red = _reduce_rim_hooks(nu, m, p)
        if red is None:
            continue
        sign, dq, mu = red
        add_into(out, (a + dq, mu), sign)
    return out
