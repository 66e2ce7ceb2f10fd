"""Labelled oriented multigraphs (reseaux), chains, and the interval Hopf algebra.

A ranked poset is stored as a reseau whose edges are its covers, each with
multiplicity one.  Doubling and edge erasure produce genuine multigraphs.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping, NamedTuple, Sequence

from ._linear import add_into


class Edge(NamedTuple):
    source: str
    target: str
    label: int


class Chain(NamedTuple):
    start: str
    edges: tuple

    @property
    def labels(self) -> tuple:
        return tuple(e.label for e in self.edges)

    @property
    def end(self) -> str:
        return self.edges[-1].target if self.edges else self.start

    def __len__(self) -> int:
        return len(self.edges)


class ReseauError(ValueError):
    pass


class LabelledReseau:
    """Vertices with optional ranks and a multiset of integer-labelled edges.

    Vertex identifiers are strings.  Parallel edges (same endpoints, same or
    different labels) are distinct edges.  Instances are not modified after
    construction; derived tables are cached lazily.
    """

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[Sequence],
        rank: Mapping[str, int] | None = None,
        name: str = "",
    ):
        self.vertices: tuple = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ReseauError("duplicate vertex identifiers")
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self.rank: dict | None = dict(rank) if rank is not None else None
        self.name = name
        edge_list = []
        for e in edges:
            src, tgt, label = e[0], e[1], int(e[2])
            mult = int(e[3]) if len(e) > 3 else 1
            if src not in self._index or tgt not in self._index:
                raise ReseauError(f"edge {src}->{tgt} has an unknown endpoint")
            if mult < 1:
                raise ReseauError("edge multiplicity must be at least 1")
            edge_list.extend([Edge(src, tgt, label)] * mult)
        self.edges: tuple = tuple(edge_list)
        if self.rank is not None:
            missing = [v for v in self.vertices if v not in self.rank]
            if missing:
                raise ReseauError(f"vertices without rank: {missing[:3]}")
            for e in self.edges:
                if self.rank[e.target] != self.rank[e.source] + 1:
                    raise ReseauError(f"edge {e.source}->{e.target} does not raise rank by one")
        out: dict = defaultdict(list)
        inn: dict = defaultdict(list)
        for e in self.edges:
            out[e.source].append(e)
            inn[e.target].append(e)
        self._out = {v: tuple(out.get(v, ())) for v in self.vertices}
        self._in = {v: tuple(inn.get(v, ())) for v in self.vertices}
        self._paths_to: dict = {}

    # -- basic queries ---------------------------------------------------------

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<LabelledReseau{label}: {len(self.vertices)} vertices, {len(self.edges)} edges>"

    def __contains__(self, v) -> bool:
        return v in self._index

    @property
    def is_ranked(self) -> bool:
        return self.rank is not None

    def out_edges(self, v: str) -> tuple:
        return self._out[v]

    def in_edges(self, v: str) -> tuple:
        return self._in[v]

    def incidence(self, x: str, y: str) -> int:
        """E(x, y): the number of edges x -> y."""
        return sum(1 for e in self._out[x] if e.target == y)

    def labels_positive(self) -> bool:
        return all(e.label > 0 for e in self.edges)

    def minimal_elements(self) -> list:
        return [v for v in self.vertices if not self._in[v]]

    def maximal_elements(self) -> list:
        return [v for v in self.vertices if not self._out[v]]

    def check_vertex(self, v: str) -> str:
        if v not in self._index:
            raise ReseauError(f"unknown vertex {v!r}")
        return v

    def default_length(self, x: str, y: str, r: int | None = None) -> int:
        if r is not None:
            if r < 0:
                raise ValueError("path length must be nonnegative")
            return r
        if self.rank is None:
            raise ValueError("an unranked reseau needs an explicit path length")
        d = self.rank[y] - self.rank[x]
        if d < 0:
            raise ValueError(f"{y!r} has smaller rank than {x!r}")
        return d

    # -- path counting ---------------------------------------------------------

    def paths_to(self, y: str, r: int) -> list[dict]:
        """table[s][v] = E^s(v, y) for s = 0..r (only nonzero entries stored)."""
        cached = self._paths_to.get(y)
        if cached is None or len(cached) <= r:
            table = [{y: 1}] if cached is None else cached
            while len(table) <= r:
                prev = table[-1]
                nxt: dict = {}
                for v, c in prev.items():
                    for e in self._in[v]:
                        nxt[e.source] = nxt.get(e.source, 0) + c
                table.append(nxt)
            self._paths_to[y] = table
            cached = table
        return cached[: r + 1]

    def path_count(self, x: str, y: str, r: int) -> int:
        """E^r(x, y)."""
        return self.paths_to(y, r)[r].get(x, 0)

    def reachable(self, x: str, r: int) -> dict:
        """{y: E^r(x, y)} for E^r(x, y) > 0."""
        vec = {x: 1}
        for _ in range(r):
            nxt: dict = {}
            for v, c in vec.items():
                for e in self._out[v]:
                    nxt[e.target] = nxt.get(e.target, 0) + c
            vec = nxt
        return vec

    def leq(self, x: str, y: str) -> bool:
        """Reachability by some path (the order relation for posets)."""
        seen = {x}
        stack = [x]
        while stack:
            v = stack.pop()
            if v == y:
                return True
            for e in self._out[v]:
                if e.target not in seen:
                    seen.add(e.target)
                    stack.append(e.target)
        return False

    def intervals(self) -> Iterator[tuple]:
        """All (x, y, r) with x <= y in a ranked reseau, r the rank difference."""
        if self.rank is None:
            raise ValueError("intervals() needs a ranked reseau")
        for x in self.vertices:
            seen = {x}
            stack = [x]
            while stack:
                for e in self._out[stack.pop()]:
                    if e.target not in seen:
                        seen.add(e.target)
                        stack.append(e.target)
            for y in self.vertices:
                if y in seen:
                    yield (x, y, self.rank[y] - self.rank[x])

    # -- chains ----------------------------------------------------------------

    def chains(self, x: str, y: str, r: int | None = None) -> list[Chain]:
        """All paths of length r from x to y (depth first, pruned by path counts)."""
        r = self.default_length(self.check_vertex(x), self.check_vertex(y), r)
        table = self.paths_to(y, r)
        if not table[r].get(x):
            return []
        out: list = []

        def walk(v: str, remaining: int, acc: list) -> None:
            if remaining == 0:
                out.append(Chain(x, tuple(acc)))
                return
            nxt = table[remaining - 1]
            for e in self._out[v]:
                if e.target in nxt:
                    acc.append(e)
                    walk(e.target, remaining - 1, acc)
                    acc.pop()

        walk(x, r, [])
        return out

    def chains_from(self, x: str, k: int) -> Iterator[Chain]:
        """All paths of length k starting at x."""

        def walk(v: str, remaining: int, acc: list):
            if remaining == 0:
                yield Chain(x, tuple(acc))
                return
            for e in self._out[v]:
                acc.append(e)
                yield from walk(e.target, remaining - 1, acc)
                acc.pop()

        yield from walk(x, k, [])

    # -- serialization -----------------------------------------------------------

    def to_dict(self) -> dict:
        vertices = []
        for v in self.vertices:
            entry = {"id": v}
            if self.rank is not None:
                entry["rank"] = self.rank[v]
            vertices.append(entry)
        merged: dict = {}
        for e in self.edges:
            merged[e] = merged.get(e, 0) + 1
        edges = [
            {"from": e.source, "to": e.target, "label": e.label, "mult": m}
            for e, m in merged.items()
        ]
        return {"vertices": vertices, "edges": edges}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: Mapping, name: str = "") -> LabelledReseau:
        if not isinstance(data, Mapping) or "vertices" not in data or "edges" not in data:
            raise ReseauError('poset file needs top-level "vertices" and "edges"')
        ids, ranks = [], {}
        for entry in data["vertices"]:
            ids.append(str(entry["id"]))
            if "rank" in entry:
                ranks[str(entry["id"])] = int(entry["rank"])
        if ranks and len(ranks) != len(ids):
            raise ReseauError("either every vertex or no vertex carries a rank")
        edges = [
            (str(e["from"]), str(e["to"]), int(e.get("label", 1)), int(e.get("mult", 1)))
            for e in data["edges"]
        ]
        return cls(ids, edges, rank=ranks or None, name=name)

    @classmethod
    def loads(cls, text: str, name: str = "") -> LabelledReseau:
        return cls.from_dict(json.loads(text), name=name)

    def __eq__(self, other):
        if not isinstance(other, LabelledReseau):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.rank == other.rank
            and sorted(self.edges) == sorted(other.edges)
        )

    __hash__ = object.__hash__


def write_reseau(g: LabelledReseau, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(g.dumps())


def read_reseau(path) -> LabelledReseau:
    with open(path, encoding="utf-8") as fh:
        return LabelledReseau.loads(fh.read(), name=str(path))


def double(p: LabelledReseau) -> LabelledReseau:
    """Every edge x -b-> y gets a twin x -(-b)-> y."""
    if not p.labels_positive():
        raise ReseauError("doubling needs positive labels")
    edges = []
    for e in p.edges:
        edges.append(e)
        edges.append(Edge(e.source, e.target, -e.label))
    return LabelledReseau(p.vertices, edges, rank=p.rank, name=f"double({p.name})" if p.name else "")


def erase_negative(p: LabelledReseau, predicate: Callable[[str, str, int], bool]) -> LabelledReseau:
    """Drop each negative edge x -(-b)-> y for which predicate(x, y, b) holds."""
    edges = [e for e in p.edges if not (e.label < 0 and predicate(e.source, e.target, -e.label))]
    return LabelledReseau(p.vertices, edges, rank=p.rank, name=f"erase({p.name})" if p.name else "")


# -- the Hopf algebra of interval products ---------------------------------------


class Interval(NamedTuple):
    """The set [x, y]^(r) of length-r paths from x to y in a reseau."""

    reseau: LabelledReseau
    x: str
    y: str
    r: int

    def is_empty(self) -> bool:
        return self.reseau.path_count(self.x, self.y, self.r) == 0

    def is_unit(self) -> bool:
        return self.r == 0 and self.x == self.y

    def sort_key(self) -> tuple:
        return (self.reseau.name, id(self.reseau), self.x, self.y, self.r)

    def __str__(self) -> str:
        return f"[{self.x},{self.y}]^({self.r})"


@dataclass(frozen=True)
class IntervalProduct:
    """A formal product of intervals; the empty product is the unit."""

    factors: tuple = field(default=())

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors) if self.factors else "1"

    @property
    def degree(self) -> int:
        return sum(f.r for f in self.factors)


def interval_product(*factors: Interval) -> IntervalProduct | None:
    """Normalize: drop unit factors, sort; None if some factor is empty (the product is zero)."""
    kept = []
    for f in factors:
        if f.is_empty():
            return None
        if not f.is_unit():
            kept.append(f)
    return IntervalProduct(tuple(sorted(kept, key=Interval.sort_key)))


UNIT = IntervalProduct(())


def hp_element(*factors: Interval) -> dict:
    """The element of HP (a dict {IntervalProduct: coeff}) for a product of intervals."""
    ip = interval_product(*factors)
    return {} if ip is None else {ip: 1}


def hp_multiply(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for p, c in a.items():
        for q, d in b.items():
            ip = interval_product(*p.factors, *q.factors)
            if ip is not None:
                add_into(out, ip, c * d)
    return out


def interval_coproduct(f: Interval) -> dict:
    """sum over s and z of [x,z]^(s) (x) [z,y]^(r-s), empty terms dropped."""
    g = f.reseau
    out: dict = {}
    to_y = g.paths_to(f.y, f.r)
    for s in range(f.r + 1):
        for z, cnt in g.reachable(f.x, s).items():
            if not to_y[f.r - s].get(z):
                continue
            left = interval_product(Interval(g, f.x, z, s))
            right = interval_product(Interval(g, z, f.y, f.r - s))
            add_into(out, (left, right), 1)
    return out


def hp_coproduct(a) -> dict:
    """Coproduct of an interval product or of an HP element; returns {(P, Q): coeff}."""
    if isinstance(a, IntervalProduct):
        a = {a: 1}
    out: dict = {}
    for ip, c in a.items():
        acc = {(UNIT, UNIT): 1}
        for f in ip.factors:
            nxt: dict = {}
            for (l1, r1), c1 in acc.items():
                for (l2, r2), c2 in interval_coproduct(f).items():
                    left = interval_product(*l1.factors, *l2.factors)
                    right = interval_product(*r1.factors, *r2.factors)
                    add_into(nxt, (left, right), c1 * c2)
            acc = nxt
        for k, v in acc.items():
            add_into(out, k, c * v)
    return out


def hp_counit(a: Mapping) -> int:
    return a.get(UNIT, 0)


def hp_antipode(a) -> dict:
    """Antipode by the graded recursion s(x) = -sum s(y) z over terms with deg y < deg x."""
    if isinstance(a, IntervalProduct):
        a = {a: 1}
    cache: dict = {}

    def s_basis(ip: IntervalProduct) -> dict:
        if ip in cache:
            return cache[ip]
        if not ip.factors:
            result = {UNIT: 1}
        else:
            result = {}
            n = ip.degree
            for (left, right), c in hp_coproduct(ip).items():
                if left.degree == n:
                    continue
                for k, v in hp_multiply(s_basis(left), {right: 1}).items():
                    add_into(result, k, -c * v)
        cache[ip] = result
        return result

    out: dict = {}
    for ip, c in a.items():
        for k, v in s_basis(ip).items():
            add_into(out, k, c * v)
    return out


def hp_tensor_coassociativity(a) -> tuple[dict, dict]:
    """((Delta (x) 1) Delta a, (1 (x) Delta) Delta a) as dicts over triples."""
    d = hp_coproduct(a)
    left: dict = {}
    right: dict = {}
    for (p, q), c in d.items():
        for (p1, p2), c1 in hp_coproduct(p).items():
            add_into(left, (p1, p2, q), c * c1)
        for (q1, q2), c2 in hp_coproduct(q).items():
            add_into(right, (p, q1, q2), c * c2)
    return left, right
