"""t-periodic vertex colourings.

A colouring is t-periodic when both ends of every simple path with exactly
``t`` edges share a colour.  The largest number of colours is the number of
classes of the equivalence relation generated by those endpoint pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph_core import Graph, GraphError, classify, girth


class NoWitness(GraphError):
    """No cycle with a vertex-disjoint pendant path of the required length exists."""


class UnionFind:
    """Disjoint sets over ``0..size-1`` with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def classes(self) -> list[list[int]]:
        """Classes sorted by smallest member, members ascending."""
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values(), key=lambda c: c[0])


def _check_t(g: Graph, t: int) -> None:
    # t == n is allowed: no simple path has n edges, so nothing is constrained
    if not isinstance(t, int) or not 1 <= t <= g.n:
        raise ValueError(f"t must satisfy 1 <= t <= n = {g.n}, got {t!r}")


def iter_paths(g: Graph, t: int, start: Optional[int] = None):
    """Yield every simple path with ``t`` edges as a vertex tuple (both directions)."""
    starts = g.vertices if start is None else [start]
    for s in starts:
        path = [s]
        on_path = [False] * g.n
        on_path[s] = True
        # iterative DFS: stack of neighbour iterators
        stack = [iter(g.adjacency[s])]
        while stack:
            if len(path) == t + 1:
                yield tuple(path)
                on_path[path.pop()] = False
                stack.pop()
                continue
            for w in stack[-1]:
                if not on_path[w]:
                    path.append(w)
                    on_path[w] = True
                    stack.append(iter(g.adjacency[w]))
                    break
            else:
                stack.pop()
                on_path[path.pop()] = False


@dataclass
class PathRelation:
    t: int
    pairs: set[tuple[int, int]]
    constrained: set[int]


def path_relation(g: Graph, t: int) -> PathRelation:
    _check_t(g, t)
    pairs = set()
    for s in g.vertices:
        # endpoints reachable from s by a simple t-path; one witness per pair suffices
        for p in iter_paths(g, t, s):
            if s < p[-1]:
                pairs.add((s, p[-1]))
    constrained = {x for pr in pairs for x in pr}
    return PathRelation(t, pairs, constrained)


@dataclass
class ChiT:
    k: int
    unconstrained: set[int]
    classes: list[list[int]] = field(repr=False, default_factory=list)


def chi_t(g: Graph, t: int, relation: Optional[PathRelation] = None) -> ChiT:
    rel = relation if relation is not None else path_relation(g, t)
    uf = UnionFind(g.n)
    for u, v in rel.pairs:
        uf.union(u, v)
    classes = uf.classes()
    return ChiT(len(classes), set(g.vertices) - rel.constrained, classes)


@dataclass
class VertexColouring:
    t: int
    k: int
    colour_of: list[int]

    def to_record(self) -> dict:
        return {"t": self.t, "k": self.k, "colours": list(self.colour_of)}

    @classmethod
    def from_record(cls, record: dict) -> "VertexColouring":
        return cls(int(record["t"]), int(record["k"]), [int(c) for c in record["colours"]])


def build_t_periodic_colouring(g: Graph, t: int, result: Optional[ChiT] = None) -> VertexColouring:
    res = result if result is not None else chi_t(g, t)
    colour = [0] * g.n
    for idx, cls in enumerate(res.classes):
        for v in cls:
            colour[v] = idx
    return VertexColouring(t, res.k, colour)


def verify_t_periodic(g: Graph, t: int, c: VertexColouring) -> list[tuple[int, ...]]:
    """One offending path per differently coloured endpoint pair; empty iff valid."""
    _check_t(g, t)
    if len(c.colour_of) != g.n:
        raise ValueError(f"colouring covers {len(c.colour_of)} vertices, graph has {g.n}")
    out = []
    reported = set()
    for p in iter_paths(g, t):
        a, b = p[0], p[-1]
        if a < b and c.colour_of[a] != c.colour_of[b] and (a, b) not in reported:
            reported.add((a, b))
            out.append(p)
    return out


@dataclass
class TauShape:
    t: int
    tau: int
    cycle: tuple[int, ...]  # v_0 .. v_{l-1}
    pendant: tuple[int, ...]  # v_0, w_1 .. w_tau
    pattern: tuple[int, ...]  # colours of v_0 .. v_{t-1}
    slots: tuple[int, ...]  # colours c_0 .. c_tau
    palindromic: bool  # c(v_k) == c(v_{t-k}) == c(w_k) for k in 1..tau
    distinct_slots: int

    @property
    def all_distinct(self) -> bool:
        return self.distinct_slots == self.tau + 1


def _cycles_through(g: Graph, v0: int):
    # simple cycles through v0 starting with its smallest-then-larger neighbour pair
    for first in g.adjacency[v0]:
        path = [v0, first]
        on = {v0, first}
        stack = [iter(g.adjacency[first])]
        while stack:
            for w in stack[-1]:
                if w == v0 and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif w not in on:
                    path.append(w)
                    on.add(w)
                    stack.append(iter(g.adjacency[w]))
                    break
            else:
                stack.pop()
                on.discard(path.pop())


def _pendant_path(g: Graph, v0: int, length: int, avoid: set[int]) -> Optional[tuple[int, ...]]:
    path = [v0]
    on = set(avoid) | {v0}

    def extend() -> bool:
        if len(path) == length + 1:
            return True
        for w in g.adjacency[path[-1]]:
            if w not in on:
                path.append(w)
                on.add(w)
                if extend():
                    return True
                on.discard(path.pop())
        return False

    return tuple(path) if extend() else None


def tau_shape(g: Graph, t: int, c: VertexColouring) -> TauShape:
    """Read a t-periodic colouring along a cycle with a pendant path of length t//2."""
    if t < 3:
        raise GraphError("tau_shape needs t >= 3")
    if g.min_degree() < 2:
        raise GraphError("tau_shape needs minimum degree >= 2")
    if classify(g).kind == "cycle":
        raise GraphError("tau_shape does not apply to cycle graphs")
    gir = girth(g)
    if gir is None or t > gir:
        raise GraphError(f"tau_shape needs t <= girth (t={t}, girth={gir})")
    if len(c.colour_of) != g.n:
        raise ValueError("colouring is not total on the vertex set")
    tau = t // 2
    for v0 in g.vertices:
        if g.degree(v0) < 3:
            continue
        for cyc in _cycles_through(g, v0):
            pend = _pendant_path(g, v0, tau, set(cyc))
            if pend is None:
                continue
            col = c.colour_of
            ell = len(cyc)
            pattern = tuple(col[cyc[i % ell]] for i in range(t))
            slots = tuple(col[cyc[i]] for i in range(tau + 1))
            palin = all(
                col[pend[j]] == col[cyc[j]] == col[cyc[(t - j) % ell]] for j in range(1, tau + 1)
            )
            return TauShape(t, tau, cyc, pend, pattern, slots, palin, len(set(slots)))
    raise NoWitness(f"no cycle with a disjoint pendant path of length {tau} was found")
