"""Exact vertex and edge chromatic numbers for small graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph_core import Graph

MAX_CHI_VERTICES = 16
MAX_CHI_STAR_EDGES = 24


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class ChromaResult:
    chi: int
    chi_star: int
    delta: int

    @property
    def vizing_class(self) -> str:
        return "one" if self.chi_star == self.delta else "two"


def _greedy_clique(adj: Sequence[frozenset[int]]) -> list[int]:
    best: list[int] = []
    for start in range(len(adj)):
        clique = [start]
        cand = set(adj[start])
        while cand:
            v = max(cand, key=lambda x: (len(adj[x] & cand), -x))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur_greedy(adj: Sequence[frozenset[int]]) -> int:
    n = len(adj)
    colour = [-1] * n
    for _ in range(n):
        v = max(
            (x for x in range(n) if colour[x] < 0),
            key=lambda x: (len({colour[y] for y in adj[x] if colour[y] >= 0}), len(adj[x]), -x),
        )
        used = {colour[y] for y in adj[v]}
        colour[v] = next(c for c in range(n) if c not in used)
    return max(colour) + 1


def _k_colourable(adj: Sequence[frozenset[int]], k: int, seed: Sequence[int]) -> bool:
    """Backtracking DSATUR search for a proper k-colouring, ``seed`` pre-coloured 0,1,..."""
    n = len(adj)
    colour = [-1] * n
    for i, v in enumerate(seed):
        colour[v] = i

    def pick() -> int:
        best, key = -1, None
        for x in range(n):
            if colour[x] >= 0:
                continue
            sat = len({colour[y] for y in adj[x] if colour[y] >= 0})
            kx = (sat, len(adj[x]))
            if key is None or kx > key:
                best, key = x, kx
        return best

    def search(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        blocked = {colour[y] for y in adj[v]}
        # trying one fresh colour is enough: fresh colours are interchangeable
        for c in range(min(k, used + 1)):
            if c in blocked:
                continue
            colour[v] = c
            if search(done + 1, max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    return search(len(seed), len(seed))


def colouring_number(adj: Sequence[frozenset[int]]) -> int:
    """Exact chromatic number by branch and bound between clique and DSATUR bounds."""
    if not adj:
        return 0
    clique = _greedy_clique(adj)
    lower, upper = len(clique), _dsatur_greedy(adj)
    for k in range(lower, upper):
        if _k_colourable(adj, k, clique):
            return k
    return upper


def chi(g: Graph) -> int:
    if g.n > MAX_CHI_VERTICES:
        raise CapExceeded(f"exact chi is capped at n <= {MAX_CHI_VERTICES} (graph has n={g.n})")
    return colouring_number([frozenset(a) for a in g.adjacency])


def line_graph_adjacency(g: Graph) -> list[frozenset[int]]:
    edges = g.edges()
    at: dict[int, list[int]] = {v: [] for v in g.vertices}
    for i, (u, v) in enumerate(edges):
        at[u].append(i)
        at[v].append(i)
    adj: list[set[int]] = [set() for _ in edges]
    for incident in at.values():
        for i in incident:
            adj[i].update(j for j in incident if j != i)
    return [frozenset(a) for a in adj]


def chi_star(g: Graph) -> int:
    if g.m > MAX_CHI_STAR_EDGES:
        raise CapExceeded(f"exact chi* is capped at m <= {MAX_CHI_STAR_EDGES} (graph has m={g.m})")
    value = colouring_number(line_graph_adjacency(g))
    delta = g.max_degree()
    assert value in (delta, delta + 1), "Vizing bound violated"
    return value


def chroma_summary(g: Graph) -> ChromaResult:
    return ChromaResult(chi(g), chi_star(g), g.max_degree())
