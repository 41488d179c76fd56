"""Simple connected graphs: construction, parsing and structural helpers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised when input does not describe a simple connected graph."""


class Graph:
    """Immutable simple connected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the strictly increasing tuple of neighbours of ``v``.
    """

    __slots__ = ("n", "adjacency", "m", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 2:
            raise GraphError("a graph needs at least one edge (two vertices)")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self.m = sum(len(a) for a in self.adjacency) // 2
        self._edge_set = frozenset((u, v) for u in range(n) for v in self.adjacency[u] if u < v)
        seen = bfs_distances(self, 0)
        if len(seen) < n:
            missing = min(set(range(n)) - set(seen))
            raise GraphError(f"graph is disconnected: vertex {missing} is unreachable from vertex 0")

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(min, max)`` pairs in lexicographic order."""
        return sorted(self._edge_set)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degrees())

    def min_degree(self) -> int:
        return min(self.degrees())

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"invalid vertex id {v!r} (graph has vertices 0..{self.n - 1})")

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self.n, self._edge_set))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(edges: Sequence[tuple[int, int]]) -> Graph:
    """Build a graph from edges over arbitrary integer labels, compacting ids.

    Labels are renumbered ``0..n-1`` in order of first appearance.
    """
    ids: dict[int, int] = {}
    compact = []
    for u, v in edges:
        for x in (u, v):
            if x not in ids:
                ids[x] = len(ids)
        compact.append((ids[u], ids[v]))
    return Graph(len(ids), compact)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"u v"`` lines (``#`` starts a comment) into a :class:`Graph`."""
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: vertex ids must be integers") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: vertex ids must be nonnegative")
        if u == v:
            raise GraphError(f"line {lineno}: loop edge {u} {v}")
        pairs.append((u, v))
    if not pairs:
        raise GraphError("empty edge list")
    ids: dict[int, int] = {}
    for u, v in pairs:
        ids.setdefault(u, len(ids))
        ids.setdefault(v, len(ids))
    try:
        return Graph(len(ids), [(ids[u], ids[v]) for u, v in pairs])
    except GraphError as exc:
        if "disconnected" not in str(exc):
            raise
        labels = {i: x for x, i in ids.items()}
        reach = bfs_distances_raw(len(ids), [(ids[u], ids[v]) for u, v in pairs], 0)
        far = min(i for i in range(len(ids)) if i not in reach)
        raise GraphError(
            f"graph is disconnected: vertices {labels[0]} and {labels[far]} are not joined by any path"
        ) from None


def bfs_distances_raw(n: int, edges: Iterable[tuple[int, int]], source: int) -> dict[int, int]:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> int:
    g.check_vertex(u)
    g.check_vertex(v)
    return bfs_distances(g, u)[v]


def branch_vertices(g: Graph) -> list[int]:
    """Vertices of degree at least 3, sorted."""
    return [v for v in g.vertices if g.degree(v) >= 3]


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1


@dataclass(frozen=True)
class Bipartition:
    """Result of a bipartiteness test.

    Exactly one of ``parts`` or ``odd_walk`` is set. ``odd_walk`` is a closed
    walk ``v0, v1, ..., v0`` of odd length.
    """

    parts: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    odd_walk: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.parts is not None


def is_bipartite(g: Graph) -> Bipartition:
    side = {0: 0}
    parent = {0: -1}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in side:
                side[w] = 1 - side[u]
                parent[w] = u
                queue.append(w)
            elif side[w] == side[u]:
                return Bipartition(odd_walk=_odd_walk(parent, u, w))
    left = tuple(v for v in g.vertices if side[v] == 0)
    right = tuple(v for v in g.vertices if side[v] == 1)
    return Bipartition(parts=(left, right))


def _odd_walk(parent: dict[int, int], u: int, w: int) -> tuple[int, ...]:
    # tree paths u -> root and w -> root have equal parity, so u..root..w + edge(w,u) is odd
    def to_root(x: int) -> list[int]:
        out = [x]
        while parent[x] != -1:
            x = parent[x]
            out.append(x)
        return out

    up, wp = to_root(u), to_root(w)
    # trim the shared tail to the lowest common ancestor
    while len(up) > 1 and len(wp) > 1 and up[-2] == wp[-2]:
        up.pop()
        wp.pop()
    return tuple(up + wp[-2::-1] + [u])


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or ``None`` for trees (BFS from every vertex)."""
    if is_tree(g):
        return None
    best: Optional[int] = None
    for s in g.vertices:
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


KINDS = ("path", "cycle", "star", "extended_star", "tree_other", "general")


@dataclass(frozen=True)
class GraphClass:
    kind: str
    length: Optional[int] = None  # path: edges M; cycle: N
    diameter: Optional[int] = None  # star / extended star
    arms: tuple[int, ...] = field(default=())  # star / extended star, longest first
    girth: Optional[int] = None  # general

    @property
    def is_path(self) -> bool:
        return self.kind == "path"

    @property
    def is_extended_star(self) -> bool:
        return self.kind in ("star", "extended_star")


def classify(g: Graph) -> GraphClass:
    degs = g.degrees()
    if is_tree(g):
        branches = [v for v in g.vertices if degs[v] >= 3]
        if not branches:
            return GraphClass("path", length=g.m)
        if len(branches) == 1:
            arms = tuple(sorted(_arm_lengths(g, branches[0]), reverse=True))
            kind = "star" if max(arms) == 1 else "extended_star"
            return GraphClass(kind, diameter=arms[0] + arms[1], arms=arms)
        return GraphClass("tree_other")
    if all(d == 2 for d in degs):
        return GraphClass("cycle", length=g.n)
    return GraphClass("general", girth=girth(g))


def _arm_lengths(g: Graph, centre: int) -> list[int]:
    arms = []
    for first in g.adjacency[centre]:
        prev, cur, length = centre, first, 1
        while g.degree(cur) == 2:
            nxt = g.adjacency[cur][0] if g.adjacency[cur][1] == prev else g.adjacency[cur][1]
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    return arms
