"""Deliberately naive reference computations for small graphs.

These share no code with the component/cover search or the path DFS; they
only read the graph's adjacency.
"""

from __future__ import annotations

from itertools import permutations

from .graph_core import Graph

MAX_ORACLE_EDGES = 10
MAX_ORACLE_VERTICES = 8


class OracleCapExceeded(ValueError):
    pass


def _all_oriented(g: Graph) -> list[tuple[int, int]]:
    return sorted((v, w) for v in range(g.n) for w in range(g.n) if v != w and g.has_edge(v, w))


def _variable_order(arcs_of: dict, edges: list) -> list:
    # static order: each next edge touches an earlier one when possible
    order, placed = [], set()
    for root in edges:
        if root in placed:
            continue
        frontier = [root]
        placed.add(root)
        while frontier:
            e = frontier.pop(0)
            order.append(e)
            for f, _ in arcs_of[e]:
                if f not in placed:
                    placed.add(f)
                    frontier.append(f)
    return order


def _partition_exists(g: Graph, k: int) -> bool:
    edges = _all_oriented(g)
    # arcs_of[e]: (f, d) with class(f) required to be class(e) + d
    arcs_of: dict = {e: [] for e in edges}
    for a, b in edges:
        for c, d in edges:
            if b == c and a != d:
                arcs_of[(a, b)].append(((c, d), 1))
                arcs_of[(c, d)].append(((a, b), -1))
    order = _variable_order(arcs_of, edges)
    cls: dict = {}
    counts = [0] * k

    def consistent(e, x) -> bool:
        return all((cls[f] - x - d) % k == 0 for f, d in arcs_of[e] if f in cls)

    def search(i: int) -> bool:
        empty = sum(1 for c in counts if c == 0)
        if empty > len(order) - i:
            return False
        if i == len(order):
            return True
        e = order[i]
        # global rotation of classes preserves validity, so fix the first edge
        for x in ([0] if i == 0 else range(k)):
            if consistent(e, x):
                cls[e] = x
                counts[x] += 1
                if search(i + 1):
                    return True
                counts[x] -= 1
                del cls[e]
        return False

    return search(0)


def oracle_chi_o(g: Graph) -> int:
    if g.m > MAX_ORACLE_EDGES:
        raise OracleCapExceeded(f"oracle_chi_o is capped at m <= {MAX_ORACLE_EDGES} (m={g.m})")
    for k in range(2 * g.m, 0, -1):
        if _partition_exists(g, k):
            return k
    raise AssertionError("unreachable: k=1 always works")


def _restricted_growth(n: int):
    """All set partitions of range(n) as restricted growth strings."""
    word = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(word)
            return
        for c in range(top + 2):
            word[i] = c
            yield from rec(i + 1, max(top, c))

    if n:
        yield from rec(1, 0)


def oracle_chi_t(g: Graph, t: int) -> int:
    if g.n > MAX_ORACLE_VERTICES:
        raise OracleCapExceeded(f"oracle_chi_t is capped at n <= {MAX_ORACLE_VERTICES} (n={g.n})")
    if not 1 <= t <= g.n:
        raise ValueError(f"t must satisfy 1 <= t <= n, got {t}")
    ends = set()
    for seq in permutations(range(g.n), t + 1):
        if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
            ends.add((seq[0], seq[-1]))
    best = 0
    for word in _restricted_growth(g.n):
        k = max(word) + 1
        if k > best and all(word[a] == word[b] for a, b in ends):
            best = k
    return best
