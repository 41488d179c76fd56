"""Circular k-partitions of oriented edges under the non-backtracking relation.

An oriented edge ``(v, w)`` has input ``v`` and output ``w``.  A
non-backtracking arc joins ``(v1, v2)`` to ``(w1, w2)`` when ``v2 == w1`` and
``v1 != w2``.  A circular k-partition labels every oriented edge with a class
in ``Z_k`` so that each arc raises the class by one, with every class used.

The search here works per weak component of the arc relation: values
propagate from a root with ``+1`` along arcs, the gcd of the discrepancies on
non-tree arcs bounds which ``k`` are consistent, and the remaining freedom is
one shift per component, which must make the classes cover ``Z_k``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .graph_core import Graph, classify

OrientedEdge = tuple[int, int]
NBArc = tuple[OrientedEdge, OrientedEdge]


def oriented_edges(g: Graph) -> list[OrientedEdge]:
    """Both orientations of every edge, sorted by (input, output)."""
    return [(v, w) for v in g.vertices for w in g.adjacency[v]]


def successors(g: Graph, e: OrientedEdge) -> list[OrientedEdge]:
    v, w = e
    return [(w, z) for z in g.adjacency[w] if z != v]


def predecessors(g: Graph, e: OrientedEdge) -> list[OrientedEdge]:
    v, w = e
    return [(u, v) for u in g.adjacency[v] if u != w]


def nb_arcs(g: Graph) -> list[NBArc]:
    return [(e, f) for e in oriented_edges(g) for f in successors(g, e)]


@dataclass
class ConstraintComponent:
    members: list[OrientedEdge]
    rel_value: dict[OrientedEdge, int]
    disc_gcd: int

    def values(self) -> set[int]:
        return set(self.rel_value.values())

    def residues(self, k: int) -> frozenset[int]:
        return frozenset(x % k for x in self.rel_value.values())

    def admits(self, k: int) -> bool:
        return self.disc_gcd % k == 0


def constraint_components(g: Graph) -> list[ConstraintComponent]:
    """Weak components of the arc relation with propagated relative values.

    Components are ordered by smallest member; values are shifted so the
    smallest attained value is 0.
    """
    seen: set[OrientedEdge] = set()
    comps = []
    for root in oriented_edges(g):
        if root in seen:
            continue
        value = {root: 0}
        seen.add(root)
        disc = 0
        queue = deque([root])
        while queue:
            e = queue.popleft()
            neighbours = [(f, value[e] + 1) for f in successors(g, e)]
            neighbours += [(f, value[e] - 1) for f in predecessors(g, e)]
            for f, x in neighbours:
                if f in value:
                    disc = gcd(disc, abs(value[f] - x))
                else:
                    value[f] = x
                    seen.add(f)
                    queue.append(f)
        low = min(value.values())
        value = {e: x - low for e, x in value.items()}
        comps.append(ConstraintComponent(sorted(value), value, disc))
    return comps


@dataclass
class CircularPartition:
    k: int
    class_of: dict[OrientedEdge, int]

    def to_record(self) -> dict:
        return {
            "k": self.k,
            "entries": [[v, w, self.class_of[(v, w)]] for v, w in sorted(self.class_of)],
        }

    @classmethod
    def from_record(cls, record: dict) -> "CircularPartition":
        k = int(record["k"])
        return cls(k, {(int(v), int(w)): int(c) for v, w, c in record["entries"]})


def _cover_shifts(residue_sets: list[frozenset[int]], k: int) -> Optional[list[int]]:
    """Lexicographically smallest shifts whose shifted residue sets cover Z_k."""
    # sizes of what later components can still add, for pruning
    tail_size = [0] * (len(residue_sets) + 1)
    for i in range(len(residue_sets) - 1, -1, -1):
        tail_size[i] = tail_size[i + 1] + len(residue_sets[i])

    shifts: list[int] = []

    def search(i: int, covered: frozenset[int]) -> bool:
        if len(covered) == k:
            shifts.extend([0] * (len(residue_sets) - i))
            return True
        if i == len(residue_sets) or k - len(covered) > tail_size[i]:
            return False
        tried = set()
        for s in range(k):
            shifted = frozenset((r + s) % k for r in residue_sets[i])
            # equal shifted sets lead to identical subtrees
            if shifted in tried:
                continue
            tried.add(shifted)
            shifts.append(s)
            if search(i + 1, covered | shifted):
                return True
            shifts.pop()
        return False

    return shifts if search(0, frozenset()) else None


def _feasible(comps: list[ConstraintComponent], k: int) -> Optional[list[int]]:
    if not all(c.admits(k) for c in comps):
        return None
    return _cover_shifts([c.residues(k) for c in comps], k)


def is_circularly_k_partite(
    g: Graph, k: int, comps: Optional[list[ConstraintComponent]] = None
) -> Optional[CircularPartition]:
    """Return a circular k-partition of ``g`` if one exists, else ``None``."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if k > 2 * g.m:
        return None
    if comps is None:
        comps = constraint_components(g)
    shifts = _feasible(comps, k)
    if shifts is None:
        return None
    class_of = {}
    for comp, s in zip(comps, shifts):
        for e, x in comp.rel_value.items():
            class_of[e] = (x + s) % k
    return CircularPartition(k, dict(sorted(class_of.items())))


def feasible_k_set(g: Graph) -> set[int]:
    comps = constraint_components(g)
    return {k for k in range(1, 2 * g.m + 1) if _feasible(comps, k) is not None}


def chi_o(g: Graph) -> int:
    """Largest k for which ``g`` is circularly k-partite."""
    comps = constraint_components(g)
    for k in range(2 * g.m, 0, -1):
        if _feasible(comps, k) is not None:
            return k
    raise AssertionError("every graph is circularly 1-partite")


def circular_witness(g: Graph) -> CircularPartition:
    p = is_circularly_k_partite(g, chi_o(g))
    assert p is not None
    return p


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    """A broken successor rule on ``arc`` or an unused class ``empty_class``."""

    arc: Optional[NBArc] = None
    empty_class: Optional[int] = None

    def describe(self) -> str:
        if self.arc is not None:
            (a, b), (c, d) = self.arc
            return f"arc [{a},{b}] -> [{c},{d}] breaks the successor rule"
        return f"class {self.empty_class} is empty"


def verify_partition(g: Graph, p: CircularPartition) -> list[Violation]:
    edges = oriented_edges(g)
    missing = [e for e in edges if e not in p.class_of]
    if missing or len(p.class_of) != len(edges):
        extra = sorted(set(p.class_of) - set(edges))
        raise PartitionError(
            f"class map does not match the oriented edges: missing {missing[:3]}, unknown {extra[:3]}"
        )
    if p.k < 1:
        raise PartitionError("k must be positive")
    out = []
    for tail, head in nb_arcs(g):
        if p.class_of[head] % p.k != (p.class_of[tail] + 1) % p.k:
            out.append(Violation(arc=(tail, head)))
    used = {c % p.k for c in p.class_of.values()}
    out.extend(Violation(empty_class=j) for j in range(p.k) if j not in used)
    return out


def infeasibility_reason(g: Graph, k: int) -> Optional[str]:
    """Human-readable reason ``g`` is not circularly k-partite (``None`` if it is)."""
    from .graph_core import branch_vertices, distance

    if is_circularly_k_partite(g, k) is not None:
        return None
    cls = classify(g)
    if cls.is_path:
        return f"a path of length {cls.length} admits only k <= {2 * cls.length}"
    if k > 2 * g.m:
        return f"k={k} exceeds the number of oriented edges {2 * g.m}"
    comps = constraint_components(g)
    for c in comps:
        if not c.admits(k):
            if c.disc_gcd == 0:
                break
            branches = branch_vertices(g)
            for i, u in enumerate(branches):
                for v in branches[i + 1:]:
                    d = distance(g, u, v)
                    if (2 * d) % k:
                        return (
                            f"branch vertices {u} and {v} are at distance {d}; "
                            f"2*{d} is not a multiple of {k}"
                        )
            return (
                f"cycle-length condition fails: closed non-backtracking walks have lengths "
                f"with gcd {c.disc_gcd}, which is not a multiple of {k}"
            )
    return f"the {len(comps)} constraint component(s) cannot cover all {k} classes"
