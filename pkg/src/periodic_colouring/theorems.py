"""Theorem predicates evaluated over graph corpora.

Each predicate takes a :class:`Graph` and returns ``None`` when the graph does
not qualify (or a size cap is exceeded), an empty list when the statement
holds, and a list of human-readable failures otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Callable, Optional

from . import chroma, oracles
from .families import FamilySpec, generate, parse_family
from .graph_core import Graph, branch_vertices, classify, girth, is_bipartite
from .oriented import (
    chi_o,
    feasible_k_set,
    is_circularly_k_partite,
    nb_arcs,
    verify_partition,
)
from .vertex import NoWitness, build_t_periodic_colouring, chi_t, tau_shape, verify_t_periodic

ENUMERATION_CAP = 10
# predicates sweeping every t enumerate simple paths; keep them to small graphs
PATH_SWEEP_CAP = 12

Result = Optional[list[str]]


def cycle_lengths(g: Graph) -> set[int]:
    """Lengths of all simple cycles (exhaustive DFS, each cycle rooted at its smallest vertex)."""
    lengths = set()
    for s in g.vertices:
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            for w in g.adjacency[v]:
                if w == s and len(path) >= 3:
                    lengths.add(len(path))
                elif w > s and w not in path:
                    stack.append((w, path + (w,)))
    return lengths


def branch_path_lengths(g: Graph) -> set[int]:
    """Lengths of all simple paths joining two distinct vertices of degree >= 3."""
    branches = set(branch_vertices(g))
    lengths = set()
    for s in branches:
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            for w in g.adjacency[v]:
                if w in path:
                    continue
                if w in branches and w > s:
                    lengths.add(len(path))
                stack.append((w, path + (w,)))
    return lengths


def contains_k4(g: Graph) -> bool:
    candidates = [v for v in g.vertices if g.degree(v) >= 3]
    return any(
        all(g.has_edge(a, b) for a, b in combinations(q, 2)) for q in combinations(candidates, 4)
    )


def divisors(n: int) -> set[int]:
    return {d for d in range(1, n + 1) if n % d == 0}


def _t_values(g: Graph) -> range:
    return range(1, g.n)


def _tau_range(g: Graph) -> Optional[range]:
    if g.min_degree() < 2 or classify(g).kind == "cycle":
        return None
    gi = girth(g)
    if gi is None:
        return None
    return range(3, min(gi, g.n - 1) + 1)


def p_arc_count(g: Graph) -> Result:
    want = sum(d * (d - 1) for d in g.degrees())
    got = len(nb_arcs(g))
    return [] if got == want else [f"{got} arcs, expected {want}"]


def p_partition_roundtrip(g: Graph) -> Result:
    out = []
    for k in range(1, 2 * g.m + 1):
        p = is_circularly_k_partite(g, k)
        if p is not None and verify_partition(g, p):
            out.append(f"k={k}: emitted partition fails verification")
    return out


def p_characterisation(g: Graph) -> Result:
    """Feasible k <=> every cycle length and twice every branch-path length is a multiple of k."""
    cls = classify(g)
    if cls.is_path or cls.is_extended_star or g.n > ENUMERATION_CAP:
        return None
    cycles = cycle_lengths(g)
    paths = branch_path_lengths(g)
    feasible = feasible_k_set(g)
    out = []
    for k in range(1, 2 * g.m + 1):
        predicted = all(c % k == 0 for c in cycles) and all((2 * p) % k == 0 for p in paths)
        if predicted != (k in feasible):
            out.append(f"k={k}: conditions say {predicted}, search says {k in feasible}")
    return out


def p_divisors(g: Graph) -> Result:
    cls = classify(g)
    if cls.is_path or cls.is_extended_star:
        return None
    value = chi_o(g)
    got = feasible_k_set(g)
    return [] if got == divisors(value) else [f"feasible {sorted(got)} != divisors of {value}"]


def p_coprime_cycles(g: Graph) -> Result:
    if g.n > ENUMERATION_CAP:
        return None
    lengths = cycle_lengths(g)
    if not any(gcd(q, r) == 1 for q, r in combinations(sorted(lengths), 2)):
        return None
    value = chi_o(g)
    return [] if value == 1 else [f"cycles {sorted(lengths)} include a coprime pair but chi_o={value}"]


def p_k4(g: Graph) -> Result:
    if not contains_k4(g):
        return None
    value = chi_o(g)
    return [] if value == 1 else [f"contains K4 but chi_o={value}"]


def p_regular(g: Graph) -> Result:
    degs = set(g.degrees())
    if len(degs) != 1 or min(degs) < 3:
        return None
    value = chi_o(g)
    bip = bool(is_bipartite(g))
    if value not in (1, 2) or (value == 2) != bip:
        return [f"{min(degs)}-regular, bipartite={bip}, chi_o={value}"]
    return []


def p_parity(g: Graph) -> Result:
    if classify(g).is_extended_star or g.n > chroma.MAX_CHI_VERTICES:
        return None
    value, c = chi_o(g), chroma.chi(g)
    return [] if (value % 2 == 0) == (c == 2) else [f"chi_o={value}, chi={c}"]


def p_odd_three(g: Graph) -> Result:
    if classify(g).is_extended_star or g.n > chroma.MAX_CHI_VERTICES:
        return None
    value = chi_o(g)
    if value <= 1 or value % 2 == 0:
        return None
    c = chroma.chi(g)
    return [] if c == 3 else [f"chi_o={value} odd but chi={c}"]


def p_class_one(g: Graph) -> Result:
    """chi_o > 1 implies chi* = Delta, exactly as stated (no degree restriction)."""
    if g.m > chroma.MAX_CHI_STAR_EDGES:
        return None
    value = chi_o(g)
    if value <= 1:
        return None
    cs, delta = chroma.chi_star(g), g.max_degree()
    return [] if cs == delta else [f"chi_o={value} but chi*={cs}, Delta={delta}"]


def p_class_one_delta3(g: Graph) -> Result:
    """The same implication restricted to maximum degree >= 3."""
    if g.max_degree() < 3:
        return None
    return p_class_one(g)


def p_vizing(g: Graph) -> Result:
    if g.m > chroma.MAX_CHI_STAR_EDGES:
        return None
    cs, delta = chroma.chi_star(g), g.max_degree()
    return [] if cs in (delta, delta + 1) else [f"chi*={cs}, Delta={delta}"]


def p_chi_t_bounds(g: Graph) -> Result:
    if g.n > PATH_SWEEP_CAP:
        return None
    out = []
    applicable = False
    for t in _t_values(g):
        r = chi_t(g, t)
        if r.unconstrained:
            continue
        applicable = True
        if not 1 <= r.k <= t:
            out.append(f"t={t}: chi_t={r.k}")
    return out if applicable else None


def p_bipartite_chi2(g: Graph) -> Result:
    if g.n < 3:
        return None
    k = chi_t(g, 2).k
    bip = bool(is_bipartite(g))
    return [] if (k == 2) == bip else [f"bipartite={bip}, chi_2={k}"]


def p_cycle_gcd(g: Graph) -> Result:
    if g.n > ENUMERATION_CAP or g.m == g.n - 1:
        return None
    out = []
    lengths = cycle_lengths(g)
    values = {t: chi_t(g, t).k for t in _t_values(g)}
    for ell in lengths:
        for t in range(1, min(ell, g.n - 1) + 1):
            if values[t] > gcd(t, ell):
                out.append(f"cycle {ell}, t={t}: chi_t={values[t]} > gcd={gcd(t, ell)}")
    return out


def p_tau_bound(g: Graph) -> Result:
    ts = _tau_range(g)
    if not ts:
        return None
    out = []
    for t in ts:
        k = chi_t(g, t).k
        if k > t // 2 + 1:
            out.append(f"t={t}: chi_t={k} > tau+1={t // 2 + 1}")
    return out


def p_tau_shape(g: Graph) -> Result:
    """Along a cycle-plus-pendant witness the colouring reads c0,c1..c_tau..c1."""
    ts = _tau_range(g)
    if not ts:
        return None
    out = []
    applicable = False
    for t in ts:
        col = build_t_periodic_colouring(g, t)
        try:
            shape = tau_shape(g, t, col)
        except NoWitness:
            continue
        applicable = True
        if not shape.palindromic or shape.distinct_slots > shape.tau + 1:
            out.append(f"t={t}: colouring pattern {shape.pattern} is not of the palindromic form")
    return out if applicable else None


def p_average_degree(g: Graph) -> Result:
    if 2 * g.m < 4 * g.n or g.n > PATH_SWEEP_CAP:
        return None
    out = []
    for t in _t_values(g):
        r = chi_t(g, t)
        if not r.unconstrained and r.k > 2:
            out.append(f"t={t}: chi_t={r.k} with average degree {2 * g.m / g.n:.2f}")
    return out


def p_cycle_bridge(g: Graph) -> Result:
    if classify(g).kind != "cycle" or g.n > 3 * PATH_SWEEP_CAP:
        return None
    feasible = feasible_k_set(g)
    out = []
    for t in _t_values(g):
        k = chi_t(g, t).k
        if (k == t) != (t in feasible):
            out.append(f"t={t}: chi_t={k}, circularly t-partite={t in feasible}")
    return out


def p_tau_bridge(g: Graph) -> Result:
    ts = _tau_range(g)
    if not ts:
        return None
    out = []
    for t in ts:
        k = chi_t(g, t).k
        part = is_circularly_k_partite(g, t) is not None
        if (k == t // 2 + 1) != part:
            out.append(f"t={t}: chi_t={k}, tau+1={t // 2 + 1}, circularly t-partite={part}")
    return out


def p_oracle_chi_o(g: Graph) -> Result:
    if g.m > oracles.MAX_ORACLE_EDGES:
        return None
    a, b = chi_o(g), oracles.oracle_chi_o(g)
    return [] if a == b else [f"chi_o={a}, oracle={b}"]


def p_oracle_chi_t(g: Graph) -> Result:
    if g.n > oracles.MAX_ORACLE_VERTICES:
        return None
    out = []
    for t in _t_values(g):
        a, b = chi_t(g, t).k, oracles.oracle_chi_t(g, t)
        if a != b:
            out.append(f"t={t}: chi_t={a}, oracle={b}")
    return out


def p_colouring_roundtrip(g: Graph) -> Result:
    if g.n > 12:
        return None
    out = []
    for t in _t_values(g):
        col = build_t_periodic_colouring(g, t)
        if verify_t_periodic(g, t, col):
            out.append(f"t={t}: built colouring fails verification")
    return out


@dataclass(frozen=True)
class Predicate:
    name: str
    statement: str
    check: Callable[[Graph], Result]


PREDICATES: list[Predicate] = [
    Predicate("arc_count", "arc count = sum deg(v)(deg(v)-1)", p_arc_count),
    Predicate("partition_roundtrip", "every emitted circular partition verifies", p_partition_roundtrip),
    Predicate("colouring_roundtrip", "every emitted t-periodic colouring verifies", p_colouring_roundtrip),
    Predicate("characterisation", "circularly k-partite <=> k | cycle lengths and k | 2*branch paths", p_characterisation),
    Predicate("divisors", "circularly k-partite <=> k divides chi_o", p_divisors),
    Predicate("coprime_cycles", "coprime cycle lengths => chi_o = 1", p_coprime_cycles),
    Predicate("k4_subgraph", "K4 subgraph => chi_o = 1", p_k4),
    Predicate("regular", "d-regular, d >= 3 => chi_o in {1,2}, 2 iff bipartite", p_regular),
    Predicate("parity", "chi_o even <=> chi = 2", p_parity),
    Predicate("odd_three", "chi_o odd > 1 => chi = 3", p_odd_three),
    Predicate("class_one", "chi_o > 1 => chi* = Delta", p_class_one),
    Predicate("class_one_delta3", "chi_o > 1 and Delta >= 3 => chi* = Delta", p_class_one_delta3),
    Predicate("vizing", "chi* in {Delta, Delta+1}", p_vizing),
    Predicate("chi_t_bounds", "1 <= chi_t <= t", p_chi_t_bounds),
    Predicate("bipartite_chi2", "bipartite <=> chi_2 = 2", p_bipartite_chi2),
    Predicate("cycle_gcd", "cycle of length l => chi_t <= gcd(t, l)", p_cycle_gcd),
    Predicate("tau_bound", "min degree >= 2, not a cycle, 3 <= t <= girth => chi_t <= tau+1", p_tau_bound),
    Predicate("tau_shape", "t-periodic colourings read c0,c1..c_tau..c1 along a cycle", p_tau_shape),
    Predicate("average_degree", "average degree >= 4 => chi_t <= 2", p_average_degree),
    Predicate("cycle_bridge", "cycles: chi_t = t <=> circularly t-partite", p_cycle_bridge),
    Predicate("tau_bridge", "chi_t = tau+1 <=> circularly t-partite", p_tau_bridge),
    Predicate("oracle_chi_o", "chi_o agrees with brute force", p_oracle_chi_o),
    Predicate("oracle_chi_t", "chi_t agrees with brute force", p_oracle_chi_t),
]
PREDICATE_NAMES = [p.name for p in PREDICATES]


def evaluate(g: Graph, names: Optional[list[str]] = None) -> dict[str, Result]:
    chosen = PREDICATES if names is None else [p for p in PREDICATES if p.name in names]
    out = {}
    for p in chosen:
        try:
            out[p.name] = p.check(g)
        except (chroma.CapExceeded, oracles.OracleCapExceeded):
            out[p.name] = None
    return out


# -- corpora ---------------------------------------------------------------


def expand_shorthand(text: str) -> list[FamilySpec]:
    """``cycle:3..12`` expands to ten specs; other shorthands map to one."""
    name, _, rest = text.partition(":")
    if ".." in rest and "," not in rest and "x" not in rest:
        lo, hi = (int(x) for x in rest.split(".."))
        return [parse_family(f"{name}:{v}") for v in range(lo, hi + 1)]
    return [parse_family(text)]


def random_specs(count: int, n_lo: int, n_hi: int, seed: int, extra: int = 6) -> list[FamilySpec]:
    rng = random.Random(seed)
    specs = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        m = rng.randint(n - 1, min(n * (n - 1) // 2, n - 1 + extra))
        specs.append(FamilySpec("random_connected", (n, m), rng.randrange(2**31)))
    return specs


DEFAULT_FAMILIES = [
    "path:1..6", "cycle:3..10", "star:3..5", "spider:2,2,1", "spider:3,3,2", "spider:3,1,1",
    "complete:2..6", "petal:2x3", "petal:2x4", "petal:3x3", "subdivided:0", "subdivided:1",
]  # fmt: skip


@dataclass
class PredicateTally:
    name: str
    statement: str
    qualifying: int = 0
    passed: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)


def survey(entries: list[tuple[str, Graph]], names: Optional[list[str]] = None) -> list[PredicateTally]:
    chosen = PREDICATES if names is None else [p for p in PREDICATES if p.name in names]
    tallies = {p.name: PredicateTally(p.name, p.statement) for p in chosen}
    for label, g in entries:
        for name, res in evaluate(g, [p.name for p in chosen]).items():
            if res is None:
                continue
            tally = tallies[name]
            tally.qualifying += 1
            if res:
                tally.failures.extend((label, msg) for msg in res)
            else:
                tally.passed += 1
    return list(tallies.values())


def build_corpus(specs: list[FamilySpec]) -> list[tuple[str, Graph]]:
    return [(s.shorthand(), generate(s)[0]) for s in specs]
