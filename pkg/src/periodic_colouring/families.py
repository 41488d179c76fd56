"""Named graph families with their known colouring numbers.

Shorthands accepted by :func:`parse_family`::

    path:M            path with M edges
    cycle:N           cycle on N vertices
    star:n            star K_{1,n}
    spider:a,b,c,...  extended star with the given arm lengths
    complete:N        complete graph K_N
    petal:LxK         L cycles of length K sharing one vertex
    mickey:K          face cycle 5K, ears 2K attached at distance K
    random:n,m,seed   random connected graph
    subdivided:S      the diamond (K_4 minus an edge) with its chord subdivided S times
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Optional

from .graph_core import Graph, GraphError


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]
    seed: Optional[int] = None

    def shorthand(self) -> str:
        if self.family == "petal":
            return f"petal:{self.params[0]}x{self.params[1]}"
        args = list(self.params) + ([self.seed] if self.seed is not None else [])
        return f"{ALIASES_OUT.get(self.family, self.family)}:{','.join(map(str, args))}"


@dataclass(frozen=True)
class ExpectedValues:
    """Closed-form values for a family member; ``None`` where none is known.

    ``chi_t`` maps ``t`` to the known value for every t the formula covers.
    """

    chi_o: Optional[int] = None
    chi_o_divisible_by: Optional[int] = None
    chi_t_formula: Optional[str] = None
    chi_t: dict[int, int] = field(default_factory=dict)
    chi: Optional[int] = None


def path_graph(m: int) -> Graph:
    return Graph(m + 1, [(i, i + 1) for i in range(m)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def spider(arms: tuple[int, ...]) -> Graph:
    """Centre 0; arms laid out one after another."""
    edges = []
    nxt = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def petal_graph(petals: int, k: int) -> Graph:
    edges = []
    nxt = 1
    for _ in range(petals):
        ring = [0] + list(range(nxt, nxt + k - 1))
        nxt += k - 1
        edges += [(ring[i], ring[(i + 1) % k]) for i in range(k)]
    return Graph(nxt, edges)


def mickey_mouse(k: int) -> Graph:
    """Face f_0..f_{5k-1} is 0..5k-1; ears of length 2k hang at f_0 and f_k."""
    face = 5 * k
    edges = [(i, (i + 1) % face) for i in range(face)]
    nxt = face
    for anchor in (0, k):
        ring = [anchor] + list(range(nxt, nxt + 2 * k - 1))
        nxt += 2 * k - 1
        edges += [(ring[i], ring[(i + 1) % (2 * k)]) for i in range(2 * k)]
    return Graph(nxt, edges)


def random_connected(n: int, m: int, seed: int) -> Graph:
    """Uniform labelled spanning tree (random Pruefer code) plus uniform extra edges."""
    rng = random.Random(seed)
    if n == 2:
        tree = [(0, 1)]
    else:
        code = [rng.randrange(n) for _ in range(n - 2)]
        tree = _pruefer_decode(code, n)
    present = {(min(u, v), max(u, v)) for u, v in tree}
    rest = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in present]
    extra = rng.sample(rest, m - (n - 1))
    return Graph(n, sorted(present) + sorted(extra))


def _pruefer_decode(code: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return edges


DIAMOND_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]


def subdivide(g: Graph, edge: tuple[int, int], times: int) -> Graph:
    """Replace ``edge`` by a path of ``times + 1`` edges through fresh vertices."""
    u, v = edge
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    if times < 1:
        raise GraphError("times must be positive")
    edges = [e for e in g.edges() if e != (min(u, v), max(u, v))]
    chain = [u] + list(range(g.n, g.n + times)) + [v]
    edges += list(zip(chain, chain[1:]))
    return Graph(g.n + times, edges)


def subdivided_diamond(times: int) -> Graph:
    base = Graph(4, DIAMOND_EDGES)
    return base if times == 0 else subdivide(base, (0, 2), times)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def generate(spec: FamilySpec) -> tuple[Graph, ExpectedValues]:
    fam, p = spec.family, spec.params
    try:
        builder = _BUILDERS[fam]
    except KeyError:
        raise FamilyError(f"unknown family {fam!r}") from None
    return builder(p, spec.seed)


def _gen_path(p, _seed):
    _require(len(p) == 1 and p[0] >= 1, "path needs M >= 1")
    (m,) = p
    return path_graph(m), ExpectedValues(
        chi_o=2 * m, chi_t_formula="t", chi_t={t: t for t in range(1, m + 1)}, chi=2
    )


def _gen_cycle(p, _seed):
    _require(len(p) == 1 and p[0] >= 3, "cycle needs N >= 3")
    (n,) = p
    return cycle_graph(n), ExpectedValues(
        chi_o=n,
        chi_t_formula="gcd(t,N)",
        chi_t={t: gcd(t, n) for t in range(1, n)},
        chi=2 if n % 2 == 0 else 3,
    )


def _gen_star(p, _seed):
    _require(len(p) == 1 and p[0] >= 3, "star needs n >= 3 leaves")
    return spider((1,) * p[0]), ExpectedValues(chi_o=2, chi=2)


def _gen_spider(p, _seed):
    _require(len(p) >= 3 and min(p) >= 1, "extended star needs >= 3 arms of length >= 1")
    arms = tuple(sorted(p, reverse=True))
    # chi_o equals the diameter only when the two longest arms tie; 2 * longest arm in general
    return spider(tuple(p)), ExpectedValues(chi_o=2 * arms[0], chi=2)


def _gen_complete(p, _seed):
    _require(len(p) == 1 and p[0] >= 2, "complete needs N >= 2")
    (n,) = p
    chi_o = {2: 2, 3: 3}.get(n, 1)
    return complete_graph(n), ExpectedValues(
        chi_o=chi_o,
        chi_t_formula="1",
        chi_t={t: 1 for t in range(1, n)},
        chi=n,
    )


def _gen_petal(p, _seed):
    _require(len(p) == 2 and p[0] >= 1 and p[1] >= 3, "petal needs L >= 1 petals of length K >= 3")
    petals, k = p
    return petal_graph(petals, k), ExpectedValues(chi_o=k, chi=2 if k % 2 == 0 else 3)


def _gen_mickey(p, _seed):
    _require(len(p) == 1 and p[0] >= 2, "mickey needs K >= 2")
    (k,) = p
    return mickey_mouse(k), ExpectedValues(chi_o_divisible_by=k)


def _gen_random(p, seed):
    _require(len(p) == 2 and seed is not None, "random needs n,m,seed")
    n, m = p
    _require(n >= 2 and n - 1 <= m <= n * (n - 1) // 2, "random needs n >= 2 and n-1 <= m <= n(n-1)/2")
    return random_connected(n, m, seed), ExpectedValues()


def _gen_subdivided(p, _seed):
    _require(len(p) == 1 and p[0] >= 0, "subdivided needs S >= 0")
    (s,) = p
    g = subdivided_diamond(s)
    # S=0 has a 3-cycle and a 4-cycle; S=1 is K_{2,3}
    known = {0: 1, 1: 4}
    return g, ExpectedValues(chi_o=known.get(s))


_BUILDERS: dict[str, Callable] = {
    "path": _gen_path,
    "cycle": _gen_cycle,
    "star": _gen_star,
    "extended_star": _gen_spider,
    "complete": _gen_complete,
    "petal": _gen_petal,
    "mickey_mouse": _gen_mickey,
    "random_connected": _gen_random,
    "subdivided": _gen_subdivided,
}

ALIASES_IN = {
    "spider": "extended_star",
    "mickey": "mickey_mouse",
    "random": "random_connected",
    "fig4": "subdivided",
}
ALIASES_OUT = {"extended_star": "spider", "mickey_mouse": "mickey", "random_connected": "random"}


def parse_family(text: str) -> FamilySpec:
    """Parse a shorthand such as ``petal:3x4`` or ``random:10,14,42``."""
    name, sep, rest = text.partition(":")
    if not sep:
        raise FamilyError(f"family shorthand needs 'name:params', got {text!r}")
    fam = ALIASES_IN.get(name.strip(), name.strip())
    if fam not in _BUILDERS:
        raise FamilyError(f"unknown family {name!r}")
    try:
        if fam == "petal":
            a, b = rest.lower().split("x")
            nums = (int(a), int(b))
        else:
            nums = tuple(int(x) for x in rest.split(",")) if rest.strip() else ()
    except ValueError:
        raise FamilyError(f"bad parameters in {text!r}") from None
    if fam == "random_connected":
        if len(nums) != 3:
            raise FamilyError("random needs n,m,seed")
        return FamilySpec(fam, nums[:2], nums[2])
    return FamilySpec(fam, nums)
