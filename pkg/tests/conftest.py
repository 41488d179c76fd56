import random

import pytest
from hypothesis import strategies as st

from periodic_colouring.families import (
    complete_graph,
    cycle_graph,
    mickey_mouse,
    path_graph,
    petal_graph,
    spider,
    subdivided_diamond,
)
from periodic_colouring.graph_core import Graph
from periodic_colouring.theorems import random_specs
from periodic_colouring.families import generate


def theta_graph(lengths):
    """Two poles 0 and 1 joined by internally disjoint paths of the given lengths."""
    edges, nxt = [], 2
    for length in lengths:
        chain = [0] + list(range(nxt, nxt + length - 1)) + [1]
        nxt += length - 1
        edges += list(zip(chain, chain[1:]))
    return Graph(nxt, edges)


def dumbbell(a, b, bridge):
    edges = [(i, (i + 1) % a) for i in range(a)]
    ring = list(range(a, a + b))
    edges += [(ring[i], ring[(i + 1) % b]) for i in range(b)]
    chain = [0] + list(range(a + b, a + b + bridge - 1)) + [a]
    edges += list(zip(chain, chain[1:]))
    return Graph(a + b + bridge - 1, edges)


def family_corpus():
    out = []
    out += [(f"path:{m}", path_graph(m)) for m in range(1, 7)]
    out += [(f"cycle:{n}", cycle_graph(n)) for n in range(3, 11)]
    out += [(f"star:{n}", spider((1,) * n)) for n in range(3, 6)]
    out += [(f"spider:{a}", spider(a)) for a in [(2, 2, 1), (3, 3, 1), (2, 2, 2), (3, 1, 1), (2, 1, 1)]]
    out += [(f"complete:{n}", complete_graph(n)) for n in range(2, 7)]
    out += [(f"petal:{l}x{k}", petal_graph(l, k)) for l, k in [(1, 3), (2, 3), (2, 4), (3, 3), (2, 5)]]
    out += [(f"theta:{ls}", theta_graph(ls)) for ls in [(2, 2, 2), (1, 3, 3), (2, 2, 4), (3, 3, 3), (1, 2, 3), (2, 4, 4)]]
    out += [(f"dumbbell:{p}", dumbbell(*p)) for p in [(3, 3, 1), (3, 3, 3), (4, 4, 2), (3, 4, 1), (4, 4, 1)]]
    out += [("subdivided:0", subdivided_diamond(0)), ("subdivided:1", subdivided_diamond(1))]
    return out


def random_corpus(count, n_lo, n_hi, seed, extra=6):
    return [(s.shorthand(), generate(s)[0]) for s in random_specs(count, n_lo, n_hi, seed, extra)]


@pytest.fixture(scope="session")
def small_corpus():
    """Families plus random graphs, all with n <= 10."""
    return [(lab, g) for lab, g in family_corpus() if g.n <= 10] + random_corpus(120, 3, 9, 7)


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=8, unique=True)) if pairs else []
    return Graph(n, sorted(edges | set(extra)))


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
