from itertools import product

import networkx as nx
import pytest
from hypothesis import given, settings

from periodic_colouring.chroma import CapExceeded, chi, chi_star, chroma_summary
from periodic_colouring.families import complete_graph, cycle_graph, path_graph, spider
from periodic_colouring.graph_core import Graph, is_bipartite

from .conftest import connected_graphs


def brute_chi(g):
    for k in range(1, g.n + 1):
        for colours in product(range(k), repeat=g.n):
            if all(colours[u] != colours[v] for u, v in g.edges()):
                return k


@pytest.mark.parametrize("n", range(2, 8))
def test_complete(n):
    assert chi(complete_graph(n)) == n


def test_bipartite_is_two():
    for g in (path_graph(4), cycle_graph(8), spider((2, 3, 1))):
        assert chi(g) == 2


def test_triangle_and_square_sharing_a_vertex():
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 0)])
    assert chi(g) == 3


def test_edge_chromatic_cycles():
    assert chi_star(cycle_graph(6)) == 2
    assert chi_star(cycle_graph(5)) == 3
    r = chroma_summary(cycle_graph(5))
    assert r.vizing_class == "two"


def test_petersen_is_class_two():
    g = Graph(10, list(nx.petersen_graph().edges()))
    assert chi_star(g) == 4
    assert chi(g) == 3


def test_caps():
    with pytest.raises(CapExceeded):
        chi(path_graph(16))
    with pytest.raises(CapExceeded):
        chi_star(path_graph(25))


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=7))
def test_chi_matches_brute_force(g):
    assert chi(g) == brute_chi(g)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=8))
def test_vizing_and_koenig(g):
    cs, delta = chi_star(g), g.max_degree()
    assert cs in (delta, delta + 1)
    if is_bipartite(g):
        assert cs == delta
    line = nx.line_graph(nx.Graph(g.edges()))
    # independent check: a proper edge colouring is a proper colouring of the line graph
    colouring = nx.greedy_color(line, strategy="DSATUR")
    assert cs <= max(colouring.values()) + 1
