from itertools import permutations

import pytest
from hypothesis import given, settings

from periodic_colouring.families import complete_graph, cycle_graph, path_graph, petal_graph
from periodic_colouring.graph_core import GraphError, is_bipartite
from periodic_colouring.oracles import oracle_chi_t
from periodic_colouring.vertex import (
    NoWitness,
    UnionFind,
    VertexColouring,
    build_t_periodic_colouring,
    chi_t,
    iter_paths,
    path_relation,
    tau_shape,
    verify_t_periodic,
)

from .conftest import connected_graphs, theta_graph


def pairs_by_sequences(g, t):
    out = set()
    for seq in permutations(g.vertices, t + 1):
        if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
            out.add((min(seq[0], seq[-1]), max(seq[0], seq[-1])))
    return out


class TestPathRelation:
    def test_short_path(self):
        assert path_relation(path_graph(2), 2).pairs == {(0, 2)}

    def test_c4_diagonals(self):
        assert path_relation(cycle_graph(4), 2).pairs == {(0, 2), (1, 3)}

    def test_c5_t3(self):
        expected = pairs_by_sequences(cycle_graph(5), 3)
        assert expected == {(0, 2), (1, 3), (2, 4), (0, 3), (1, 4)}
        assert path_relation(cycle_graph(5), 3).pairs == expected

    @pytest.mark.parametrize("t", [0, 7])
    def test_t_out_of_range(self, t):
        with pytest.raises(ValueError):
            path_relation(cycle_graph(6), t)

    @settings(max_examples=60)
    @given(connected_graphs(max_n=7))
    def test_matches_sequence_enumeration(self, g):
        for t in range(1, g.n):
            assert path_relation(g, t).pairs == pairs_by_sequences(g, t)

    def test_paths_are_simple(self):
        g = petal_graph(2, 3)
        for p in iter_paths(g, 4):
            assert len(set(p)) == 5
            assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


class TestChiT:
    @pytest.mark.parametrize("n", [3, 5, 6, 8, 12])
    def test_cycles(self, n):
        from math import gcd

        for t in range(1, n):
            assert chi_t(cycle_graph(n), t).k == gcd(t, n)

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_path_on_n_vertices(self, n):
        for t in range(1, n):
            assert chi_t(path_graph(n - 1), t).k == t

    @pytest.mark.parametrize("n", [3, 4, 6])
    def test_complete(self, n):
        for t in range(1, n):
            assert chi_t(complete_graph(n), t).k == 1

    def test_unconstrained_reported(self):
        res = chi_t(path_graph(3), 3)
        assert res.unconstrained == {1, 2}
        assert res.k == 3

    def test_t_equal_n_is_unconstrained(self):
        res = chi_t(cycle_graph(6), 6)
        assert res.k == 6 and res.unconstrained == set(range(6))

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(max_n=7))
    def test_matches_oracle(self, g):
        for t in range(1, g.n):
            assert chi_t(g, t).k == oracle_chi_t(g, t)

    @given(connected_graphs(min_n=3, max_n=9))
    def test_bipartite_iff_chi2_is_2(self, g):
        assert (chi_t(g, 2).k == 2) == bool(is_bipartite(g))


class TestBuild:
    def test_c6_t3(self):
        c = build_t_periodic_colouring(cycle_graph(6), 3)
        assert c.k == 3 and c.colour_of == [0, 1, 2, 0, 1, 2]

    def test_c6_t4(self):
        c = build_t_periodic_colouring(cycle_graph(6), 4)
        assert c.k == 2 and c.colour_of == [0, 1, 0, 1, 0, 1]

    def test_petal_t3(self):
        c = build_t_periodic_colouring(petal_graph(2, 3), 3)
        assert c.k == 2

    def test_record_roundtrip(self):
        c = build_t_periodic_colouring(cycle_graph(6), 3)
        assert VertexColouring.from_record(c.to_record()) == c
        assert c.to_record() == {"t": 3, "k": 3, "colours": [0, 1, 2, 0, 1, 2]}

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=7))
    def test_maximality(self, g):
        for t in range(1, g.n):
            c = build_t_periodic_colouring(g, t)
            assert verify_t_periodic(g, t, c) == []
            if c.k >= 2:
                merged = [0 if x == 1 else x for x in c.colour_of]
                assert verify_t_periodic(g, t, VertexColouring(t, c.k - 1, merged)) == []
            constrained = path_relation(g, t).constrained
            for cls in range(c.k):
                members = [v for v in g.vertices if c.colour_of[v] == cls]
                if len(members) >= 2:
                    split = list(c.colour_of)
                    split[members[0]] = c.k
                    assert verify_t_periodic(g, t, VertexColouring(t, c.k + 1, split))
                    assert members[0] in constrained


class TestVerify:
    def test_c5_t3_two_colours_fail(self):
        g = cycle_graph(5)
        for bits in range(1, 2**5 - 1):
            colours = [(bits >> i) & 1 for i in range(5)]
            bad = verify_t_periodic(g, 3, VertexColouring(3, 2, colours))
            assert bad
            for p in bad:
                assert len(p) == 4 and colours[p[0]] != colours[p[-1]]

    def test_c6_t3_pattern(self):
        g = cycle_graph(6)
        assert pairs_by_sequences(g, 3) == {(0, 3), (1, 4), (2, 5)}
        assert verify_t_periodic(g, 3, VertexColouring(3, 3, [0, 1, 2, 0, 1, 2])) == []

    def test_partial(self):
        with pytest.raises(ValueError):
            verify_t_periodic(cycle_graph(6), 3, VertexColouring(3, 3, [0, 1, 2]))


class TestTauShape:
    def test_petal_t3(self):
        g = petal_graph(2, 3)
        shape = tau_shape(g, 3, build_t_periodic_colouring(g, 3))
        c0, c1 = shape.slots
        assert shape.pattern == (c0, c1, c1)
        assert shape.palindromic and shape.distinct_slots == 2 == shape.tau + 1

    def test_even_t(self):
        g = petal_graph(2, 4)
        shape = tau_shape(g, 4, build_t_periodic_colouring(g, 4))
        c = shape.pattern
        assert c[1] == c[3] and shape.palindromic
        assert shape.distinct_slots <= 3

    def test_cycle_rejected(self):
        with pytest.raises(GraphError, match="cycle"):
            tau_shape(cycle_graph(6), 3, build_t_periodic_colouring(cycle_graph(6), 3))

    def test_t_above_girth_rejected(self):
        g = petal_graph(2, 3)
        with pytest.raises(GraphError, match="girth"):
            tau_shape(g, 4, build_t_periodic_colouring(g, 4))

    def test_no_witness(self):
        # K_{2,3}: every 4-cycle uses both poles, so no disjoint pendant path of length 2
        g = theta_graph((2, 2, 2))
        with pytest.raises(NoWitness):
            tau_shape(g, 4, build_t_periodic_colouring(g, 4))


def test_union_find():
    uf = UnionFind(6)
    assert uf.union(4, 2) and uf.union(2, 0) and not uf.union(0, 4)
    assert uf.classes() == [[0, 2, 4], [1], [3], [5]]
