import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, oracle_walk_count
from parhom.corpus import cycle_graph, path_graph, star_graph, tailed_cycle_9
from parhom.errors import BudgetError
from parhom.walks import GF2Matrix, degree_parity, walk_count, walk_parity


class TestWalkCount:
    def test_k2_forced_alternation(self):
        assert walk_count(path_graph(2), 0, 1, 3) == 1

    def test_c4_closed_two_walks(self):
        assert walk_count(cycle_graph(4), 0, 0, 2) == 2

    def test_star_center_round_trips(self):
        assert walk_count(star_graph(3), 0, 0, 2) == 3

    def test_cap(self):
        with pytest.raises(BudgetError):
            walk_count(path_graph(2), 0, 1, 65)

    @given(graphs(max_n=6), st.integers(0, 5))
    @settings(max_examples=50, deadline=None)
    def test_against_enumeration(self, g, k):
        for u in range(g.n):
            for v in range(g.n):
                assert walk_count(g, u, v, k) == oracle_walk_count(g, u, v, k)


class TestWalkParity:
    def test_length_zero_is_identity(self):
        g = cycle_graph(5)
        for u in range(5):
            for v in range(5):
                assert walk_parity(g, u, v, 0) == (1 if u == v else 0)

    def test_triangle_two_walk(self):
        # exactly one 2-walk between distinct triangle vertices
        assert oracle_walk_count(cycle_graph(3), 0, 1, 2) == 1
        assert walk_parity(cycle_graph(3), 0, 1, 2) == 1

    def test_c4_opposite_two_walks(self):
        assert oracle_walk_count(cycle_graph(4), 0, 2, 2) == 2
        assert walk_parity(cycle_graph(4), 0, 2, 2) == 0

    @given(graphs(max_n=7), st.integers(0, 9))
    @settings(max_examples=60, deadline=None)
    def test_matches_exact_count(self, g, k):
        for u in range(g.n):
            for v in range(g.n):
                assert walk_parity(g, u, v, k) == walk_count(g, u, v, k) % 2

    @given(graphs(max_n=7), st.integers(0, 8))
    @settings(max_examples=40, deadline=None)
    def test_symmetric(self, g, k):
        for u in range(g.n):
            for v in range(u, g.n):
                assert walk_parity(g, u, v, k) == walk_parity(g, v, u, k)

    @given(graphs(max_n=6, min_n=1), st.integers(0, 4), st.integers(0, 4))
    @settings(max_examples=40, deadline=None)
    def test_power_composition(self, g, j, k):
        # convolution over a middle vertex reproduces the longer walk parity
        for u in range(g.n):
            for v in range(g.n):
                conv = 0
                for z in range(g.n):
                    conv ^= walk_parity(g, u, z, j) & walk_parity(g, z, v, k)
                assert conv == walk_parity(g, u, v, j + k)


class TestGF2Matrix:
    def test_identity_power_zero(self):
        a = GF2Matrix.adjacency(cycle_graph(4))
        assert a.power(0) == GF2Matrix.identity(4)

    def test_adjacency_symmetric_zero_diagonal(self):
        a = GF2Matrix.adjacency(tailed_cycle_9())
        for i in range(a.n):
            assert a.entry(i, i) == 0
            for j in range(a.n):
                assert a.entry(i, j) == a.entry(j, i)

    def test_mul_matches_power(self):
        a = GF2Matrix.adjacency(cycle_graph(5))
        assert a * a == a.power(2)


class TestDegreeParity:
    def test_leaf(self):
        assert degree_parity(path_graph(2), 0) == 1

    def test_c4_vertex(self):
        assert degree_parity(cycle_graph(4), 1) == 0

    def test_tailed_cycle_pendant_spot(self):
        # cycle vertex carrying a pendant 2-path has degree 3
        g = tailed_cycle_9()
        assert g.degree(2) == 3
        assert degree_parity(g, 2) == 1
