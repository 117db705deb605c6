import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cacti, oracle_walk_count
from parhom.corpus import (
    cycle_graph,
    double_square_shortcut,
    path_graph,
    spider_tree,
)
from parhom.errors import BudgetError, PreconditionError
from parhom.graphs import Graph, Path, unique_shortest_path
from parhom.mosaics import (
    classify_mosaic,
    find_23path,
    find_shortcut,
    mosaic_oracle,
    t_walk_partition,
    verify_23path,
)
from parhom.walks import walk_count


def chained_squares_with_bristle() -> Graph:
    """Two 4-cycles sharing vertex 1, bristle at 4; involution-free from root 0."""
    return Graph(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 6), (6, 1), (4, 7)],
    )


class TestClassifyMosaic:
    def test_single_vertex(self):
        cert = classify_mosaic(Graph(1), 0)
        assert cert.verdict == "mosaic" and cert.core == frozenset({0})

    def test_rooted_edge(self):
        cert = classify_mosaic(path_graph(2), 0)
        assert cert.verdict == "mosaic"
        assert cert.bristles == ((1, 0),)

    def test_single_square(self):
        cert = classify_mosaic(cycle_graph(4), 2)
        assert cert.verdict == "proper_mosaic"

    def test_chained_squares(self):
        g = chained_squares_with_bristle()
        cert = classify_mosaic(g, 0)
        assert cert.verdict == "proper_mosaic"
        assert cert.core == frozenset(range(7))
        assert cert.bristles == ((7, 4),)

    def test_triangle_is_not(self):
        assert not classify_mosaic(cycle_graph(3), 0).is_mosaic

    def test_pendant_2path_is_not(self):
        assert not classify_mosaic(path_graph(3), 0).is_mosaic

    def test_two_bristles_on_one_anchor(self):
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (1, 5)])
        assert not classify_mosaic(g, 0).is_mosaic

    @given(cacti(max_n=9, min_n=1), st.integers(0, 10**6))
    @settings(max_examples=80, deadline=None)
    def test_agrees_with_bristle_matching_oracle(self, g, root_seed):
        x = root_seed % g.n
        assert classify_mosaic(g, x).verdict == mosaic_oracle(g, x)


class TestFind23Path:
    def test_chained_squares(self):
        g = chained_squares_with_bristle()
        tp = find_23path(g, 0)
        assert (tp.path.vertices, tp.v2, tp.v3) == ((0, 1), 6, 4)
        assert verify_23path(g, 0, tp) == []

    def test_single_square_with_bristle(self):
        # bristle away from the root forces degrees 2 and 3 on the far pair
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)])
        tp = find_23path(g, 0)
        assert verify_23path(g, 0, tp) == []
        assert {tp.v2, tp.v3} <= {1, 2, 3}

    def test_rejects_mosaic_with_involution(self):
        with pytest.raises(PreconditionError):
            find_23path(cycle_graph(4), 0)

    def test_rejects_non_proper(self):
        with pytest.raises(PreconditionError):
            find_23path(path_graph(2), 0)

    @given(cacti(max_n=10, min_n=4), st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_output_always_verifies(self, g, root_seed):
        from parhom.automorphisms import find_involution

        x = root_seed % g.n
        if not classify_mosaic(g, x).is_proper:
            return
        if find_involution(g, fixed=(x,)) is not None:
            return
        tp = find_23path(g, x)
        assert verify_23path(g, x, tp) == []


class TestFindShortcut:
    def test_double_square(self):
        g = double_square_shortcut()
        sc = find_shortcut(g, 4)
        assert sc is not None
        assert (sc.v1, sc.v2) == (0, 2)
        assert sc.path == Path((0, 1, 2))

    def test_root_on_path_blocks_it(self):
        assert find_shortcut(double_square_shortcut(), 1) is None

    def test_bristle_free_square_has_none(self):
        assert find_shortcut(cycle_graph(4), 0) is None

    def test_single_bristle_not_enough(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)])
        assert find_shortcut(g, 0) is None

    def test_requires_mosaic(self):
        with pytest.raises(PreconditionError):
            find_shortcut(cycle_graph(3), 0)


class TestTWalkPartition:
    def test_single_tree_edge(self):
        g = spider_tree()
        path = Path((2, 0))  # edge between degree-2 and degree-3 vertices
        part = t_walk_partition(g, path)
        assert part.t1 == () and part.t2 == ()
        assert len(part.t3) == g.degree(2) + g.degree(0) - 1

    def test_square_detour(self):
        # length-2 path entering a 4-cycle through one cycle edge
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)])
        path = Path((4, 1, 2))
        part = t_walk_partition(g, path)
        assert len(part.t1) == 1
        assert part.t1[0] == (4, 1, 0, 3, 2)

    def test_two_odd_detours(self):
        # two triangles along the path each contribute a one-longer detour
        g = Graph(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (5, 1), (2, 6), (6, 3)],
        )
        path = unique_shortest_path(g, 0, 4)
        part = t_walk_partition(g, path)
        assert len(part.t2) == 1
        assert part.total == walk_count(g, 0, 4, path.length + 2)

    def test_families_are_disjoint_and_tile(self):
        g = chained_squares_with_bristle()
        path = unique_shortest_path(g, 7, 0)
        part = t_walk_partition(g, path)
        sets = [set(part.t1), set(part.t2), set(part.t3)]
        assert not (sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2])
        assert part.total == walk_count(g, 7, 0, path.length + 2)

    def test_rejects_non_unique_path(self):
        with pytest.raises(PreconditionError):
            t_walk_partition(cycle_graph(4), Path((0, 1, 2)))

    def test_rejects_long_paths(self):
        g = path_graph(15)
        with pytest.raises(BudgetError):
            t_walk_partition(g, Path(tuple(range(15))))

    @given(cacti(max_n=12, min_n=2), st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_total_matches_exact_count(self, g, seed):
        rng = random.Random(seed)
        u, v = rng.randrange(g.n), rng.randrange(g.n)
        if u == v:
            return
        path = unique_shortest_path(g, u, v)
        if not isinstance(path, Path) or path.length > 6:
            return
        part = t_walk_partition(g, path)
        assert part.total == walk_count(g, u, v, path.length + 2)
        if g.n <= 8 and path.length <= 4:
            assert part.total == oracle_walk_count(g, u, v, path.length + 2)
