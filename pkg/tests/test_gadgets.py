import pytest

from parhom.automorphisms import find_involution
from parhom.corpus import (
    all_cactus_graphs,
    cycle_graph,
    double_square_shortcut,
    involution_free,
    path_graph,
    spider_tree,
    star_graph,
    tailed_cycle_9,
)
from parhom.errors import PreconditionError
from parhom.gadgets import (
    HardnessGadget,
    PartialHardnessGadget,
    check_distance_requirements,
    parse_gadget,
    serialize_gadget,
    verify_hardness_gadget,
    verify_partial_gadget,
)
from parhom.gadgetfind import (
    brute_force_gadget_search,
    find_hardness_gadget,
    find_structure_rooted,
    gadget_cycles,
    gadget_from_shortcut,
    gadget_mosaic_mosaic,
    gadget_mosaic_oddroot,
    gadget_phg_23path,
    gadget_phg_phg,
    partial_gadget_tree,
)
from parhom.graphs import Graph, Path
from parhom.mosaics import MosaicCertificate, TwoThreePath, find_shortcut
from parhom.walks import walk_parity

DS_GADGET = HardnessGadget(
    beta=1, s=2, t=5, i=1, O=frozenset({8}), K=frozenset({5}), k={5: 3}, w={5: 0}
)


class TestVerifier:
    def test_double_square_gadget_ok(self):
        assert verify_hardness_gadget(double_square_shortcut(), DS_GADGET) == []

    def test_even_O_violates_condition_one(self):
        g = double_square_shortcut()
        broken = HardnessGadget(
            beta=1, s=1, t=5, i=0, O=frozenset({2, 3}), K=frozenset({6}), k={6: 3}, w={6: 0}
        )
        bad = verify_hardness_gadget(g, broken)
        assert any("condition 1" in b for b in bad)

    def test_wrong_beta_detected(self):
        g = double_square_shortcut()
        broken = HardnessGadget(
            beta=2, s=2, t=5, i=1, O=frozenset({8}), K=frozenset({5}), k={5: 3}, w={5: 0}
        )
        assert verify_hardness_gadget(g, broken) != []

    def test_partition_enforced(self):
        g = double_square_shortcut()
        broken = HardnessGadget(beta=1, s=2, t=5, i=1, O=frozenset(), K=frozenset({5}), k={5: 3}, w={5: 0})
        bad = verify_hardness_gadget(g, broken)
        assert any("partition" in b for b in bad)

    def test_coincidences_allowed(self):
        # i = t and w(u) = u are legitimate (used by the cycle constructions)
        g = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (2, 6), (2, 7)])
        # not asserting validity here, only that the verifier runs without
        # assuming distinctness
        gadget = HardnessGadget(beta=1, s=3, t=2, i=2, O=frozenset({4}), K=frozenset(), k={}, w={})
        verify_hardness_gadget(g, gadget)


class TestDistanceRequirements:
    def test_beta_one_primary_is_free(self):
        g = double_square_shortcut()
        for v in range(g.n):
            bad = check_distance_requirements(g, DS_GADGET, v)
            assert not any("primary" in b for b in bad)

    def test_empty_K_makes_secondary_vacuous(self):
        g = spider_tree()
        gadget = HardnessGadget(beta=2, s=5, t=0, i=4, O=frozenset({6}))
        for v in range(g.n):
            bad = check_distance_requirements(g, gadget, v)
            assert not any("secondary" in b for b in bad)

    def test_shortcut_promise_set(self):
        # holds outside the path and at v2 = 2; fails on interior path vertices
        g = double_square_shortcut()
        for v in set(range(g.n)) - {0, 1}:
            assert check_distance_requirements(g, DS_GADGET, v) == []
        assert check_distance_requirements(g, DS_GADGET, 1) != []
        assert check_distance_requirements(g, DS_GADGET, 0) != []


class TestPartialVerifier:
    def test_spider_rooted_at_long_leg(self):
        pg = PartialHardnessGadget(s=2, i=0, O=frozenset({3}), path=Path((6, 5, 4, 0)))
        assert verify_partial_gadget(spider_tree(), 6, pg) == []

    def test_even_O_rejected(self):
        g = star_graph(3)
        pg = PartialHardnessGadget(s=0, i=1, O=frozenset({2, 3}), path=Path((1,)))
        bad = verify_partial_gadget(g, 1, pg)
        assert any("even" in b for b in bad)

    def test_non_shortest_path_rejected(self):
        g = cycle_graph(5)
        pg = PartialHardnessGadget(s=2, i=1, O=frozenset({3}), path=Path((0, 4, 3, 2, 1)))
        bad = verify_partial_gadget(g, 0, pg)
        assert bad != []


class TestGadgetSerialization:
    def test_round_trip(self):
        text = serialize_gadget(DS_GADGET)
        assert parse_gadget(text) == DS_GADGET

    def test_empty_K_round_trip(self):
        gadget = HardnessGadget(beta=3, s=1, t=2, i=0, O=frozenset({4}))
        assert parse_gadget(serialize_gadget(gadget)) == gadget


class TestGadgetFromShortcut:
    def test_minimal_instance(self):
        g = double_square_shortcut()
        assert gadget_from_shortcut(g, 0, 2) == DS_GADGET

    def test_orientation_swaps_roles(self):
        g = double_square_shortcut()
        flipped = gadget_from_shortcut(g, 2, 0)
        assert flipped.s == 0 and flipped.t == 4 and flipped.w == {4: 2}

    def test_suffix_shrink_is_deterministic(self):
        # chain of three squares: ends odd, middle path vertices odd at 2
        squares = [(0, 1), (1, 10), (10, 11), (11, 0),
                   (1, 2), (2, 12), (12, 13), (13, 1),
                   (2, 3), (3, 14), (14, 15), (15, 2)]
        g = Graph(18, squares + [(0, 16), (2, 17)])
        # qualifying pair (0, 3)? vertex 3 has even degree, so use (0, 2):
        # interior vertex 1 is even, 2 is the far odd endpoint
        full = gadget_from_shortcut(g, 0, 2)
        assert full == DS_GADGET_LIKE(g)

    def test_wide_O_from_high_degree_endpoint(self):
        # three pendants at the far endpoint: O picks up all of them
        g = Graph(
            11,
            [(0, 1), (1, 3), (3, 4), (4, 0), (1, 2), (2, 5), (5, 6), (6, 1),
             (0, 7), (2, 8), (2, 9), (2, 10)],
        )
        gadget = gadget_from_shortcut(g, 0, 2)
        assert gadget.O == frozenset({8, 9, 10})
        assert gadget.K == frozenset({5}) and gadget.k == {5: 3}

    def test_rejects_even_endpoint(self):
        g = double_square_shortcut()
        with pytest.raises(PreconditionError):
            gadget_from_shortcut(g, 0, 1)

    def test_rejects_edge_off_cycle(self):
        g = spider_tree()
        with pytest.raises(PreconditionError):
            gadget_from_shortcut(g, 1, 3)


def DS_GADGET_LIKE(g):
    # frozen shape check helper for the 3-square chain: same construction as
    # the 2-square instance, shifted labels
    return HardnessGadget(
        beta=1, s=2, t=12, i=1, O=frozenset({3, 15, 17}), K=frozenset({12}), k={12: 3}, w={12: 0}
    )


def glue(a: Graph, b: Graph, va: int, vb: int) -> Graph:
    """Disjoint union identifying va in a with vb in b."""
    offset = a.n
    def m(v):
        if v == vb:
            return va
        return offset + v - (1 if v > vb else 0)
    edges = list(a.edges) + [(m(u), m(v)) for u, v in b.edges]
    return Graph(a.n + b.n - 1, edges)


def bristled_square(bristles: tuple[int, ...]) -> Graph:
    """4-cycle 0..3 with pendant vertices on the listed cycle spots."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    nxt = 4
    for b in bristles:
        edges.append((b, nxt))
        nxt += 1
    return Graph(nxt, edges)


class TestCombinationConstructors:
    def test_mosaic_mosaic(self):
        # two different bristled squares glued at their bare vertex 0
        a = bristled_square((1,))
        b = bristled_square((1, 2))
        g = glue(a, b, 0, 0)
        comp_a = frozenset(range(a.n))
        comp_b = frozenset({0}) | frozenset(range(a.n, g.n))
        gadget = gadget_mosaic_mosaic(g, 0, comp_a, comp_b)
        assert verify_hardness_gadget(g, gadget) == []
        for v in sorted(set(range(g.n)) - comp_a - comp_b):
            assert check_distance_requirements(g, gadget, v) == []

    def test_symmetric_pair_rejected_before_combination(self):
        # two isomorphic components make the whole graph have an involution,
        # so the finder rejects it before any combination runs
        a = bristled_square((1,))
        g = glue(a, a, 0, 0)
        with pytest.raises(PreconditionError):
            find_hardness_gadget(g)

    def test_mosaic_mosaic_shortcut_dispatch(self):
        ds = double_square_shortcut()
        other = bristled_square((1, 2))
        g = glue(ds, other, 4, 0)
        comp_a = frozenset(range(ds.n))
        comp_b = frozenset({4}) | frozenset(range(ds.n, g.n))
        gadget = gadget_mosaic_mosaic(g, 4, comp_a, comp_b)
        assert verify_hardness_gadget(g, gadget) == []
        assert gadget.s in comp_a  # came from the shortcut side

    def test_mosaic_oddroot(self):
        # bristled square pair at x plus a pendant edge making deg(x) odd
        a = bristled_square((1,))
        b = bristled_square((1, 2))
        mosaic = glue(a, b, 0, 0)
        g = Graph(mosaic.n + 1, list(mosaic.edges) + [(0, mosaic.n)])
        comp = frozenset(range(mosaic.n))
        gadget = gadget_mosaic_oddroot(g, 0, comp)
        assert verify_hardness_gadget(g, gadget) == []
        for v in sorted(set(range(g.n)) - comp):
            assert check_distance_requirements(g, gadget, v) == []

    def test_mosaic_oddroot_rejects_even_degree(self):
        a = bristled_square((1,))
        b = bristled_square((1, 2))
        g = glue(a, b, 0, 0)
        with pytest.raises(PreconditionError):
            gadget_mosaic_oddroot(g, 0, frozenset(range(a.n)))

    def test_phg_23path(self):
        # spider partial glued at its root leaf to a bristled square
        sq = bristled_square((1,))
        g = glue(spider_tree(), sq, 6, 0)  # vertex 6 becomes the cut vertex
        pg = PartialHardnessGadget(s=2, i=0, O=frozenset({3}), path=Path((6, 5, 4, 0)))
        assert verify_partial_gadget(g, 6, pg) == []
        from parhom.mosaics import find_23path
        from parhom.graphs import induced_subgraph

        comp = frozenset({6}) | frozenset(range(7, g.n))
        sub = induced_subgraph(g, comp)
        tp_local = find_23path(sub.graph, sub.from_parent()[6])
        tp = TwoThreePath(
            path=Path(tuple(sub.to_parent[v] for v in tp_local.path.vertices)),
            v2=sub.to_parent[tp_local.v2],
            v3=sub.to_parent[tp_local.v3],
        )
        gadget = gadget_phg_23path(g, 6, tp, pg)
        assert verify_hardness_gadget(g, gadget) == []
        assert gadget.K == frozenset()
        assert gadget.t in {tp.v2, tp.v3}

    def test_phg_23path_t_choice_tracks_walk_parity(self):
        # a degree tweak on the partial gadget's path flips which of v2, v3
        # receives an even number of walks, so t flips with it
        sq = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)])
        from parhom.graphs import induced_subgraph
        from parhom.mosaics import find_23path

        chosen = {}
        for tweak, extra in (("plain", []), ("bristled", [(4, 7)])):
            spider = Graph(
                7 + len(extra),
                [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)] + extra,
            )
            g = glue(spider, sq, 6, 0)
            pg = PartialHardnessGadget(s=2, i=0, O=frozenset({3}), path=Path((6, 5, 4, 0)))
            comp = frozenset({6}) | frozenset(range(spider.n, g.n))
            sub = induced_subgraph(g, comp)
            tpl = find_23path(sub.graph, sub.from_parent()[6])
            tp = TwoThreePath(
                Path(tuple(sub.to_parent[v] for v in tpl.path.vertices)),
                sub.to_parent[tpl.v2],
                sub.to_parent[tpl.v3],
            )
            gadget = gadget_phg_23path(g, 6, tp, pg)
            assert verify_hardness_gadget(g, gadget) == []
            chosen[tweak] = "v2" if gadget.t == tp.v2 else "v3"
        assert chosen == {"plain": "v3", "bristled": "v2"}

    def test_mosaic_mosaic_three_instances(self):
        chained = Graph(
            8,
            [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 6), (6, 1), (4, 7)],
        )
        pairs = [
            (bristled_square((1,)), bristled_square((1, 2))),
            (bristled_square((1,)), chained),
            (bristled_square((1, 2)), chained),
        ]
        for a, b in pairs:
            g = glue(a, b, 0, 0)
            comp_a = frozenset(range(a.n))
            comp_b = frozenset({0}) | frozenset(range(a.n, g.n))
            gadget = gadget_mosaic_mosaic(g, 0, comp_a, comp_b)
            assert verify_hardness_gadget(g, gadget) == []

    def test_phg_phg_on_spider(self):
        g = spider_tree()
        pg_long = PartialHardnessGadget(s=5, i=4, O=frozenset({6}), path=Path((0, 4)))
        pg_short = PartialHardnessGadget(s=2, i=0, O=frozenset({3}), path=Path((0,)))
        gadget = gadget_phg_phg(g, 0, pg_long, pg_short)
        assert gadget == HardnessGadget(beta=2, s=5, t=0, i=4, O=frozenset({6}))
        assert verify_hardness_gadget(g, gadget) == []

    def test_phg_phg_candidate_parities_differ(self):
        g = spider_tree()
        pg_long = PartialHardnessGadget(s=5, i=4, O=frozenset({6}), path=Path((0, 4)))
        pg_short = PartialHardnessGadget(s=2, i=0, O=frozenset({3}), path=Path((0,)))
        ell = pg_long.path.length + pg_short.path.length
        a = walk_parity(g, pg_long.i, pg_short.i, ell + 2)
        b = walk_parity(g, pg_long.i, pg_short.s, ell + 3)
        assert a != b


def ring_with(n: int, attachments: dict[int, str]) -> Graph:
    """Cycle 0..n-1 with attachments: 'b' a bristle, 'sq' a square with a
    bristled corner (the bristle keeps the attachment involution-free)."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    nxt = n
    for v, kind in sorted(attachments.items()):
        if kind == "b":
            edges.append((v, nxt))
            nxt += 1
        elif kind == "sq":
            a, b, c, d = nxt, nxt + 1, nxt + 2, nxt + 3
            edges += [(v, a), (a, b), (b, c), (c, v), (a, d)]
            nxt += 4
        else:
            raise ValueError(kind)
    return Graph(nxt, edges)


class TestGadgetCycles:
    def test_odd_cycle_halfway_attachment(self):
        g = ring_with(9, {1: "b", 2: "b", 4: "b"})
        gadget = gadget_cycles(g, 0, tuple(range(9)))
        assert verify_hardness_gadget(g, gadget) == []
        # halfway construction: beta 1, i = t, anchors map to s with k = 8
        assert gadget.beta == 1 and gadget.i == gadget.t
        assert len(gadget.K) == 1
        (u,) = gadget.K
        assert gadget.k[u] == 8 and gadget.w[u] == gadget.s

    def test_even_cycle_even_attachment(self):
        g = ring_with(6, {2: "sq"})
        gadget = gadget_cycles(g, 0, tuple(range(6)))
        assert verify_hardness_gadget(g, gadget) == []
        assert gadget.beta == 1 and gadget.i == gadget.t == 1
        assert gadget.s == 2 and len(gadget.O) == 3 and gadget.K == frozenset()

    def test_even_cycle_odd_attachment(self):
        g = ring_with(8, {2: "b", 3: "b", 5: "b", 6: "b", 7: "b"})
        gadget = gadget_cycles(g, 0, tuple(range(8)))
        assert verify_hardness_gadget(g, gadget) == []
        assert gadget == HardnessGadget(
            beta=3, s=2, t=7, i=3, O=frozenset({8}), K=frozenset({1}), k={1: 2}, w={1: 1}
        )

    def test_odd_cycle_near_attachment(self):
        # both halfway spots are bristled, the even-degree spot sits closer to
        # the root: the near-attachment construction with a longer walk length
        g = ring_with(9, {2: "b", 3: "b", 4: "b", 5: "b"})
        gadget = gadget_cycles(g, 0, tuple(range(9)))
        assert verify_hardness_gadget(g, gadget) == []
        assert gadget == HardnessGadget(
            beta=3, s=4, t=1, i=3, O=frozenset({5}),
            K=frozenset({11}), k={11: 8}, w={11: 4},
        )

    def test_odd_cycle_near_attachment_collapses_to_i(self):
        # the closest even-degree vertex is i itself, so t = i
        g = ring_with(9, {2: "b", 4: "b", 5: "b"})
        gadget = gadget_cycles(g, 0, tuple(range(9)))
        assert verify_hardness_gadget(g, gadget) == []
        assert gadget.t == gadget.i == 3 and gadget.beta == 1

    def test_distance_requirements_on_root_component(self):
        g = ring_with(9, {1: "b", 2: "b", 4: "b"})
        gadget = gadget_cycles(g, 0, tuple(range(9)))
        assert check_distance_requirements(g, gadget, 0) == []

    def test_rejects_length_four(self):
        with pytest.raises(PreconditionError):
            gadget_cycles(cycle_graph(4), 0, (0, 1, 2, 3))

    def test_rejects_non_mosaic_attachment(self):
        edges = [(i, (i + 1) % 6) for i in range(6)] + [(2, 6), (6, 7)]
        g = Graph(9, edges + [(1, 8)])
        with pytest.raises(PreconditionError):
            gadget_cycles(g, 0, tuple(range(6)))


class TestPartialGadgetTree:
    def test_spider_rooted_at_leg_end(self):
        pg = partial_gadget_tree(spider_tree(), 6)
        assert pg == PartialHardnessGadget(s=2, i=0, O=frozenset({3}), path=Path((6, 5, 4, 0)))

    def test_p3_rooted_at_leaf(self):
        pg = partial_gadget_tree(path_graph(3), 0)
        assert pg.s == 1 and pg.i == 0 and pg.O == frozenset({2})

    def test_two_vertex_tree_rejected(self):
        with pytest.raises(PreconditionError):
            partial_gadget_tree(path_graph(2), 0)

    def test_symmetric_tree_rejected(self):
        with pytest.raises(PreconditionError):
            partial_gadget_tree(star_graph(3), 0)


class TestFindStructureRooted:
    def test_single_vertex_is_mosaic(self):
        res = find_structure_rooted(Graph(1), 0)
        assert isinstance(res, MosaicCertificate) and res.is_mosaic

    def test_spider_gives_partial(self):
        res = find_structure_rooted(spider_tree(), 0)
        assert isinstance(res, PartialHardnessGadget)

    def test_square_flanked_by_vertex_and_bristle(self):
        # 4-cycle at the root with a pendant 2-path opposite and one bristle:
        # resolved through the trivial 2,3-path across the square
        g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (3, 6)])
        res = find_structure_rooted(g, 0)
        assert isinstance(res, HardnessGadget)
        assert res == HardnessGadget(beta=2, s=4, t=3, i=2, O=frozenset({5}))
        assert check_distance_requirements(g, res, 0) == []

    def test_root_square_with_proper_flank_and_far_partial(self):
        # root on a 4-cycle, a bristled square on one flank, a pendant 2-path
        # opposite: resolved by combining the flank 2,3-path with the lifted
        # partial gadget
        g = Graph(
            11,
            [
                (0, 1), (1, 2), (2, 3), (3, 0),
                (1, 4), (4, 5), (5, 6), (6, 1), (4, 7),
                (2, 8), (8, 9),
                (3, 10),
            ],
        )
        res = find_structure_rooted(g, 0)
        assert isinstance(res, HardnessGadget)
        assert res == HardnessGadget(beta=3, s=8, t=4, i=2, O=frozenset({9}))
        assert check_distance_requirements(g, res, 0) == []

    def test_exhaustive_small(self):
        for g in all_cactus_graphs(10):
            for x in range(g.n):
                if find_involution(g, fixed=(x,)) is not None:
                    continue
                res = find_structure_rooted(g, x)
                if isinstance(res, HardnessGadget):
                    assert verify_hardness_gadget(g, res) == []
                    assert check_distance_requirements(g, res, x) == []
                elif isinstance(res, PartialHardnessGadget):
                    assert verify_partial_gadget(g, x, res) == []
                else:
                    assert res.is_mosaic
                    assert find_shortcut(g, x) is None


class TestFindHardnessGadget:
    def test_spider(self):
        gadget = find_hardness_gadget(spider_tree())
        assert gadget == HardnessGadget(beta=2, s=5, t=0, i=4, O=frozenset({6}))

    def test_tailed_cycle_9(self):
        g = tailed_cycle_9()
        gadget = find_hardness_gadget(g)
        assert verify_hardness_gadget(g, gadget) == []

    def test_k2_rejected(self):
        with pytest.raises(PreconditionError):
            find_hardness_gadget(path_graph(2))

    def test_non_cactus_rejected(self):
        from parhom.corpus import complete_graph

        with pytest.raises(PreconditionError):
            find_hardness_gadget(complete_graph(4))

    def test_glued_mosaic_pair_end_to_end(self):
        # two non-isomorphic bristled squares at one vertex go through the
        # two-proper-mosaics combination
        g = glue(bristled_square((1,)), bristled_square((1, 2)), 0, 0)
        gadget = find_hardness_gadget(g)
        assert verify_hardness_gadget(g, gadget) == []

    def test_corpus_coverage_small(self, involution_free_corpus9):
        for g in involution_free_corpus9:
            gadget = find_hardness_gadget(g)
            assert verify_hardness_gadget(g, gadget) == []


class TestBruteForceSearch:
    def test_k2_empty(self):
        assert brute_force_gadget_search(path_graph(2)) == []

    def test_c4_empty(self):
        assert brute_force_gadget_search(cycle_graph(4)) == []

    def test_spider_contains_constructive(self):
        g = spider_tree()
        found = brute_force_gadget_search(g)
        assert found
        assert find_hardness_gadget(g) in found
        for gadget in found:
            assert verify_hardness_gadget(g, gadget) == []

    def test_spider_with_tight_bounds(self):
        g = spider_tree()
        found = brute_force_gadget_search(g, beta_max=4, k_max=8)
        assert found
        assert find_hardness_gadget(g) in found

    def test_asymmetric_shortcut_instance_contains_constructive(self):
        # double square with a third pendant breaking the mirror symmetry
        g = Graph(
            10,
            [(0, 1), (1, 3), (3, 4), (4, 0), (1, 2), (2, 5), (5, 6), (6, 1),
             (0, 7), (2, 8), (4, 9)],
        )
        found = brute_force_gadget_search(g)
        assert find_hardness_gadget(g) in found
