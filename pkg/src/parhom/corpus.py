"""Graph fixtures and cactus corpora for tests, the selfcheck suite, and docs.

The exhaustive generator grows cactus graphs block by block (append a pendant
edge or a whole cycle at a vertex) and deduplicates isomorphism classes, so it
enumerates every connected cactus up to isomorphism.
"""

from __future__ import annotations

import random
from itertools import combinations

from .automorphisms import are_isomorphic, find_involution
from .graphs import Graph, cactus_cycles


# -- small named graphs -----------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def bowtie_graph() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def spider_tree() -> Graph:
    """Center 0 with pendant paths of lengths 1, 2, 3: the smallest
    involution-free tree."""
    return Graph(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)])


def tailed_triangle() -> Graph:
    """Triangle with a pendant edge and a pendant 2-path: the smallest
    involution-free cactus with a cycle."""
    return Graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (4, 5)])


def double_square_shortcut() -> Graph:
    """Two 4-cycles chained along a 2-edge path with pendant ends: the minimal
    shortcut-gadget instance (odd ends 0 and 2)."""
    return Graph(
        9,
        [
            (0, 1), (1, 3), (3, 4), (4, 0),
            (1, 2), (2, 5), (5, 6), (6, 1),
            (0, 7), (2, 8),
        ],
    )


def tailed_cycle_9() -> Graph:
    """9-cycle with pendant edges at positions 1, 4, 7 and pendant 2-paths at
    2, 5, 8; rotation order 3, no involution."""
    edges = [(i, (i + 1) % 9) for i in range(9)]
    edges += [(1, 9), (4, 10), (7, 11)]
    edges += [(2, 12), (12, 13), (5, 14), (14, 15), (8, 16), (16, 17)]
    return Graph(18, edges)


def tailed_cycle_12() -> Graph:
    """12-cycle with pendant edges at 1,2,4,5,7,8,10,11 and the ones at
    2,5,8,11 extended to 2-paths; the half-turn is a fixed-point-free
    involution."""
    edges = [(i, (i + 1) % 12) for i in range(12)]
    spots = [1, 2, 4, 5, 7, 8, 10, 11]
    nxt = 12
    tips = {}
    for p in spots:
        edges.append((p, nxt))
        tips[p] = nxt
        nxt += 1
    for p in (2, 5, 8, 11):
        edges.append((tips[p], nxt))
        nxt += 1
    return Graph(nxt, edges)


def square_chain(variant: str) -> Graph:
    """Three 4-cycles in a chain with four pendant edges.

    Variants a, b, c move one pendant between attachment spots; a and c are
    ParityPComplete fixtures, b reduces to the empty graph.
    """
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 0),
        (4, 5), (5, 6), (6, 7), (7, 4),
        (8, 9), (9, 10), (10, 11), (11, 8),
        (3, 4), (4, 8),
    ]
    pendants = {
        "a": [(11, 12), (7, 13), (1, 14), (0, 15)],
        "b": [(11, 12), (7, 13), (6, 14), (0, 15)],
        "c": [(11, 12), (7, 13), (6, 14), (1, 15)],
    }
    if variant not in pendants:
        raise ValueError(f"unknown variant {variant!r}")
    return Graph(16, edges + pendants[variant])


# -- exhaustive cactus enumeration ---------------------------------------------------


def _iso_key(g: Graph):
    sig = tuple(
        sorted(
            (g.degree(v), tuple(sorted(g.degree(u) for u in g.neighbors[v])))
            for v in range(g.n)
        )
    )
    cyc = tuple(sorted(len(c) for c in cactus_cycles(g)))
    return (g.n, g.m, cyc, sig)


class _IsoSet:
    """Set of graphs up to isomorphism: invariant buckets + exact matching."""

    def __init__(self):
        self.buckets: dict = {}

    def add(self, g: Graph) -> bool:
        key = _iso_key(g)
        bucket = self.buckets.setdefault(key, [])
        for h in bucket:
            if are_isomorphic(g, h):
                return False
        bucket.append(g)
        return True


def _attachments(g: Graph, max_n: int):
    """All cacti obtained by attaching a pendant edge or a fresh cycle."""
    for v in range(g.n):
        if g.n + 1 <= max_n:
            yield Graph(g.n + 1, list(g.edges) + [(v, g.n)])
        for c in range(3, max_n - g.n + 2):
            fresh = [g.n + i for i in range(c - 1)]
            ring = [v] + fresh
            extra = [(ring[i], ring[(i + 1) % c]) for i in range(c)]
            yield Graph(g.n + c - 1, list(g.edges) + extra)


def all_cactus_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    """Every connected cactus with min_n..max_n vertices, one per isomorphism
    class, in a deterministic order."""
    seen = _IsoSet()
    start = Graph(1)
    seen.add(start)
    out = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for h in _attachments(g, max_n):
                if seen.add(h):
                    out.append(h)
                    nxt.append(h)
        frontier = nxt
    out.sort(key=lambda g: (g.n, g.m, g.edges))
    return [g for g in out if g.n >= min_n]


def involution_free(graphs) -> list[Graph]:
    return [g for g in graphs if find_involution(g) is None]


# -- random cacti ----------------------------------------------------------------------


def random_cactus(rng: random.Random, n: int) -> Graph:
    """A random connected cactus with exactly n vertices."""
    if n < 1:
        raise ValueError("need at least one vertex")
    edges: list[tuple[int, int]] = []
    cur = 1
    while cur < n:
        v = rng.randrange(cur)
        remaining = n - cur
        if remaining >= 2 and rng.random() < 0.6:
            c = rng.randint(3, min(6, remaining + 1))
            ring = [v] + [cur + i for i in range(c - 1)]
            edges.extend((ring[i], ring[(i + 1) % c]) for i in range(c))
            cur += c - 1
        else:
            edges.append((v, cur))
            cur += 1
    return Graph(n, edges)


def random_cactus_with_involution(rng: random.Random, n: int, tries: int = 500) -> Graph:
    for _ in range(tries):
        g = random_cactus(rng, n)
        if find_involution(g) is not None:
            return g
    raise RuntimeError(f"no cactus with an involution found at n={n}")


def random_involution_free_cactus(rng: random.Random, n: int, tries: int = 3000) -> Graph:
    for _ in range(tries):
        g = random_cactus(rng, n)
        if find_involution(g) is None:
            return g
    raise RuntimeError(f"no involution-free cactus found at n={n}")


def big_asymmetric_cactus(sections: int) -> Graph:
    """A deterministic involution-free cactus of arbitrary size: a spine path
    whose vertices carry cycle-plus-tail decorations of varying shape.

    (Random sampling stops finding involution-free graphs beyond ~25 vertices
    because local symmetries become overwhelmingly likely.)
    """
    edges = []
    spine = [0]
    nxt = 1
    for _ in range(sections):
        edges.append((spine[-1], nxt))
        spine.append(nxt)
        nxt += 1
    for i, v in enumerate(spine[1:], start=1):
        c = 3 + (i % 4)
        ring = [v] + list(range(nxt, nxt + c - 1))
        nxt += c - 1
        edges += [(ring[j], ring[(j + 1) % c]) for j in range(c)]
        prev = ring[1]
        for _ in range(1 + (i % 3)):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [
        (i, j) for i, j in combinations(range(n), 2) if rng.random() < p
    ]
    return Graph(n, edges)
