import random

import pytest
from hypothesis import strategies as st

from parhom.corpus import all_cactus_graphs, involution_free, random_cactus
from parhom.graphs import Graph


@pytest.fixture(scope="session")
def cactus_corpus8():
    return all_cactus_graphs(8)


@pytest.fixture(scope="session")
def involution_free_corpus9():
    return involution_free(all_cactus_graphs(9, min_n=2))


@st.composite
def graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                edges.append((i, j))
    return Graph(n, edges)


@st.composite
def cacti(draw, max_n=10, min_n=1):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_cactus(random.Random(seed), n)


# -- independent oracles shared across test modules --------------------------------


def oracle_walk_count(g: Graph, u: int, v: int, k: int) -> int:
    """Explicit walk enumeration by depth-first search."""
    if k == 0:
        return 1 if u == v else 0
    total = 0
    stack = [(u, 0)]
    while stack:
        at, steps = stack.pop()
        if steps == k:
            total += at == v
            continue
        for w in g.neighbors[at]:
            stack.append((w, steps + 1))
    return total


def oracle_simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All simple cycles, each listed once (smallest vertex first, smaller
    neighbor second)."""
    out = set()

    def dfs(start, path):
        at = path[-1]
        for w in g.neighbors[at]:
            if w == start and len(path) >= 3:
                if path[1] < path[-1]:
                    out.add(tuple(path))
            elif w > start and w not in path:
                dfs(start, path + [w])

    for s in range(g.n):
        dfs(s, [s])
    return sorted(out)


def oracle_is_cactus(g: Graph) -> bool:
    counts = {}
    for cyc in oracle_simple_cycles(g):
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            e = (min(a, b), max(a, b))
            counts[e] = counts.get(e, 0) + 1
    return all(c <= 1 for c in counts.values())


def oracle_all_paths(g: Graph, u: int, v: int) -> list[tuple[int, ...]]:
    out = []

    def dfs(path):
        at = path[-1]
        if at == v:
            out.append(tuple(path))
            return
        for w in g.neighbors[at]:
            if w not in path:
                dfs(path + [w])

    dfs([u])
    return out


def oracle_count_homs(g: Graph, h: Graph, pin=None) -> int:
    """Assignment enumeration over the full product space."""
    from itertools import product

    domains = []
    for v in range(g.n):
        allowed = range(h.n) if pin is None or v not in pin else sorted(pin[v])
        domains.append(list(allowed))
    total = 0
    for phi in product(*domains):
        if all(h.has_edge(phi[a], phi[b]) for a, b in g.edges):
            total += 1
    return total
