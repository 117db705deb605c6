"""Undirected simple graphs and the structural decompositions everything else uses.

Vertices are dense 0-based integers. Graph values are immutable and hashable,
so they can key caches. Subgraph-producing operations return the relabeling
alongside the new graph (callers need to track identities).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputFormatError, PreconditionError

INF = math.inf


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "neighbors", "rows", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            seen.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        nbrs = [set() for _ in range(n)]
        rows = [0] * n
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.neighbors: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self.rows: tuple[int, ...] = tuple(rows)
        self._hash = hash((self.n, self.edges))

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.rows[u] >> v) & 1 == 1

    def sorted_neighbors(self, v: int) -> list[int]:
        return sorted(self.neighbors[v])

    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class RootedGraph:
    """A graph with one distinguished vertex."""

    graph: Graph
    root: int

    def __post_init__(self):
        if not (0 <= self.root < self.graph.n):
            raise ValueError("root out of range")


@dataclass(frozen=True)
class Path:
    """A simple path given by its vertex sequence; length is the edge count."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a path has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path repeats a vertex")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def reverse(self) -> "Path":
        return Path(tuple(reversed(self.vertices)))

    def extend(self, v: int) -> "Path":
        return Path(self.vertices + (v,))

    def join(self, other: "Path") -> "Path":
        """Concatenate with another path that starts where this one ends."""
        if other.vertices[0] != self.vertices[-1]:
            raise ValueError("paths do not share an endpoint")
        return Path(self.vertices + other.vertices[1:])

    def valid_in(self, g: Graph) -> bool:
        return all(g.has_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:]))


class NotUnique:
    """Sentinel result: several shortest paths exist."""

    __slots__ = ()

    def __repr__(self):
        return "NOT_UNIQUE"


class Unreachable:
    """Sentinel result: no path exists."""

    __slots__ = ()

    def __repr__(self):
        return "UNREACHABLE"


NOT_UNIQUE = NotUnique()
UNREACHABLE = Unreachable()


# -- parsing / serialization ----------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: first line "n m", then m lines "u v".

    Duplicate edge lines collapse to one edge. Errors name the offending line.
    """
    lines = [ln for ln in text.splitlines()]
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx >= len(lines):
        raise InputFormatError("line 1: missing header 'n m'")
    header = lines[idx].split()
    if len(header) != 2:
        raise InputFormatError(f"line {idx + 1}: expected 'n m', got {lines[idx]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise InputFormatError(f"line {idx + 1}: expected integers in 'n m'") from None
    if n < 0 or m < 0:
        raise InputFormatError(f"line {idx + 1}: negative count in 'n m'")
    edges = []
    lineno = idx + 1
    read = 0
    for raw in lines[idx + 1 :]:
        lineno += 1
        if not raw.strip():
            continue
        if read == m:
            raise InputFormatError(f"line {lineno}: more than {m} edge lines")
        parts = raw.split()
        if len(parts) != 2:
            raise InputFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(f"line {lineno}: non-integer vertex id") from None
        if not (0 <= u < n) or not (0 <= v < n):
            raise InputFormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        if u == v:
            raise InputFormatError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
        read += 1
    if read < m:
        raise InputFormatError(f"expected {m} edge lines, found {read}")
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    """Deterministic edge-list text: sorted edges, one per line."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def to_dot(g: Graph, root: int | None = None, name: str = "G") -> str:
    """DOT export; vertices drawn as circles, the root double-circled."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.n):
        shape = " [shape=doublecircle]" if v == root else ""
        lines.append(f"  {v}{shape};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- relabelings and subgraphs ---------------------------------------------


@dataclass(frozen=True)
class Subgraph:
    """An induced subgraph plus the relabeling back to the parent graph."""

    graph: Graph
    to_parent: tuple[int, ...]

    def parent_of(self, v: int) -> int:
        return self.to_parent[v]

    def from_parent(self) -> dict[int, int]:
        return {p: i for i, p in enumerate(self.to_parent)}


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Subgraph:
    keep = sorted(set(vertices))
    index = {p: i for i, p in enumerate(keep)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Subgraph(Graph(len(keep), edges), tuple(keep))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a permutation (new id = perm[old id])."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation")
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    n = 0
    edges = []
    for h in graphs:
        edges.extend((u + n, v + n) for u, v in h.edges)
        n += h.n
    return Graph(n, edges)


# -- connectivity and distances --------------------------------------------


def components(g: Graph) -> list[frozenset[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Distances from source; math.inf for unreachable vertices."""
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors[u]:
            if dist[v] == INF:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    return bfs_distances(g, u)[v]


def distance_to_set(g: Graph, u: int, targets: Iterable[int]) -> float:
    targets = set(targets)
    if not targets:
        return INF
    dist = bfs_distances(g, u)
    return min(dist[t] for t in targets)


def unique_shortest_path(g: Graph, u: int, v: int):
    """The unique shortest u-v path, or NOT_UNIQUE / UNREACHABLE.

    Counts shortest paths layer by layer so that a tie anywhere along the way
    is detected, then reconstructs the path when the count is exactly one.
    """
    if u == v:
        return Path((u,))
    dist: list[float] = [INF] * g.n
    ways = [0] * g.n
    dist[u] = 0
    ways[u] = 1
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if dist[a] >= dist[v]:
            continue
        for b in g.neighbors[a]:
            if dist[b] == INF:
                dist[b] = dist[a] + 1
                ways[b] = ways[a]
                queue.append(b)
            elif dist[b] == dist[a] + 1:
                ways[b] += ways[a]
    if ways[v] == 0:
        return UNREACHABLE
    if ways[v] > 1:
        return NOT_UNIQUE
    rev = [v]
    cur = v
    while cur != u:
        preds = [p for p in g.neighbors[cur] if dist[p] == dist[cur] - 1 and ways[p]]
        cur = preds[0]
        rev.append(cur)
    return Path(tuple(reversed(rev)))


# -- biconnected structure --------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected blocks (as vertex sets), cut vertices, and the block-cut tree.

    block_cut_tree lists (block index, cut vertex) incidences; together with
    the blocks this describes the bipartite tree.
    """

    blocks: tuple[frozenset[int], ...]
    block_edge_sets: tuple[frozenset[tuple[int, int]], ...]
    cut_vertices: frozenset[int]
    block_cut_tree: tuple[tuple[int, int], ...]


def blocks(g: Graph) -> BlockDecomposition:
    """Standard biconnected decomposition (iterative lowpoint DFS)."""
    disc = [0] * g.n
    low = [0] * g.n
    timer = 1
    edge_stack: list[tuple[int, int]] = []
    block_edges: list[list[tuple[int, int]]] = []

    for root in range(g.n):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.sorted_neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if not disc[w]:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(g.sorted_neighbors(w))))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    # p separates u's subtree: pop one block of edges
                    blk = []
                    while True:
                        e = edge_stack.pop()
                        blk.append(e)
                        if e == (p, u):
                            break
                    block_edges.append(blk)

    blocks_v = []
    blocks_e = []
    for blk in block_edges:
        vs = set()
        for a, b in blk:
            vs.add(a)
            vs.add(b)
        blocks_v.append(frozenset(vs))
        blocks_e.append(frozenset((min(a, b), max(a, b)) for a, b in blk))
    # isolated vertices form their own single-vertex blocks
    covered = set().union(*blocks_v) if blocks_v else set()
    for v in range(g.n):
        if v not in covered:
            blocks_v.append(frozenset([v]))
            blocks_e.append(frozenset())
    # a vertex is a cut vertex iff it lies in >= 2 blocks
    membership: dict[int, list[int]] = {}
    for i, vs in enumerate(blocks_v):
        for v in vs:
            membership.setdefault(v, []).append(i)
    cuts = frozenset(v for v, bs in membership.items() if len(bs) > 1)
    tree = tuple(
        (i, v) for v, bs in sorted(membership.items()) if v in cuts for i in bs
    )
    order = sorted(range(len(blocks_v)), key=lambda i: sorted(blocks_v[i]))
    remap = {old: new for new, old in enumerate(order)}
    return BlockDecomposition(
        blocks=tuple(blocks_v[i] for i in order),
        block_edge_sets=tuple(blocks_e[i] for i in order),
        cut_vertices=cuts,
        block_cut_tree=tuple(sorted((remap[i], v) for i, v in tree)),
    )


def cut_vertices(g: Graph) -> frozenset[int]:
    return blocks(g).cut_vertices


def is_cactus(g: Graph) -> bool:
    """Every edge on at most one cycle: each block is an edge or a chordless cycle.

    A block on k >= 3 vertices qualifies iff it has exactly k edges.
    Connectivity is deliberately not part of this test.
    """
    dec = blocks(g)
    for vs, es in zip(dec.blocks, dec.block_edge_sets):
        k = len(vs)
        if k <= 2:
            continue
        if len(es) != k:
            return False
    return True


def cactus_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All cycles of a cactus-condition graph, each in cyclic vertex order.

    Each cycle starts at its smallest vertex, second vertex the smaller
    neighbor, so the output is deterministic.
    """
    dec = blocks(g)
    cycles = []
    for vs, es in zip(dec.blocks, dec.block_edge_sets):
        k = len(vs)
        if k < 3:
            continue
        if len(es) != k:
            raise PreconditionError("graph violates the cactus condition")
        nbr: dict[int, list[int]] = {v: [] for v in vs}
        for a, b in es:
            nbr[a].append(b)
            nbr[b].append(a)
        start = min(vs)
        nxt = min(nbr[start])
        cyc = [start, nxt]
        prev, cur = start, nxt
        while True:
            a, b = nbr[cur]
            step = b if a == prev else a
            if step == start:
                break
            cyc.append(step)
            prev, cur = cur, step
        cycles.append(tuple(cyc))
    cycles.sort()
    return cycles


def edge_on_two_cycles(g: Graph) -> tuple[int, int] | None:
    """An edge witnessing failure of the cactus condition, if any."""
    dec = blocks(g)
    for vs, es in zip(dec.blocks, dec.block_edge_sets):
        if len(vs) >= 3 and len(es) != len(vs):
            return min(es)
    return None


# -- splits ------------------------------------------------------------------


@dataclass(frozen=True)
class Split:
    """The split of a graph at a cut vertex: components re-including the vertex."""

    cut_vertex: int
    components: tuple[Subgraph, ...]

    def component_vertex_sets(self) -> list[frozenset[int]]:
        return [frozenset(c.to_parent) for c in self.components]


def split_at(g: Graph, v: int) -> Split:
    """Split a connected graph at a cut vertex v."""
    if not is_connected(g):
        raise PreconditionError("split_at requires a connected graph")
    rest = [u for u in range(g.n) if u != v]
    sub = induced_subgraph(g, rest)
    comps = components(sub.graph)
    if len(comps) < 2:
        raise PreconditionError(f"vertex {v} is not a cut vertex")
    parts = []
    for comp in sorted(comps, key=lambda c: min(sub.to_parent[x] for x in c)):
        orig = {sub.to_parent[x] for x in comp}
        orig.add(v)
        parts.append(induced_subgraph(g, orig))
    return Split(cut_vertex=v, components=tuple(parts))
