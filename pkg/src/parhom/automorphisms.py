"""Automorphism machinery: involutions, the involution-free reduction, orbits,
orbit-preserving endomorphisms, and the fixed-center structure of cactus graphs.

All searches are plain backtracking over vertex maps, pruned by iterated
degree/neighborhood color refinement. That is enough at the scale this
package targets; there is no canonical-labeling machinery here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BudgetError, InternalContradictionError, PreconditionError
from .graphs import (
    Graph,
    Subgraph,
    cactus_cycles,
    induced_subgraph,
    is_cactus,
    is_connected,
    relabel,
)

DEFAULT_AUT_CAP = 16
DEFAULT_ENDO_CAP = 9
AUT_ENUM_LIMIT = 100_000


# -- color refinement --------------------------------------------------------


def _refine(graphs: list[Graph], init: list[list]) -> list[list[int]]:
    """Jointly refine vertex colors of several graphs to a stable coloring.

    Colors are comparable across the graphs (shared compression table), so the
    result can drive candidate pruning for isomorphism search.
    """
    table: dict = {}
    colors = []
    for cs in init:
        row = []
        for c in cs:
            row.append(table.setdefault(("i", c), len(table)))
        colors.append(row)
    while True:
        table2: dict = {}
        new_colors = []
        changed = False
        for g, cs in zip(graphs, colors):
            row = []
            for v in range(g.n):
                sig = (cs[v], tuple(sorted(cs[w] for w in g.neighbors[v])))
                row.append(table2.setdefault(sig, len(table2)))
            new_colors.append(row)
        for old, new in zip(colors, new_colors):
            # refinement only splits classes, so comparing class counts suffices
            if len(set(old)) != len(set(new)):
                changed = True
        colors = new_colors
        if not changed:
            return colors


def stable_colors(g: Graph, fixed: tuple[int, ...] = ()) -> list[int]:
    init = [g.degree(v) for v in range(g.n)]
    marks = {v: i for i, v in enumerate(fixed)}
    init = [(init[v], marks.get(v, -1)) for v in range(g.n)]
    return _refine([g], [init])[0]


# -- automorphism and isomorphism search --------------------------------------


def _consistent(g: Graph, h: Graph, sigma: list[int], assigned: list[int], v: int, w: int) -> bool:
    rv = g.rows[v]
    rw = h.rows[w]
    for u in assigned:
        if (rv >> u) & 1 != (rw >> sigma[u]) & 1:
            return False
    return True


def is_automorphism(g: Graph, perm) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    return all(g.has_edge(perm[u], perm[v]) for u, v in g.edges)


def automorphisms(g: Graph, cap: int | None = None, limit: int = AUT_ENUM_LIMIT) -> list[tuple[int, ...]]:
    """The full automorphism group, as permutation tuples in lexicographic order."""
    cap = DEFAULT_AUT_CAP if cap is None else cap
    if g.n > cap:
        raise BudgetError(f"automorphism enumeration capped at {cap} vertices, got {g.n}")
    colors = stable_colors(g)
    cand = [sorted(w for w in range(g.n) if colors[w] == colors[v]) for v in range(g.n)]
    out: list[tuple[int, ...]] = []
    sigma = [-1] * g.n
    used = [False] * g.n
    assigned: list[int] = []

    def rec(v: int):
        if v == g.n:
            out.append(tuple(sigma))
            if len(out) > limit:
                raise BudgetError(f"more than {limit} automorphisms")
            return
        for w in cand[v]:
            if used[w] or not _consistent(g, g, sigma, assigned, v, w):
                continue
            sigma[v] = w
            used[w] = True
            assigned.append(v)
            rec(v + 1)
            assigned.pop()
            used[w] = False
            sigma[v] = -1

    rec(0)
    return out


def has_nontrivial_automorphism(g: Graph) -> bool:
    """Whether any automorphism other than the identity exists (uncapped search)."""
    colors = stable_colors(g)
    cand = [sorted(w for w in range(g.n) if colors[w] == colors[v]) for v in range(g.n)]
    if all(len(c) == 1 for c in cand):
        return False
    sigma = [-1] * g.n
    used = [False] * g.n
    assigned: list[int] = []

    def rec(v: int, moved: bool) -> bool:
        if v == g.n:
            return moved
        for w in cand[v]:
            if used[w] or not _consistent(g, g, sigma, assigned, v, w):
                continue
            # skipping the all-fixed completion early: if nothing has moved yet
            # and every remaining vertex would be forced to itself, this branch
            # only reaches the identity, which does not count.
            sigma[v] = w
            used[w] = True
            assigned.append(v)
            if rec(v + 1, moved or w != v):
                return True
            assigned.pop()
            used[w] = False
            sigma[v] = -1
        return False

    return rec(0, False)


def find_involution(
    g: Graph, fixed=(), rng: random.Random | None = None
) -> tuple[int, ...] | None:
    """An involution of g fixing every vertex in `fixed` pointwise, or None.

    Deterministic: returns the lexicographically least valid involution. With
    `rng`, tie-breaking is randomized instead (used only by the uniqueness
    property test of the involution-free reduction).
    """
    fixed = tuple(sorted(set(fixed)))
    if rng is not None:
        perm = list(range(g.n))
        rng.shuffle(perm)
        gp = relabel(g, perm)
        got = find_involution(gp, tuple(perm[v] for v in fixed))
        if got is None:
            return None
        inv = [0] * g.n
        for i, p in enumerate(perm):
            inv[p] = i
        return tuple(inv[got[perm[v]]] for v in range(g.n))

    colors = stable_colors(g, fixed)
    cand = [sorted(w for w in range(g.n) if colors[w] == colors[v]) for v in range(g.n)]
    sigma = [-1] * g.n
    assigned: list[int] = []

    def rec(v: int, moved: bool) -> bool:
        while v < g.n and sigma[v] != -1:
            v += 1
        if v == g.n:
            return moved
        for w in cand[v]:
            if w < v or (w != v and sigma[w] != -1):
                continue
            if not _consistent(g, g, sigma, assigned, v, w):
                continue
            sigma[v] = w
            assigned.append(v)
            ok = True
            if w != v:
                if _consistent(g, g, sigma, assigned, w, v):
                    sigma[w] = v
                    assigned.append(w)
                else:
                    ok = False
            if ok and rec(v + 1, moved or w != v):
                return True
            if w != v and sigma[w] == v:
                assigned.pop()
                sigma[w] = -1
            assigned.pop()
            sigma[v] = -1
        return False

    if rec(0, False):
        return tuple(sigma)
    return None


def isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """A vertex bijection g -> h preserving adjacency both ways, or None."""
    if g.n != h.n or g.m != h.m:
        return None
    cg, ch = _refine([g, h], [[g.degree(v) for v in range(g.n)], [h.degree(v) for v in range(h.n)]])
    if sorted(cg) != sorted(ch):
        return None
    cand = [sorted(w for w in range(h.n) if ch[w] == cg[v]) for v in range(g.n)]
    sigma = [-1] * g.n
    used = [False] * h.n
    assigned: list[int] = []

    def rec(v: int) -> bool:
        if v == g.n:
            return True
        for w in cand[v]:
            if used[w] or not _consistent(g, h, sigma, assigned, v, w):
                continue
            sigma[v] = w
            used[w] = True
            assigned.append(v)
            if rec(v + 1):
                return True
            assigned.pop()
            used[w] = False
            sigma[v] = -1
        return False

    return tuple(sigma) if rec(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return isomorphism(g, h) is not None


# -- involution-free reduction -------------------------------------------------


def fixed_subgraph(g: Graph, sigma) -> Subgraph:
    """Induced subgraph on the fixed points of an involution (with relabeling)."""
    if not is_automorphism(g, sigma):
        raise PreconditionError("sigma is not an automorphism")
    if any(sigma[sigma[v]] != v for v in range(g.n)) or tuple(sigma) == tuple(range(g.n)):
        raise PreconditionError("sigma is not an involution")
    return induced_subgraph(g, [v for v in range(g.n) if sigma[v] == v])


@dataclass(frozen=True)
class ReductionStep:
    graph: Graph
    involution: tuple[int, ...]
    fixed: Subgraph


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    final: Graph


def involution_free_reduction(g: Graph, rng: random.Random | None = None) -> ReductionTrace:
    """Repeatedly pass to the fixed-point subgraph until no involution remains."""
    steps = []
    cur = g
    while True:
        sigma = find_involution(cur, rng=rng)
        if sigma is None:
            return ReductionTrace(steps=tuple(steps), final=cur)
        sub = fixed_subgraph(cur, sigma)
        steps.append(ReductionStep(graph=cur, involution=sigma, fixed=sub))
        cur = sub.graph


# -- orbits and parity ----------------------------------------------------------


def orbits(g: Graph, cap: int | None = None) -> tuple[frozenset[int], ...]:
    """Orbit partition of the vertices under the automorphism group."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in automorphisms(g, cap=cap):
        for v in range(g.n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[a] = b
    groups: dict[int, set[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), set()).add(v)
    return tuple(sorted((frozenset(s) for s in groups.values()), key=min))


def aut_parity(g: Graph) -> int:
    """1 iff |Aut(g)| is odd: by Cauchy, exactly when no involution exists."""
    return 1 if find_involution(g) is None else 0


def orbit_preserving_endomorphisms(g: Graph, cap: int | None = None) -> list[tuple[int, ...]]:
    """All endomorphisms mapping every vertex inside its own orbit."""
    cap = DEFAULT_ENDO_CAP if cap is None else cap
    if g.n > cap:
        raise BudgetError(f"endomorphism enumeration capped at {cap} vertices, got {g.n}")
    orb = orbits(g, cap=max(cap, DEFAULT_AUT_CAP))
    domain = [None] * g.n
    for o in orb:
        for v in o:
            domain[v] = sorted(o)
    out = []
    phi = [-1] * g.n

    def rec(v: int):
        if v == g.n:
            out.append(tuple(phi))
            return
        for w in domain[v]:
            ok = True
            for u in g.neighbors[v]:
                if u < v and not g.has_edge(phi[u], w):
                    ok = False
                    break
            if ok:
                phi[v] = w
                rec(v + 1)
                phi[v] = -1

    rec(0)
    return out


# -- fixed center structure of cactus graphs ------------------------------------


@dataclass(frozen=True)
class CenterStructure:
    """A vertex, edge, or cycle fixed setwise by every automorphism."""

    kind: str  # "vertex" | "edge" | "cycle"
    vertices: frozenset[int]
    cycle: tuple[int, ...] | None = None


def _tree_centers(nodes: list, adj: dict) -> list:
    """Center(s) of a tree by leaf peeling. One or two nodes."""
    if len(nodes) == 1:
        return list(nodes)
    deg = {v: len(adj[v]) for v in nodes}
    layer = sorted(v for v in nodes if deg[v] <= 1)
    remaining = len(nodes)
    alive = {v: True for v in nodes}
    while remaining > 2:
        nxt = []
        for v in layer:
            alive[v] = False
            remaining -= 1
            for w in adj[v]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = sorted(nxt)
    return sorted(v for v in nodes if alive[v])


def center_structure(g: Graph) -> CenterStructure:
    """The automorphism-fixed center of a connected cactus graph.

    Contract all cycle edges to get a tree, take the tree center; when the
    center class is a union of cycles, recurse into the cycle-intersection
    tree. The result is a vertex, an edge, or a cycle of g whose vertex set is
    fixed setwise by every automorphism.
    """
    if g.n == 0:
        raise PreconditionError("empty graph has no center structure")
    if not is_connected(g):
        raise PreconditionError("center structure needs a connected graph")
    if not is_cactus(g):
        raise PreconditionError("center structure needs a cactus graph")
    cycles = cactus_cycles(g)
    cycle_edges = set()
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            cycle_edges.add((min(a, b), max(a, b)))

    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in cycle_edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    classes: dict[int, set[int]] = {}
    for v in range(g.n):
        classes.setdefault(find(v), set()).add(v)
    nodes = sorted(classes)
    adj: dict[int, set[int]] = {c: set() for c in nodes}
    bridge_between: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for u, v in g.edges:
        if (u, v) in cycle_edges:
            continue
        cu, cv = find(u), find(v)
        adj[cu].add(cv)
        adj[cv].add(cu)
        key = (min(cu, cv), max(cu, cv))
        bridge_between.setdefault(key, []).append((u, v))

    centers = _tree_centers(nodes, {c: sorted(adj[c]) for c in nodes})
    if len(centers) == 2:
        c1, c2 = centers
        key = (min(c1, c2), max(c1, c2))
        bridges = bridge_between[key]
        if len(bridges) != 1:
            raise InternalContradictionError("two bridges between adjacent contraction classes")
        u, v = bridges[0]
        return CenterStructure(kind="edge", vertices=frozenset((u, v)))

    (c,) = centers
    cls = classes[c]
    if len(cls) == 1:
        return CenterStructure(kind="vertex", vertices=frozenset(cls))
    inner = [cyc for cyc in cycles if set(cyc) <= cls]
    if not inner or set().union(*(set(c) for c in inner)) != cls:
        raise InternalContradictionError("contraction class is not a union of cycles")
    # block-cut tree of the class: cycle nodes plus shared-vertex nodes. The
    # raw cycle-intersection graph can contain cliques (several cycles through
    # one vertex), so it is not usable for center peeling.
    shared_vertices = sorted(
        {
            v
            for i in range(len(inner))
            for j in range(i + 1, len(inner))
            for v in set(inner[i]) & set(inner[j])
        }
    )
    nodes2: list = [("cyc", i) for i in range(len(inner))] + [
        ("cut", v) for v in shared_vertices
    ]
    adj2: dict = {node: set() for node in nodes2}
    for i, cyc in enumerate(inner):
        for v in shared_vertices:
            if v in cyc:
                adj2[("cyc", i)].add(("cut", v))
                adj2[("cut", v)].add(("cyc", i))
    ccenters = _tree_centers(nodes2, {n: sorted(adj2[n]) for n in nodes2})
    cycle_centers = [n for n in ccenters if n[0] == "cyc"]
    cut_centers = [n for n in ccenters if n[0] == "cut"]
    if len(ccenters) == 1 and cycle_centers:
        cyc = inner[cycle_centers[0][1]]
        return CenterStructure(kind="cycle", vertices=frozenset(cyc), cycle=cyc)
    # either the center is a shared vertex, or it is an edge of the block-cut
    # tree; both endpoints of such an edge are fixed setwise, so the shared
    # vertex on it is fixed
    (w,) = [n[1] for n in cut_centers[:1]]
    return CenterStructure(kind="vertex", vertices=frozenset({w}))


def fixed_cycle(g: Graph) -> tuple[int, ...] | None:
    """The cycle every nontrivial automorphism rotates, for involution-free cacti.

    Returns None when the graph is asymmetric.
    """
    if not is_connected(g) or not is_cactus(g):
        raise PreconditionError("fixed_cycle needs a connected cactus graph")
    if find_involution(g) is not None:
        raise PreconditionError("graph has an involution")
    if not has_nontrivial_automorphism(g):
        return None
    cs = center_structure(g)
    if cs.kind != "cycle":
        raise InternalContradictionError(
            "involution-free cactus with nontrivial automorphisms must center on a cycle"
        )
    return cs.cycle
