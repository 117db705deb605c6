"""Rooted 4-cycle mosaics and their combinatorics: bristle peeling, 2,3-paths,
shortcuts, and the three-way partition of (length+2)-walks along a unique
shortest path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetError, InternalContradictionError, PreconditionError
from .graphs import (
    Graph,
    Path,
    blocks,
    cactus_cycles,
    is_cactus,
    is_connected,
    unique_shortest_path,
)
from .automorphisms import find_involution

T_WALK_LENGTH_CAP = 12


# -- mosaics -----------------------------------------------------------------


@dataclass(frozen=True)
class MosaicCertificate:
    """Verdict plus the witnessing core/bristle partition (when a mosaic)."""

    verdict: str  # "not_mosaic" | "mosaic" | "proper_mosaic"
    core: frozenset[int]
    bristles: tuple[tuple[int, int], ...]  # (degree-1 vertex, core vertex)

    @property
    def is_mosaic(self) -> bool:
        return self.verdict != "not_mosaic"

    @property
    def is_proper(self) -> bool:
        return self.verdict == "proper_mosaic"


def _not_mosaic() -> MosaicCertificate:
    return MosaicCertificate("not_mosaic", frozenset(), ())


def classify_mosaic(g: Graph, x: int) -> MosaicCertificate:
    """Decide whether (g, x) is a mosaic: a union of 4-cycles containing the
    root (or the root alone), plus a matching of pendant bristles.

    Peels the degree-1 vertices as bristle candidates and checks the rest.
    """
    if not (0 <= x < g.n):
        raise PreconditionError("root out of range")
    if not is_connected(g):
        return _not_mosaic()
    if g.n == 1:
        return MosaicCertificate("mosaic", frozenset({x}), ())
    leaves = frozenset(v for v in range(g.n) if g.degree(v) == 1)
    if x in leaves:
        if g.n == 2:
            other = next(v for v in range(g.n) if v != x)
            return MosaicCertificate("mosaic", frozenset({x}), ((other, x),))
        return _not_mosaic()
    core = frozenset(range(g.n)) - leaves
    # bristles must form a matching: no core vertex carries two of them
    anchors = []
    for v in sorted(leaves):
        (a,) = g.neighbors[v]
        if a in leaves:
            return _not_mosaic()
        anchors.append((v, a))
    if len({a for _, a in anchors}) != len(anchors):
        return _not_mosaic()
    if len(core) == 1:
        # single-vertex core allows at most the n == 2 shape handled above
        return _not_mosaic()
    dec = blocks(g)
    for vs, es in zip(dec.blocks, dec.block_edge_sets):
        inner = vs & core
        if len(inner) <= 1:
            continue
        # block has >= 2 core vertices: leaves never share a block with two
        # core vertices, so this is a block of the core subgraph
        if len(vs) != 4 or len(es) != 4 or not vs <= core:
            return _not_mosaic()
    return MosaicCertificate("proper_mosaic", core, tuple(anchors))


def mosaic_oracle(g: Graph, x: int) -> str:
    """Literal definition check by trying every bristle subset. Test oracle."""
    from itertools import combinations

    if not is_connected(g):
        return "not_mosaic"
    leaves = [v for v in range(g.n) if g.degree(v) == 1 and v != x]
    best = "not_mosaic"
    for r in range(len(leaves) + 1):
        for bristle_set in combinations(leaves, r):
            vpp = set(bristle_set)
            vp = set(range(g.n)) - vpp
            # matching between V'' and a subset of V'
            anchors = []
            ok = True
            for v in vpp:
                nb = [u for u in g.neighbors[v] if u in vp]
                if len(g.neighbors[v]) != 1 or not nb:
                    ok = False
                    break
                anchors.append(nb[0])
            if not ok or len(set(anchors)) != len(anchors):
                continue
            if len(vp) == 1:
                core_ok = x in vp
                proper = False
            else:
                sub_edges = [(u, v) for u, v in g.edges if u in vp and v in vp]
                sub = Graph(g.n, sub_edges)
                keep = sorted(vp)
                from .graphs import induced_subgraph

                si = induced_subgraph(sub, keep)
                core_ok = (
                    x in vp
                    and is_connected(si.graph)
                    and all(si.graph.degree(v) >= 2 for v in range(si.graph.n))
                )
                if core_ok:
                    dec = blocks(si.graph)
                    core_ok = all(
                        len(vs) == 4 and len(es) == 4
                        for vs, es in zip(dec.blocks, dec.block_edge_sets)
                    )
                proper = core_ok and len(vp) > 1
            if core_ok:
                best = "proper_mosaic" if proper else ("mosaic" if best == "not_mosaic" else best)
                if proper:
                    return "proper_mosaic"
    return best


# -- 2,3-paths ----------------------------------------------------------------


@dataclass(frozen=True)
class TwoThreePath:
    """Unique shortest root-paths to two same-cycle vertices of degrees 2 and 3.

    `path` runs from the root to the common predecessor; path+v2 and path+v3
    are the unique shortest root paths.
    """

    path: Path
    v2: int
    v3: int


def verify_23path(g: Graph, x: int, t: TwoThreePath) -> list[str]:
    """All violated clauses of the 2,3-path definition (empty list: valid)."""
    bad = []
    if t.path.start != x:
        bad.append("path does not start at the root")
    if not t.path.valid_in(g):
        bad.append("path is not a path of the graph")
        return bad
    if g.degree(t.v2) != 2:
        bad.append(f"deg({t.v2}) = {g.degree(t.v2)} != 2")
    if g.degree(t.v3) != 3:
        bad.append(f"deg({t.v3}) = {g.degree(t.v3)} != 3")
    if not any(
        t.v2 in cyc and t.v3 in cyc for cyc in cactus_cycles(g)
    ):
        bad.append(f"{t.v2} and {t.v3} share no cycle")
    for v in (t.v2, t.v3):
        if v in t.path.vertices:
            bad.append(f"{v} already lies on the path")
            continue
        want = t.path.extend(v)
        got = unique_shortest_path(g, x, v)
        if not isinstance(got, Path) or got != want:
            bad.append(f"path+{v} is not the unique shortest root path")
    return bad


def find_23path(g: Graph, x: int) -> TwoThreePath:
    """A 2,3-path of an involution-free proper mosaic (g, x).

    Walks a longest path from the root that uses at most one edge from each
    cycle; the far end of that path and its partner across the last 4-cycle
    give the degree-2/degree-3 pair.
    """
    cert = classify_mosaic(g, x)
    if not cert.is_proper:
        raise PreconditionError("find_23path needs a proper mosaic")
    if find_involution(g, fixed=(x,)) is not None:
        raise PreconditionError("find_23path needs an involution-free rooted mosaic")

    cycles = cactus_cycles(g)
    cycle_of_edge: dict[tuple[int, int], int] = {}
    for idx, cyc in enumerate(cycles):
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            cycle_of_edge[(min(a, b), max(a, b))] = idx

    best: list[int] | None = None

    def longer(cand: list[int]) -> bool:
        if best is None or len(cand) > len(best):
            return True
        return len(cand) == len(best) and cand < best

    stack = [(x, frozenset(), (x,))]
    while stack:
        v, used, path = stack.pop()
        if len(path) >= 2 and longer(list(path)):
            best = list(path)
        for w in sorted(g.neighbors[v], reverse=True):
            key = (min(v, w), max(v, w))
            cyc = cycle_of_edge.get(key)
            if cyc is None or cyc in used or w in path:
                continue
            stack.append((w, used | {cyc}, path + (w,)))

    if best is None:
        raise InternalContradictionError("proper mosaic root is not on any cycle")
    last, prev = best[-1], best[-2]
    cyc = cycles[cycle_of_edge[(min(last, prev), max(last, prev))]]
    pos = cyc.index(prev)
    around = {cyc[pos - 1], cyc[(pos + 1) % len(cyc)]}
    around.discard(last)
    (z,) = around
    degs = {g.degree(last), g.degree(z)}
    if degs != {2, 3}:
        raise InternalContradictionError(
            f"last-cycle pair has degrees {sorted(degs)}, expected {{2, 3}}"
        )
    prefix = Path(tuple(best[:-1]))
    if g.degree(last) == 2:
        out = TwoThreePath(prefix, last, z)
    else:
        out = TwoThreePath(prefix, z, last)
    bad = verify_23path(g, x, out)
    if bad:
        raise InternalContradictionError(f"constructed 2,3-path fails: {bad}")
    return out


# -- shortcuts ------------------------------------------------------------------


@dataclass(frozen=True)
class Shortcut:
    v1: int
    v2: int
    path: Path


def find_shortcut(g: Graph, x: int) -> Shortcut | None:
    """A pair of odd-degree (>= 3) vertices with a unique shortest path avoiding
    the root; None if the mosaic has none."""
    if not classify_mosaic(g, x).is_mosaic:
        raise PreconditionError("find_shortcut expects a mosaic")
    odd = [v for v in range(g.n) if g.degree(v) >= 3 and g.degree(v) % 2 == 1]
    for a in odd:
        for b in odd:
            if b <= a:
                continue
            got = unique_shortest_path(g, a, b)
            if isinstance(got, Path) and x not in got.vertices:
                return Shortcut(a, b, got)
    return None


# -- T-walk partition -------------------------------------------------------------


@dataclass(frozen=True)
class TWalkPartition:
    """The walks two longer than a unique shortest path, split by detour type:
    one even-cycle detour (t1), two odd-cycle detours (t2), one repeated edge (t3).
    """

    t1: tuple[tuple[int, ...], ...]
    t2: tuple[tuple[int, ...], ...]
    t3: tuple[tuple[int, ...], ...]

    @property
    def total(self) -> int:
        return len(self.t1) + len(self.t2) + len(self.t3)


def _exact_length_paths(g: Graph, a: int, b: int, length: int, banned: frozenset[int]):
    """Simple a-b paths with exactly `length` edges avoiding `banned` vertices."""
    out = []
    if a in banned or b in banned:
        return out

    def rec(v: int, remaining: int, acc: tuple[int, ...]):
        if remaining == 0:
            if v == b:
                out.append(acc)
            return
        for w in sorted(g.neighbors[v]):
            if w in banned or w in acc:
                continue
            if w == b and remaining != 1:
                continue
            rec(w, remaining - 1, acc + (w,))

    rec(a, length, (a,))
    return out


def t_walk_partition(g: Graph, path: Path) -> TWalkPartition:
    """Enumerate the T1/T2/T3 walk families along a unique shortest path.

    Walks are explicit vertex tuples so membership clauses can be tested
    literally. Path length is capped at T_WALK_LENGTH_CAP.
    """
    if not is_cactus(g):
        raise PreconditionError("t_walk_partition is defined on cactus graphs")
    if path.length > T_WALK_LENGTH_CAP:
        raise BudgetError(f"path length {path.length} exceeds cap {T_WALK_LENGTH_CAP}")
    usp = unique_shortest_path(g, path.start, path.end)
    if not isinstance(usp, Path) or usp != path:
        raise PreconditionError("path is not the unique shortest path between its endpoints")
    xs = path.vertices
    ell = path.length

    t3 = set()
    for a in range(ell + 1):
        for z in g.neighbors[xs[a]]:
            t3.add(xs[: a + 1] + (z,) + xs[a:])

    t1 = set()
    for a in range(ell + 1):
        for b in range(a + 1, ell + 2):
            if b > ell:
                break
            banned = frozenset(xs[a + 1 : b])
            for detour in _exact_length_paths(g, xs[a], xs[b], b - a + 2, banned):
                t1.add(xs[: a + 1] + detour[1:-1] + xs[b:])

    t2 = set()
    detours: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for a in range(ell + 1):
        for b in range(a + 1, ell + 1):
            banned = frozenset(xs[a + 1 : b])
            detours[(a, b)] = _exact_length_paths(g, xs[a], xs[b], b - a + 1, banned)
    for a in range(ell + 1):
        for b in range(a + 1, ell + 1):
            for c in range(b, ell + 1):
                for d in range(c + 1, ell + 1):
                    for p1 in detours[(a, b)]:
                        for p2 in detours[(c, d)]:
                            t2.add(
                                xs[: a + 1]
                                + p1[1:-1]
                                + xs[b : c + 1]
                                + p2[1:-1]
                                + xs[d:]
                            )

    part = TWalkPartition(
        t1=tuple(sorted(t1)), t2=tuple(sorted(t2)), t3=tuple(sorted(t3))
    )
    if (set(part.t1) & set(part.t2)) or (set(part.t1) & set(part.t3)) or (
        set(part.t2) & set(part.t3)
    ):
        raise InternalContradictionError("T-walk families overlap")
    return part
