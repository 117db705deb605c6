"""Hardness-gadget constructors.

Each constructor assembles a gadget from decomposition structures (shortcuts,
2,3-paths, partial gadgets, cycle attachments) and then re-verifies every
walk-parity condition and every promised distance requirement. Constructions
never trust their own derivation; a verification failure raises
InternalContradictionError because it can only mean a bug.
"""

from __future__ import annotations

from itertools import combinations, product

from .automorphisms import find_involution
from .errors import BudgetError, InternalContradictionError, PreconditionError
from .gadgets import (
    HardnessGadget,
    PartialHardnessGadget,
    check_distance_requirements,
    verify_hardness_gadget,
    verify_partial_gadget,
)
from .graphs import (
    Graph,
    Path,
    Subgraph,
    bfs_distances,
    cactus_cycles,
    components,
    cut_vertices,
    induced_subgraph,
    is_cactus,
    is_connected,
    split_at,
    unique_shortest_path,
)
from .mosaics import (
    MosaicCertificate,
    TwoThreePath,
    classify_mosaic,
    find_23path,
    find_shortcut,
    verify_23path,
)
from .walks import walk_parity

BRUTE_GADGET_LIMIT = 200_000


# -- small helpers -------------------------------------------------------------


def _require_verified(g: Graph, gadget: HardnessGadget, context: str) -> HardnessGadget:
    bad = verify_hardness_gadget(g, gadget)
    if bad:
        raise InternalContradictionError(f"{context}: {bad}")
    return gadget


def _require_distance(g: Graph, gadget: HardnessGadget, vs, context: str) -> None:
    for v in sorted(vs):
        bad = check_distance_requirements(g, gadget, v)
        if bad:
            raise InternalContradictionError(f"{context}: {bad}")


def _require_partial(g: Graph, x: int, pg: PartialHardnessGadget, context: str):
    bad = verify_partial_gadget(g, x, pg)
    if bad:
        raise InternalContradictionError(f"{context}: {bad}")
    return pg


def translate_path(path: Path, to_parent) -> Path:
    return Path(tuple(to_parent[v] for v in path.vertices))


def translate_gadget(gd: HardnessGadget, to_parent) -> HardnessGadget:
    return HardnessGadget(
        beta=gd.beta,
        s=to_parent[gd.s],
        t=to_parent[gd.t],
        i=to_parent[gd.i],
        O=frozenset(to_parent[v] for v in gd.O),
        K=frozenset(to_parent[v] for v in gd.K),
        k={to_parent[u]: kv for u, kv in gd.k.items()},
        w={to_parent[u]: to_parent[wv] for u, wv in gd.w.items()},
    )


def translate_partial(pg: PartialHardnessGadget, to_parent) -> PartialHardnessGadget:
    return PartialHardnessGadget(
        s=to_parent[pg.s],
        i=to_parent[pg.i],
        O=frozenset(to_parent[v] for v in pg.O),
        path=translate_path(pg.path, to_parent),
    )


def translate_23path(tp: TwoThreePath, to_parent) -> TwoThreePath:
    return TwoThreePath(
        path=translate_path(tp.path, to_parent),
        v2=to_parent[tp.v2],
        v3=to_parent[tp.v3],
    )


def translate_mosaic(cert: MosaicCertificate, to_parent) -> MosaicCertificate:
    return MosaicCertificate(
        verdict=cert.verdict,
        core=frozenset(to_parent[v] for v in cert.core),
        bristles=tuple((to_parent[a], to_parent[b]) for a, b in cert.bristles),
    )


def _rotate(cycle: tuple[int, ...], v: int) -> tuple[int, ...]:
    idx = cycle.index(v)
    return cycle[idx:] + cycle[:idx]


def _cycle_edge_map(g: Graph) -> dict[tuple[int, int], tuple[int, ...]]:
    out = {}
    for cyc in cactus_cycles(g):
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out[(min(a, b), max(a, b))] = cyc
    return out


def _cycle_components(g: Graph, ring) -> list[frozenset[int]]:
    """Component vertex set of each ring position after deleting the ring edges."""
    ring_edges = {
        (min(a, b), max(a, b)) for a, b in zip(ring, ring[1:] + ring[:1])
    }
    rest = Graph(g.n, [e for e in g.edges if e not in ring_edges])
    comp_of = {}
    for comp in components(rest):
        for v in comp:
            comp_of[v] = comp
    return [comp_of[v] for v in ring]


# -- shortcut construction ------------------------------------------------------


def _check_l8_hypotheses(g: Graph, path: Path) -> None:
    cmap = _cycle_edge_map(g)
    seen: dict[tuple[int, ...], int] = {}
    for a, b in zip(path.vertices, path.vertices[1:]):
        cyc = cmap.get((min(a, b), max(a, b)))
        if cyc is None or len(cyc) != 4:
            raise PreconditionError(f"path edge ({a},{b}) is not on a 4-cycle")
        seen[cyc] = seen.get(cyc, 0) + 1
        if seen[cyc] > 1:
            raise PreconditionError("a 4-cycle carries two path edges")


def gadget_from_shortcut(g: Graph, v1: int, v2: int, path: Path | None = None) -> HardnessGadget:
    """Hardness gadget from two odd-degree vertices joined by a unique shortest
    path whose edges lie on pairwise distinct 4-cycles.

    The path is shrunk to its shortest qualifying segment (between consecutive
    odd-degree vertices along it) before building; that keeps the distance
    promise, for every v outside the given path plus v2, intact.
    """
    if not is_cactus(g):
        raise PreconditionError("shortcut gadgets live in cactus-condition graphs")
    if v1 == v2:
        raise PreconditionError("endpoints must be distinct")
    if g.degree(v1) % 2 == 0 or g.degree(v2) % 2 == 0:
        raise PreconditionError("endpoints must have odd degree")
    usp = unique_shortest_path(g, v1, v2)
    if not isinstance(usp, Path):
        raise PreconditionError("no unique shortest path between the endpoints")
    if path is not None and path != usp:
        raise PreconditionError("given path is not the unique shortest path")
    path = usp
    _check_l8_hypotheses(g, path)

    vs = path.vertices
    odd_positions = [idx for idx, v in enumerate(vs) if g.degree(v) % 2 == 1]
    segments = list(zip(odd_positions, odd_positions[1:]))
    start, end = min(segments, key=lambda ab: (ab[1] - ab[0], ab[0]))
    seg = Path(vs[start : end + 1])

    s = seg.end
    anchor = seg.start
    i = seg.vertices[-2]
    cyc = _cycle_edge_map(g)[(min(i, s), max(i, s))]
    pos = cyc.index(s)
    partner = {cyc[pos - 1], cyc[(pos + 1) % 4]} - {i}
    (t,) = partner
    gadget = HardnessGadget(
        beta=1,
        s=s,
        t=t,
        i=i,
        O=frozenset(g.neighbors[s] - {i, t}),
        K=frozenset({t}),
        k={t: seg.length + 1},
        w={t: anchor},
    )
    _require_verified(g, gadget, "shortcut gadget")
    promised = (set(range(g.n)) - set(path.vertices)) | {v2}
    _require_distance(g, gadget, promised, "shortcut gadget distances")
    return gadget


def _shortcut_gadget_internal(g, v1, v2, path, context) -> HardnessGadget:
    """Shortcut construction whose hypotheses were derived, not supplied."""
    try:
        return gadget_from_shortcut(g, v1, v2, path)
    except PreconditionError as exc:
        raise InternalContradictionError(f"{context}: {exc}") from exc


# -- combination constructors -----------------------------------------------------


def _rooted_component(g: Graph, comp, x: int) -> tuple[Subgraph, int]:
    sub = induced_subgraph(g, comp)
    return sub, sub.from_parent()[x]


def gadget_mosaic_mosaic(g: Graph, x: int, comp_a, comp_b) -> HardnessGadget:
    """Gadget from two proper-mosaic split components at the cut vertex x.

    Satisfies the distance requirements for every vertex outside both
    components.
    """
    comp_a, comp_b = frozenset(comp_a), frozenset(comp_b)
    sides = []
    for comp in (comp_a, comp_b):
        sub, root = _rooted_component(g, comp, x)
        cert = classify_mosaic(sub.graph, root)
        if not cert.is_proper:
            raise PreconditionError("component is not a proper mosaic")
        if find_involution(sub.graph, fixed=(root,)) is not None:
            raise PreconditionError("rooted component has an involution")
        sides.append((sub, root))
    outside = set(range(g.n)) - comp_a - comp_b

    for sub, root in sides:
        sc = find_shortcut(sub.graph, root)
        if sc is not None:
            gadget = _shortcut_gadget_internal(
                g,
                sub.to_parent[sc.v1],
                sub.to_parent[sc.v2],
                translate_path(sc.path, sub.to_parent),
                "mosaic pair: shortcut component",
            )
            _require_distance(g, gadget, outside, "mosaic pair distances")
            return gadget

    twothrees = [
        translate_23path(find_23path(sub.graph, root), sub.to_parent)
        for sub, root in sides
    ]
    t1, t2 = twothrees
    left = Path((t1.v3,) + tuple(reversed(t1.path.vertices)))
    right = Path(t2.path.vertices + (t2.v3,))
    joined = left.join(right)
    gadget = _shortcut_gadget_internal(
        g, t1.v3, t2.v3, joined, "mosaic pair: joined 2,3-paths"
    )
    _require_distance(g, gadget, outside, "mosaic pair distances")
    return gadget


def gadget_mosaic_oddroot(g: Graph, x: int, comp) -> HardnessGadget:
    """Gadget from one involution-free proper-mosaic component at an odd-degree
    cut vertex; distance requirements hold outside the component."""
    comp = frozenset(comp)
    if g.degree(x) % 2 == 0:
        raise PreconditionError("cut vertex degree must be odd")
    sub, root = _rooted_component(g, comp, x)
    cert = classify_mosaic(sub.graph, root)
    if not cert.is_proper:
        raise PreconditionError("component is not a proper mosaic")
    if find_involution(sub.graph, fixed=(root,)) is not None:
        raise PreconditionError("rooted component has an involution")
    outside = set(range(g.n)) - comp

    sc = find_shortcut(sub.graph, root)
    if sc is not None:
        gadget = _shortcut_gadget_internal(
            g,
            sub.to_parent[sc.v1],
            sub.to_parent[sc.v2],
            translate_path(sc.path, sub.to_parent),
            "odd-root mosaic: shortcut component",
        )
        _require_distance(g, gadget, outside | {x}, "odd-root mosaic distances")
        return gadget

    tp = translate_23path(find_23path(sub.graph, root), sub.to_parent)
    down = Path((tp.v3,) + tuple(reversed(tp.path.vertices)))
    gadget = _shortcut_gadget_internal(
        g, tp.v3, x, down, "odd-root mosaic: 2,3-path to root"
    )
    _require_distance(g, gadget, outside, "odd-root mosaic distances")
    return gadget


def gadget_phg_23path(
    g: Graph, x: int, tp: TwoThreePath, pg: PartialHardnessGadget
) -> HardnessGadget:
    """Gadget from a 2,3-path in one component and a partial gadget in another,
    both rooted at the cut vertex x. K stays empty; t is whichever of v2, v3
    receives an even number of the relevant walks from i."""
    bad = verify_23path(g, x, tp)
    if bad:
        raise PreconditionError(f"2,3-path invalid: {bad}")
    bad = verify_partial_gadget(g, x, pg)
    if bad:
        raise PreconditionError(f"partial gadget invalid: {bad}")

    spine = Path(tuple(reversed(pg.path.vertices))).join(tp.path)
    p2 = spine.extend(tp.v2)
    beta = p2.length + 1
    chosen = [c for c in (tp.v2, tp.v3) if walk_parity(g, pg.i, c, 1 + beta) == 0]
    if len(chosen) != 1:
        raise InternalContradictionError(
            "walk parities from i to v2 and v3 must differ"
        )
    gadget = HardnessGadget(beta=beta, s=pg.s, t=chosen[0], i=pg.i, O=pg.O)
    _require_verified(g, gadget, "partial + 2,3-path gadget")
    promised = (
        set(range(g.n))
        - set(tp.path.vertices)
        - set(pg.path.vertices)
        - {tp.v2, tp.v3}
    )
    _require_distance(g, gadget, promised, "partial + 2,3-path distances")
    return gadget


def gadget_phg_phg(
    g: Graph, x: int, pg1: PartialHardnessGadget, pg2: PartialHardnessGadget
) -> HardnessGadget:
    """Gadget from two partial gadgets rooted at the cut vertex x."""
    for pg in (pg1, pg2):
        bad = verify_partial_gadget(g, x, pg)
        if bad:
            raise PreconditionError(f"partial gadget invalid: {bad}")
    spine = Path(tuple(reversed(pg1.path.vertices))).join(pg2.path)
    ell = spine.length
    if walk_parity(g, pg1.i, pg2.i, ell + 2) == 0:
        t, beta = pg2.i, ell + 1
    else:
        t, beta = pg2.s, ell + 2
    if walk_parity(g, pg1.i, t, 1 + beta) != 0:
        raise InternalContradictionError("both t-candidates have odd walk parity")
    gadget = HardnessGadget(beta=beta, s=pg1.s, t=t, i=pg1.i, O=pg1.O)
    _require_verified(g, gadget, "two-partial gadget")
    promised = set(range(g.n)) - set(spine.vertices) - {pg2.s}
    _require_distance(g, gadget, promised, "two-partial distances")
    return gadget


# -- cycle construction -------------------------------------------------------------


def _cycle_candidates(g: Graph, ring: tuple[int, ...]):
    """Candidate gadgets for a cycle whose non-root attachments are mosaics.

    Yields (gadget, label) in the deterministic order the case analysis tries
    them: both ring orientations, antipode-avoiding choices first.
    """
    ell = len(ring)
    orientations = [tuple(ring), (ring[0],) + tuple(reversed(ring[1:]))]
    if ell % 2 == 1:
        mid0 = (ell + 1) // 2 - 1  # 0-based index of the halfway vertex
        for oi, xs in enumerate(orientations):
            if g.degree(xs[mid0]) % 2 == 0:
                s = xs[mid0 + 1]
                t = i = xs[mid0]
                o = xs[(mid0 + 2) % ell]
                K = frozenset(g.neighbors[s] - {o, i})
                yield (
                    HardnessGadget(
                        beta=1,
                        s=s,
                        t=t,
                        i=i,
                        O=frozenset({o}),
                        K=K,
                        k={u: ell - 1 for u in K},
                        w={u: s for u in K},
                    ),
                    f"odd cycle, halfway attachment, orientation {oi}",
                )
        for oi, xs in enumerate(orientations):
            evens = [p for p in range(1, mid0) if g.degree(xs[p]) % 2 == 0]
            if not evens:
                continue
            s = xs[mid0]
            i = xs[mid0 - 1]
            o = xs[mid0 + 1]
            tpos = max(evens, key=lambda p: p)
            K = frozenset(g.neighbors[s] - {i, o})
            yield (
                HardnessGadget(
                    beta=mid0 - tpos,
                    s=s,
                    t=xs[tpos],
                    i=i,
                    O=frozenset({o}),
                    K=K,
                    k={u: ell - 1 for u in K},
                    w={u: s for u in K},
                ),
                f"odd cycle, near attachment, orientation {oi}",
            )
    else:
        half = ell // 2
        cands = []
        for oi, xs in enumerate(orientations):
            for j0 in range(1, ell - 2):
                if j0 == half or g.degree(xs[j0]) % 2 == 1:
                    continue
                cands.append((j0 + 1 == half, oi, j0, xs))
        for _, oi, j0, xs in sorted(cands, key=lambda c: (c[0], c[1], c[2])):
            s = xs[j0 + 1]
            if g.degree(s) % 2 == 0:
                yield (
                    HardnessGadget(
                        beta=1,
                        s=s,
                        t=xs[j0],
                        i=xs[j0],
                        O=frozenset(g.neighbors[s] - {xs[j0]}),
                    ),
                    f"even cycle, even attachment at {j0} or. {oi}",
                )
            else:
                u = xs[j0]
                i = xs[j0 + 2]
                yield (
                    HardnessGadget(
                        beta=half - 1,
                        s=s,
                        t=xs[(j0 + 2 + half) % ell],
                        i=i,
                        O=frozenset(g.neighbors[s] - {u, i}),
                        K=frozenset({u}),
                        k={u: 2},
                        w={u: u},
                    ),
                    f"even cycle, odd attachment at {j0} or. {oi}",
                )


def gadget_cycles(g: Graph, x: int, cycle: tuple[int, ...]) -> HardnessGadget:
    """Gadget from a cycle (length != 4) whose attachments away from the root
    component are all mosaics; distance requirements hold on the root component."""
    ell = len(cycle)
    if ell == 4:
        raise PreconditionError("length-4 cycles are excluded here")
    comps = _cycle_components(g, cycle)
    root_pos = next(
        (idx for idx, comp in enumerate(comps) if x in comp), None
    )
    if root_pos is None:
        raise PreconditionError("root is not attached to the cycle")
    ring = _rotate(tuple(cycle), cycle[root_pos])
    comps = _cycle_components(g, ring)

    rest = (frozenset(range(g.n)) - comps[0]) | {ring[0]}
    sub_rest, rest_root = _rooted_component(g, rest, ring[0])
    if find_involution(sub_rest.graph, fixed=(rest_root,)) is not None:
        raise PreconditionError("remainder after the root component has an involution")

    J = [idx for idx in range(1, ell) if ell % 2 == 1 or idx != ell // 2]
    certs = {}
    for idx in J:
        sub, root = _rooted_component(g, comps[idx], ring[idx])
        cert = classify_mosaic(sub.graph, root)
        if not cert.is_mosaic:
            raise PreconditionError(
                f"attachment at cycle position {idx} is not a mosaic"
            )
        certs[idx] = (sub, root, cert)

    for idx in J:
        sub, root, cert = certs[idx]
        sc = find_shortcut(sub.graph, root)
        if sc is not None:
            gadget = _shortcut_gadget_internal(
                g,
                sub.to_parent[sc.v1],
                sub.to_parent[sc.v2],
                translate_path(sc.path, sub.to_parent),
                "cycle case: shortcut attachment",
            )
            _require_distance(g, gadget, comps[0], "cycle shortcut distances")
            return gadget

    for idx in J:
        sub, root, cert = certs[idx]
        if cert.is_proper and g.degree(ring[idx]) % 2 == 1:
            return gadget_mosaic_oddroot(g, ring[idx], comps[idx])

    for gadget, label in _cycle_candidates(g, ring):
        if verify_hardness_gadget(g, gadget):
            continue
        if any(check_distance_requirements(g, gadget, v) for v in comps[0]):
            continue
        return gadget
    raise InternalContradictionError("no cycle-case construction verified")


# -- trees ------------------------------------------------------------------------


def partial_gadget_tree(g: Graph, x: int) -> PartialHardnessGadget:
    """Partial gadget of an involution-free rooted tree with >= 3 vertices:
    a deepest leaf, its degree-2 neighbor, and the root path."""
    if not is_connected(g) or g.m != g.n - 1:
        raise PreconditionError("not a tree")
    if g.n < 3:
        raise PreconditionError("tree needs at least three vertices")
    if find_involution(g, fixed=(x,)) is not None:
        raise PreconditionError("rooted tree has an involution")
    dist = bfs_distances(g, x)
    leaves = [v for v in range(g.n) if g.degree(v) == 1 and v != x]
    o = max(leaves, key=lambda v: (dist[v], -v))
    (s,) = g.neighbors[o]
    if s == x or g.degree(s) != 2:
        raise InternalContradictionError(
            "deepest leaf of an involution-free rooted tree must hang off a degree-2 vertex"
        )
    (i,) = (u for u in g.neighbors[s] if dist[u] == dist[s] - 1)
    root_path = unique_shortest_path(g, x, i)
    if not isinstance(root_path, Path):
        raise InternalContradictionError("tree path is not unique")
    pg = PartialHardnessGadget(s=s, i=i, O=frozenset({o}), path=root_path)
    return _require_partial(g, x, pg, "tree partial gadget")


# -- the recursive structure finder -------------------------------------------------


def _is_cycle_separating(g: Graph, x: int) -> bool:
    if x not in cut_vertices(g):
        return False
    with_cycles = 0
    for comp in split_at(g, x).components:
        if comp.graph.m >= comp.graph.n:
            with_cycles += 1
    return with_cycles >= 2


def find_structure_rooted(g: Graph, x: int):
    """One of the three guaranteed structures of an involution-free rooted
    cactus graph: a hardness gadget meeting the distance requirements for the
    root, a partial hardness gadget, or a shortcut-free mosaic certificate.

    The returned object is verified before it is returned.
    """
    if not (0 <= x < g.n):
        raise PreconditionError("root out of range")
    if not is_connected(g):
        raise PreconditionError("rooted structure search needs a connected graph")
    if not is_cactus(g):
        raise PreconditionError("not a cactus-condition graph")
    if find_involution(g, fixed=(x,)) is not None:
        raise PreconditionError("rooted graph has an involution")

    cycles = cactus_cycles(g)
    if not cycles:
        if g.n <= 2:
            return classify_mosaic(g, x)
        return partial_gadget_tree(g, x)

    if _is_cycle_separating(g, x):
        partial = None
        for comp in split_at(g, x).components:
            root = comp.from_parent()[x]
            res = find_structure_rooted(comp.graph, root)
            if isinstance(res, HardnessGadget):
                gadget = translate_gadget(res, comp.to_parent)
                _require_verified(g, gadget, "split-component gadget in parent")
                _require_distance(g, gadget, [x], "split-component gadget, root")
                return gadget
            if isinstance(res, PartialHardnessGadget) and partial is None:
                partial = translate_partial(res, comp.to_parent)
        if partial is not None:
            return _require_partial(g, x, partial, "split-component partial in parent")
        cert = classify_mosaic(g, x)
        if not cert.is_mosaic:
            raise InternalContradictionError("union of mosaics at the root is not a mosaic")
        if find_shortcut(g, x) is not None:
            raise InternalContradictionError("union of shortcut-free mosaics has a shortcut")
        return cert

    # the root meets at most one cycle; pick the cycle it reaches first
    on_cycle = {v for cyc in cycles for v in cyc}
    if x in on_cycle:
        through = [cyc for cyc in cycles if x in cyc]
        if len(through) != 1:
            raise InternalContradictionError("root on two cycles must be cycle-separating")
        attach = Path((x,))
        base_cycle = through[0]
    else:
        dist = bfs_distances(g, x)
        x1 = min(on_cycle, key=lambda v: (dist[v], v))
        got = unique_shortest_path(g, x, x1)
        if not isinstance(got, Path):
            raise InternalContradictionError("attachment path to the nearest cycle is not unique")
        attach = got
        base_cycle = min(cyc for cyc in cycles if x1 in cyc)
    ring = _rotate(base_cycle, attach.end)
    ell = len(ring)
    comps = _cycle_components(g, ring)
    if x not in comps[0]:
        raise InternalContradictionError("root fell outside its cycle component")

    J = [idx for idx in range(1, ell) if ell % 2 == 1 or idx != ell // 2]
    results: dict[int, object] = {}
    for idx in range(1, ell):
        sub, root = _rooted_component(g, comps[idx], ring[idx])
        res = find_structure_rooted(sub.graph, root)
        if isinstance(res, HardnessGadget):
            gadget = translate_gadget(res, sub.to_parent)
            _require_verified(g, gadget, "cycle-attachment gadget in parent")
            _require_distance(g, gadget, [x], "cycle-attachment gadget, root")
            return gadget
        if isinstance(res, PartialHardnessGadget):
            results[idx] = translate_partial(res, sub.to_parent)
        else:
            results[idx] = translate_mosaic(res, sub.to_parent)

    for idx in J:
        res = results[idx]
        if isinstance(res, PartialHardnessGadget):
            to_pos = unique_shortest_path(g, x, ring[idx])
            if not isinstance(to_pos, Path):
                raise InternalContradictionError(
                    "no unique shortest path to a usable cycle position"
                )
            lifted = PartialHardnessGadget(
                s=res.s, i=res.i, O=res.O, path=to_pos.join(res.path)
            )
            return _require_partial(g, x, lifted, "lifted cycle-attachment partial")

    if ell != 4:
        return gadget_cycles(g, x, ring)

    # remaining: a 4-cycle with mosaics on both flanks
    x2, x3, x4 = ring[1], ring[2], ring[3]
    res3 = results[2]
    if isinstance(res3, PartialHardnessGadget):
        for side_idx in (1, 3):
            cert = results[side_idx]
            if not cert.is_proper:
                continue
            side_root = ring[side_idx]
            sub, root = _rooted_component(g, comps[side_idx], side_root)
            tp = translate_23path(find_23path(sub.graph, root), sub.to_parent)
            lifted = PartialHardnessGadget(
                s=res3.s,
                i=res3.i,
                O=res3.O,
                path=Path((side_root, x3)).join(res3.path),
            )
            _require_partial(g, side_root, lifted, "partial lifted across the 4-cycle")
            gadget = gadget_phg_23path(g, side_root, tp, lifted)
            _require_distance(g, gadget, [x], "4-cycle case 1 root distance")
            return gadget
        sizes = {1: len(comps[1]), 3: len(comps[3])}
        if sorted(sizes.values()) != [1, 2]:
            raise InternalContradictionError(
                "flanks of the 4-cycle must be one bare vertex and one bristle"
            )
        bare = 1 if sizes[1] == 1 else 3
        pendant = 4 - bare
        tp = TwoThreePath(Path((x3,)), ring[bare], ring[pendant])
        bad = verify_23path(g, x3, tp)
        if bad:
            raise InternalContradictionError(f"flank 2,3-path invalid: {bad}")
        gadget = gadget_phg_23path(g, x3, tp, res3)
        _require_distance(g, gadget, [x], "4-cycle case 1 root distance")
        return gadget

    # the far attachment is a mosaic: the whole far side is a proper mosaic
    far = (frozenset(range(g.n)) - comps[0]) | {ring[0]}
    if x != ring[0]:
        if g.degree(ring[0]) % 2 == 1:
            try:
                return gadget_mosaic_oddroot(g, ring[0], far)
            except PreconditionError as exc:
                raise InternalContradictionError(f"far side not usable: {exc}") from exc
        i_v = attach.vertices[-2]
        pg = PartialHardnessGadget(
            s=ring[0],
            i=i_v,
            O=frozenset(g.neighbors[ring[0]] - {i_v}),
            path=Path(attach.vertices[:-1]),
        )
        return _require_partial(g, x, pg, "even-degree cycle anchor partial")

    # x sits on the 4-cycle itself; everything else hanging off x is a tree
    branches = []
    if x in cut_vertices(g):
        for comp in split_at(g, x).components:
            verts = frozenset(comp.to_parent)
            if verts != far:
                branches.append(comp)
    for comp in branches:
        if comp.graph.m >= comp.graph.n:
            raise InternalContradictionError("non-tree branch at a non-cycle-separating root")
        if comp.graph.n >= 3:
            root = comp.from_parent()[x]
            pg = translate_partial(partial_gadget_tree(comp.graph, root), comp.to_parent)
            return _require_partial(g, x, pg, "tree branch partial at the root")
    cert = classify_mosaic(g, x)
    if not cert.is_mosaic:
        raise InternalContradictionError("root 4-cycle graph should be a mosaic")
    sc = find_shortcut(g, x)
    if sc is None:
        return cert
    gadget = _shortcut_gadget_internal(g, sc.v1, sc.v2, sc.path, "root mosaic shortcut")
    _require_distance(g, gadget, [x], "root mosaic shortcut, root")
    return gadget


# -- whole-graph finder ----------------------------------------------------------------


def find_hardness_gadget(g: Graph) -> HardnessGadget:
    """A verified hardness gadget of an involution-free cactus graph with at
    least two vertices.

    Splits at the cut vertex maximizing the second-largest component, combines
    the component structures, and falls back to the single-cycle construction.
    """
    if g.n < 2:
        raise PreconditionError("graph needs more than one vertex")
    if not is_connected(g):
        raise PreconditionError("cactus graphs are connected")
    if not is_cactus(g):
        raise PreconditionError("not a cactus-condition graph")
    if find_involution(g) is not None:
        raise PreconditionError("graph has an involution")

    cuts = sorted(cut_vertices(g))
    if not cuts:
        raise InternalContradictionError("involution-free cactus graph without a cut vertex")
    best_x, best_second = None, -1
    splits = {}
    for v in cuts:
        sp = split_at(g, v)
        splits[v] = sp
        sizes = sorted((len(c.to_parent) for c in sp.components), reverse=True)
        if sizes[1] > best_second:
            best_x, best_second = v, sizes[1]
    x = best_x
    comps = sorted(
        splits[x].components, key=lambda c: (-len(c.to_parent), c.to_parent)
    )

    outcomes = []
    for comp in comps:
        root = comp.from_parent()[x]
        res = find_structure_rooted(comp.graph, root)
        if isinstance(res, HardnessGadget):
            gadget = translate_gadget(res, comp.to_parent)
            return _require_verified(g, gadget, "component gadget in the full graph")
        outcomes.append((comp, res))

    if best_second > 2:
        (comp_a, res_a), (comp_b, res_b) = outcomes[0], outcomes[1]
        a_partial = isinstance(res_a, PartialHardnessGadget)
        b_partial = isinstance(res_b, PartialHardnessGadget)
        if a_partial and b_partial:
            return gadget_phg_phg(
                g,
                x,
                translate_partial(res_a, comp_a.to_parent),
                translate_partial(res_b, comp_b.to_parent),
            )
        if not a_partial and not b_partial:
            return gadget_mosaic_mosaic(
                g, x, frozenset(comp_a.to_parent), frozenset(comp_b.to_parent)
            )
        mosaic_comp, partial_res, partial_comp = (
            (comp_a, res_b, comp_b) if not a_partial else (comp_b, res_a, comp_a)
        )
        root = mosaic_comp.from_parent()[x]
        tp = translate_23path(
            find_23path(mosaic_comp.graph, root), mosaic_comp.to_parent
        )
        return gadget_phg_23path(
            g, x, tp, translate_partial(partial_res, partial_comp.to_parent)
        )

    cycles = cactus_cycles(g)
    if len(cycles) != 1:
        raise InternalContradictionError(
            "all-small split components force a unique cycle"
        )
    if x not in cycles[0]:
        raise InternalContradictionError("chosen cut vertex must lie on the unique cycle")
    return gadget_cycles(g, x, _rotate(cycles[0], x))


# -- independent brute-force search ---------------------------------------------------


def graph_diameter(g: Graph) -> int:
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        finite = [d for d in dist if d != float("inf")]
        best = max(best, int(max(finite)))
    return best


def brute_force_gadget_search(
    g: Graph,
    beta_max: int | None = None,
    k_max: int | None = None,
    limit: int = BRUTE_GADGET_LIMIT,
) -> list[HardnessGadget]:
    """All hardness gadgets with beta <= beta_max and k(u) <= k_max, found by
    enumerating every tuple shape and checking the definition directly.

    Defaults: beta_max = diameter+2, k_max = 2*diameter+2. These are search
    bounds, not a guarantee; the constructive finder stays within them on the
    graphs this package targets.
    """
    if g.n == 0:
        return []
    diam = graph_diameter(g)
    beta_max = diam + 2 if beta_max is None else beta_max
    k_max = 2 * diam + 2 if k_max is None else k_max
    out: list[HardnessGadget] = []

    for s in range(g.n):
        nbrs = g.sorted_neighbors(s)
        for i in nbrs:
            rest = [v for v in nbrs if v != i]
            for r in range(len(rest) + 1):
                for K_tuple in combinations(rest, r):
                    K = frozenset(K_tuple)
                    O = frozenset(rest) - K
                    if len(O) % 2 == 0:
                        continue
                    oy = sorted(O | {i})
                    for beta in range(1, beta_max + 1):
                        for t in range(g.n):
                            if walk_parity(g, s, t, beta) != 1:
                                continue
                            if walk_parity(g, i, t, 1 + beta) != 0:
                                continue
                            ok = True
                            for o in sorted(O):
                                ro = g.rows[o]
                                for y in oy:
                                    ry = g.rows[y]
                                    for z in range(g.n):
                                        if z == s:
                                            continue
                                        if (
                                            (ro >> z) & 1
                                            and (ry >> z) & 1
                                            and walk_parity(g, z, t, beta)
                                        ):
                                            ok = False
                                            break
                                    if not ok:
                                        break
                                if not ok:
                                    break
                            if not ok:
                                continue
                            options = []
                            for u in sorted(K):
                                w_u = [
                                    (wv, kv)
                                    for kv in range(1, k_max + 1)
                                    for wv in range(g.n)
                                    if walk_parity(g, wv, u, kv) == 0
                                    and all(walk_parity(g, wv, y, kv) == 1 for y in oy)
                                ]
                                if not w_u:
                                    options = None
                                    break
                                options.append(w_u)
                            if options is None:
                                continue
                            for combo in product(*options):
                                gadget = HardnessGadget(
                                    beta=beta,
                                    s=s,
                                    t=t,
                                    i=i,
                                    O=O,
                                    K=K,
                                    k={u: kv for u, (_, kv) in zip(sorted(K), combo)},
                                    w={u: wv for u, (wv, _) in zip(sorted(K), combo)},
                                )
                                out.append(gadget)
                                if len(out) > limit:
                                    raise BudgetError(
                                        f"more than {limit} gadgets in the search space"
                                    )
    return out
