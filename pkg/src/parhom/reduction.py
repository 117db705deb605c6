"""The reduction construction: splice a source graph onto a hardness gadget,
pin the target copy to its orbits, and machine-check the parity congruence
between the generalized independent-set sum and the pinned homomorphism count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automorphisms import DEFAULT_AUT_CAP, is_automorphism, orbits
from .errors import BudgetError, InternalContradictionError, PreconditionError
from .gadgets import HardnessGadget, verify_hardness_gadget
from .graphs import Graph
from .homcount import count_pinned_homs_mod2, normalize_pin, z_general_is


@dataclass
class ReductionInstance:
    """The spliced graph, its orbit pinning, and where each vertex came from."""

    graph: Graph
    pin: dict[int, frozenset]
    roles: tuple[str, ...]  # per vertex: "H" | "G" | "edge" | "path"
    source: Graph
    target: Graph
    gadget: HardnessGadget


def expected_size(g: Graph, h: Graph, gadget: HardnessGadget) -> int:
    extra = sum(gadget.k[u] - 1 for u in gadget.K)
    return g.n + h.n + g.m + g.m * (gadget.beta - 1) + g.n * extra


def build_g_gamma(g: Graph, h: Graph, gadget: HardnessGadget) -> ReductionInstance:
    """Assemble the reduction graph: a copy of h, the source vertices wired to
    s, one junction vertex per source edge with its path to t, and one path
    per (source vertex, K-member) to the anchor w(u).

    Vertex ids are allocated deterministically: h first, then source vertices,
    then junctions in edge order, then path interiors in clause order.
    """
    bad = verify_hardness_gadget(h, gadget)
    if bad:
        raise PreconditionError(f"gadget does not verify in the target graph: {bad}")

    edges: list[tuple[int, int]] = list(h.edges)
    roles: list[str] = ["H"] * h.n
    g_of = [h.n + x for x in range(g.n)]
    roles.extend("G" for _ in range(g.n))
    nxt = h.n + g.n
    v_of_edge = {}
    for e in g.edges:
        v_of_edge[e] = nxt
        roles.append("edge")
        nxt += 1

    for x in range(g.n):
        edges.append((g_of[x], gadget.s))
    for (x, y) in g.edges:
        ve = v_of_edge[(x, y)]
        edges.append((g_of[x], ve))
        edges.append((g_of[y], ve))

    def add_path(a: int, b: int, length: int):
        nonlocal nxt
        prev = a
        for _ in range(length - 1):
            edges.append((prev, nxt))
            roles.append("path")
            prev = nxt
            nxt += 1
        edges.append((prev, b))

    for e in g.edges:
        add_path(gadget.t, v_of_edge[e], gadget.beta)
    for x in range(g.n):
        for u in sorted(gadget.K):
            add_path(g_of[x], gadget.w[u], gadget.k[u])

    built = Graph(nxt, edges)
    if built.n != expected_size(g, h, gadget):
        raise InternalContradictionError("reduction graph size identity failed")
    orb = orbits(h, cap=max(DEFAULT_AUT_CAP, h.n))
    pin = {}
    for o in orb:
        for v in o:
            pin[v] = o
    return ReductionInstance(
        graph=built,
        pin=pin,
        roles=tuple(roles),
        source=g,
        target=h,
        gadget=gadget,
    )


@dataclass
class ReductionReport:
    ok: bool
    lhs: int  # parity of the weighted independent-set sum
    rhs: int  # parity of the pinned homomorphism count
    instance: ReductionInstance


def verify_reduction(
    g: Graph, h: Graph, gadget: HardnessGadget, method: str = "auto"
) -> ReductionReport:
    """Compute both sides of the reduction congruence independently."""
    instance = build_g_gamma(g, h, gadget)
    lhs = z_general_is(g, 1, len(gadget.O))
    rhs = count_pinned_homs_mod2(instance.graph, h, instance.pin, method=method)
    return ReductionReport(ok=lhs == rhs, lhs=lhs, rhs=rhs, instance=instance)


@dataclass
class AutFactorReport:
    ok: bool
    bucket_sizes: dict[tuple[int, ...], int]
    problems: list[str]


def aut_factor_check(h: Graph, instance: ReductionInstance, limit: int = 2_000_000) -> AutFactorReport:
    """Enumerate the pinned homomorphisms of a tiny instance and bucket them by
    their restriction to the target copy.

    Confirms each restriction is an automorphism of the target and that all
    buckets have the same size.
    """
    gg = instance.graph
    dom = normalize_pin(gg, h, instance.pin)
    order: list[int] = []
    seen = [False] * gg.n
    for start in list(range(h.n)) + list(range(h.n, gg.n)):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for wv in gg.sorted_neighbors(u):
                if not seen[wv]:
                    seen[wv] = True
                    queue.append(wv)
    pos = {v: idx for idx, v in enumerate(order)}
    image = [0] * gg.n
    buckets: dict[tuple[int, ...], int] = {}
    count = 0

    def rec(idx: int):
        nonlocal count
        if idx == gg.n:
            count += 1
            if count > limit:
                raise BudgetError(f"more than {limit} pinned homomorphisms")
            key = tuple(image[v] for v in range(h.n))
            buckets[key] = buckets.get(key, 0) + 1
            return
        v = order[idx]
        earlier = [u for u in gg.neighbors[v] if pos[u] < idx]
        for tgt in dom[v]:
            row = h.rows[tgt]
            if all((row >> image[u]) & 1 for u in earlier):
                image[v] = tgt
                rec(idx + 1)

    rec(0)
    problems = []
    for key in buckets:
        if not is_automorphism(h, key):
            problems.append(f"restriction {key} is not an automorphism")
    if len(set(buckets.values())) > 1:
        problems.append(f"bucket sizes differ: {sorted(buckets.values())}")
    return AutFactorReport(ok=not problems, bucket_sizes=buckets, problems=problems)
