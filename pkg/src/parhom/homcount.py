"""Exact, mod-2, and pinned homomorphism counting, plus generalized
independent-set parities.

Two counting strategies back every query: honest brute-force assignment search
(the oracle) and dynamic programming along a min-fill elimination order (the
scaling path). Exact tables hold Python big integers; mod-2 tables are uint8
bit tables reduced after every elimination.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import prod
from typing import Mapping

import numpy as np

from .errors import BudgetError, InputFormatError
from .graphs import Graph

WIDTH_CAP = 12
DEFAULT_BRUTE_BUDGET = 200_000
DEFAULT_TABLE_BUDGET = 20_000_000

PinningFunction = Mapping[int, frozenset]


def _budgets() -> tuple[int, int]:
    """(brute-force assignment budget, max DP table entries).

    PARHOM_BUDGET overrides both with a single integer.
    """
    raw = os.environ.get("PARHOM_BUDGET")
    if raw:
        try:
            val = int(raw)
        except ValueError:
            raise InputFormatError(f"PARHOM_BUDGET must be an integer, got {raw!r}") from None
        return val, val
    return DEFAULT_BRUTE_BUDGET, DEFAULT_TABLE_BUDGET


def normalize_pin(g: Graph, h: Graph, pin: PinningFunction | None) -> list[tuple[int, ...]]:
    """Per-vertex allowed target lists; unmentioned vertices get all of V(H)."""
    full = tuple(range(h.n))
    dom: list[tuple[int, ...]] = [full] * g.n
    if pin:
        for v, allowed in pin.items():
            if not (0 <= v < g.n):
                raise InputFormatError(f"pinned vertex {v} not in source graph")
            al = sorted(set(allowed))
            if any(not (0 <= a < h.n) for a in al):
                raise InputFormatError(f"pin for vertex {v} mentions a target outside V(H)")
            dom[v] = tuple(al)
    return dom


# -- brute force ----------------------------------------------------------------


def _brute_count(g: Graph, h: Graph, dom: list[tuple[int, ...]], budget: int) -> int:
    space = prod(len(d) for d in dom) if g.n else 1
    if space > budget:
        raise BudgetError(
            f"brute force needs {space} assignments, budget is {budget}"
        )
    # BFS-ish order so each new vertex sees an assigned neighbor early
    order: list[int] = []
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in g.sorted_neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    pos = {v: i for i, v in enumerate(order)}
    image = [0] * g.n
    hrows = h.rows

    def rec(i: int) -> int:
        if i == g.n:
            return 1
        v = order[i]
        earlier = [u for u in g.neighbors[v] if pos[u] < i]
        total = 0
        for t in dom[v]:
            row = hrows[t]
            if all((row >> image[u]) & 1 for u in earlier):
                image[v] = t
                total += rec(i + 1)
        return total

    return rec(0)


# -- tree decomposition -----------------------------------------------------------


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags over the source graph, a tree on the bags, and the width."""

    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]
    width: int


def min_fill_order(g: Graph) -> list[int]:
    """Greedy elimination order minimizing fill edges, smallest id on ties."""
    nbrs = [set(s) for s in g.neighbors]
    alive = set(range(g.n))
    order = []
    while alive:
        best, best_fill = None, None
        for v in sorted(alive):
            nv = nbrs[v] & alive
            fill = 0
            nvl = sorted(nv)
            for i, a in enumerate(nvl):
                for b in nvl[i + 1 :]:
                    if b not in nbrs[a]:
                        fill += 1
            if best_fill is None or fill < best_fill:
                best, best_fill = v, fill
        nv = nbrs[best] & alive
        nvl = sorted(nv)
        for i, a in enumerate(nvl):
            for b in nvl[i + 1 :]:
                nbrs[a].add(b)
                nbrs[b].add(a)
        alive.remove(best)
        order.append(best)
    return order


def tree_decomposition(g: Graph, order: list[int] | None = None) -> TreeDecomposition:
    """Tree decomposition induced by an elimination order (min-fill by default)."""
    if order is None:
        order = min_fill_order(g)
    pos = {v: i for i, v in enumerate(order)}
    nbrs = [set(s) for s in g.neighbors]
    bags = []
    later_of = []
    for v in order:
        later = {u for u in nbrs[v] if pos[u] > pos[v]}
        bags.append(frozenset({v} | later))
        later_of.append(later)
        for a in later:
            for b in later:
                if a != b:
                    nbrs[a].add(b)
    edges = []
    for i, later in enumerate(later_of):
        if later:
            j = min(later, key=lambda u: pos[u])
            edges.append((i, pos[j]))
        elif i + 1 < len(order):
            edges.append((i, i + 1))
    width = max((len(b) - 1 for b in bags), default=0)
    return TreeDecomposition(tuple(bags), tuple(edges), width)


def _elim_count(
    g: Graph,
    h: Graph,
    dom: list[tuple[int, ...]],
    mod2: bool,
    table_budget: int,
) -> int:
    order = min_fill_order(g)
    td_width = tree_decomposition(g, order).width
    if td_width > WIDTH_CAP:
        raise BudgetError(
            f"tree decomposition width {td_width} exceeds cap {WIDTH_CAP}"
        )
    sizes = [len(d) for d in dom]
    if any(s == 0 for s in sizes):
        return 0
    dtype = np.uint8 if mod2 else object
    factors: list[tuple[tuple[int, ...], np.ndarray]] = []
    for v in range(g.n):
        vec = np.ones(sizes[v], dtype=dtype)
        if not mod2:
            vec = np.array([1] * sizes[v], dtype=object)
        factors.append(((v,), vec))
    for u, v in g.edges:
        arr = np.zeros((sizes[u], sizes[v]), dtype=dtype)
        if not mod2:
            arr = np.array([[0] * sizes[v] for _ in range(sizes[u])], dtype=object)
        for i, a in enumerate(dom[u]):
            row = h.rows[a]
            for j, b in enumerate(dom[v]):
                if (row >> b) & 1:
                    arr[i, j] = 1
        factors.append(((u, v), arr))

    def combine(group):
        union = tuple(sorted(set().union(*(set(f[0]) for f in group))))
        entries = prod(sizes[x] for x in union)
        if entries > table_budget:
            raise BudgetError(
                f"DP table over bag {union} needs {entries} entries, budget is {table_budget}"
            )
        shape = tuple(sizes[x] for x in union)
        acc = None
        for fvars, arr in group:
            view_shape = tuple(sizes[x] if x in fvars else 1 for x in union)
            piece = arr.reshape(view_shape)
            acc = piece if acc is None else acc * piece
        return union, np.broadcast_to(acc, shape) if acc.shape != shape else acc

    for v in order:
        group = [f for f in factors if v in f[0]]
        factors = [f for f in factors if v not in f[0]]
        union, arr = combine(group)
        axis = union.index(v)
        if mod2:
            arr = (arr.sum(axis=axis, dtype=np.int64) % 2).astype(np.uint8)
        else:
            arr = arr.sum(axis=axis)
        rest = tuple(x for x in union if x != v)
        factors.append((rest, np.asarray(arr, dtype=dtype)))

    total = 1
    for _, arr in factors:
        total *= int(arr.reshape(()))
    return total % 2 if mod2 else total


# -- public counters -----------------------------------------------------------


def count_homs(
    g: Graph,
    h: Graph,
    pin: PinningFunction | None = None,
    method: str = "auto",
) -> int:
    """Exact number of homomorphisms from g to h satisfying the pinning."""
    dom = normalize_pin(g, h, pin)
    if any(len(d) == 0 for d in dom):
        return 0
    brute_budget, table_budget = _budgets()
    space = prod(len(d) for d in dom) if g.n else 1
    if method == "brute":
        return _brute_count(g, h, dom, brute_budget)
    if method == "treedec":
        return _elim_count(g, h, dom, mod2=False, table_budget=table_budget)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if space <= brute_budget:
        return _brute_count(g, h, dom, brute_budget)
    try:
        return _elim_count(g, h, dom, mod2=False, table_budget=table_budget)
    except BudgetError as exc:
        raise BudgetError(
            f"brute force needs {space} assignments (budget {brute_budget}) and {exc}"
        ) from None


def count_homs_mod2(
    g: Graph,
    h: Graph,
    pin: PinningFunction | None = None,
    method: str = "auto",
) -> int:
    """Parity of the homomorphism count; DP tables stay mod 2 throughout."""
    dom = normalize_pin(g, h, pin)
    if any(len(d) == 0 for d in dom):
        return 0
    brute_budget, table_budget = _budgets()
    space = prod(len(d) for d in dom) if g.n else 1
    if method == "brute":
        return _brute_count(g, h, dom, brute_budget) & 1
    if method == "treedec":
        return _elim_count(g, h, dom, mod2=True, table_budget=table_budget)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if space <= brute_budget:
        return _brute_count(g, h, dom, brute_budget) & 1
    try:
        return _elim_count(g, h, dom, mod2=True, table_budget=table_budget)
    except BudgetError as exc:
        raise BudgetError(
            f"brute force needs {space} assignments (budget {brute_budget}) and {exc}"
        ) from None


def count_pinned_homs(g: Graph, h: Graph, pin: PinningFunction, method: str = "auto") -> int:
    return count_homs(g, h, pin=pin, method=method)


def count_pinned_homs_mod2(g: Graph, h: Graph, pin: PinningFunction, method: str = "auto") -> int:
    return count_homs_mod2(g, h, pin=pin, method=method)


# -- independent sets -------------------------------------------------------------


def _closed_mask(g: Graph, v: int) -> int:
    return g.rows[v] | (1 << v)


def count_independent_sets(g: Graph) -> int:
    """Exact number of independent sets, by the standard branching recurrence."""

    rows = g.rows

    def count(alive: int) -> int:
        if alive == 0:
            return 1
        best, best_deg = -1, -1
        m = alive
        while m:
            lsb = m & -m
            v = lsb.bit_length() - 1
            m ^= lsb
            d = (rows[v] & alive).bit_count()
            if d > best_deg:
                best, best_deg = v, d
        if best_deg == 0:
            return 1 << alive.bit_count()
        v = best
        return count(alive & ~(1 << v)) + count(alive & ~(rows[v] | (1 << v)))

    return count((1 << g.n) - 1)


def independent_set_polynomial(g: Graph) -> list[int]:
    """Coefficient k = number of independent sets of size k."""

    rows = g.rows

    def poly(alive: int) -> list[int]:
        if alive == 0:
            return [1]
        best, best_deg = -1, -1
        m = alive
        while m:
            lsb = m & -m
            v = lsb.bit_length() - 1
            m ^= lsb
            d = (rows[v] & alive).bit_count()
            if d > best_deg:
                best, best_deg = v, d
        if best_deg == 0:
            # k isolated vertices contribute (1+x)^k
            k = alive.bit_count()
            out = [0] * (k + 1)
            c = 1
            for i in range(k + 1):
                out[i] = c
                c = c * (k - i) // (i + 1)
            return out
        v = best
        without = poly(alive & ~(1 << v))
        with_v = poly(alive & ~(rows[v] | (1 << v)))
        out = [0] * max(len(without), len(with_v) + 1)
        for i, c in enumerate(without):
            out[i] += c
        for i, c in enumerate(with_v):
            out[i + 1] += c
        return out

    return poly((1 << g.n) - 1)


def independent_set_parity(g: Graph) -> int:
    """Parity of the number of independent sets."""
    return count_independent_sets(g) & 1


def z_general_is(g: Graph, lam: int, mu: int, method: str = "auto") -> int:
    """Parity of the generalized independent-set sum with weights lam, mu.

    The sum runs over independent sets J and weighs each by
    lam^|J| * mu^(n-|J|). With both weights odd this is just the parity of the
    number of independent sets; an even weight kills all terms but boundary
    ones.
    """
    if lam < 0 or mu < 0:
        raise ValueError("weights are natural numbers")
    if method == "enumerate":
        if g.n > 25:
            raise BudgetError(f"enumeration capped at 25 vertices, got {g.n}")
        coeffs = independent_set_polynomial(g)
        total = sum(c * pow(lam, s) * pow(mu, g.n - s) for s, c in enumerate(coeffs))
        return total % 2
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    lam_odd, mu_odd = lam & 1, mu & 1
    if lam_odd and mu_odd:
        return independent_set_parity(g)
    if not lam_odd and mu_odd:
        return 1  # only the empty set survives
    if lam_odd and not mu_odd:
        return 1 if g.m == 0 else 0  # only J = V(G) survives, needs no edges
    return 1 if g.n == 0 else 0


# -- pin file format ----------------------------------------------------------------


def parse_pin_file(text: str) -> dict[int, frozenset]:
    """Parse lines "v: h1 h2 ..."; absent vertices are unrestricted."""
    pin: dict[int, frozenset] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise InputFormatError(f"line {lineno}: expected 'v: h1 h2 ...'")
        head, tail = line.split(":", 1)
        try:
            v = int(head)
            targets = frozenset(int(t) for t in tail.split())
        except ValueError:
            raise InputFormatError(f"line {lineno}: non-integer id") from None
        if v in pin:
            raise InputFormatError(f"line {lineno}: vertex {v} pinned twice")
        pin[v] = targets
    return pin


def serialize_pin(pin: PinningFunction) -> str:
    lines = []
    for v in sorted(pin):
        targets = " ".join(str(t) for t in sorted(pin[v]))
        lines.append(f"{v}: {targets}")
    return "\n".join(lines) + ("\n" if lines else "")
