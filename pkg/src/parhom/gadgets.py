"""Hardness gadgets and partial hardness gadgets: the tuple types, the
definition verifiers, and the keyed text serialization used by the CLI.

Every condition is checked through walk parities; nothing is accepted on
structural grounds alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputFormatError
from .graphs import Graph, Path, distance_to_set, unique_shortest_path
from .walks import walk_parity


@dataclass
class HardnessGadget:
    """The tuple (beta, s, t, O, i, K, k, w) of walk-parity conditions.

    (O, {i}, K) partitions the neighborhood of s; k and w assign a length and
    an anchor vertex to each member of K.
    """

    beta: int
    s: int
    t: int
    i: int
    O: frozenset[int]
    K: frozenset[int] = frozenset()
    k: dict[int, int] = field(default_factory=dict)
    w: dict[int, int] = field(default_factory=dict)

    def vertices(self) -> set[int]:
        out = {self.s, self.t, self.i} | set(self.O) | set(self.K)
        out.update(self.w.values())
        return out


@dataclass
class PartialHardnessGadget:
    """A rooted gadget stub (s, i, O, P) still waiting for a 't' vertex.

    `path` is the unique shortest path from the root to i.
    """

    s: int
    i: int
    O: frozenset[int]
    path: Path


def verify_hardness_gadget(g: Graph, gadget: HardnessGadget) -> list[str]:
    """Every violated clause of the hardness-gadget definition (empty: valid)."""
    bad: list[str] = []
    beta, s, t, i = gadget.beta, gadget.s, gadget.t, gadget.i
    O, K = gadget.O, gadget.K
    for name, v in (("s", s), ("t", t), ("i", i)):
        if not (0 <= v < g.n):
            bad.append(f"{name}={v} is not a vertex")
    if bad:
        return bad
    for v in O | K:
        if not (0 <= v < g.n):
            bad.append(f"neighbor {v} is not a vertex")
    if bad:
        return bad
    if beta < 1:
        bad.append(f"beta={beta} must be a positive integer")
    nb = g.neighbors[s]
    if i not in nb or (O | K | {i}) != nb or (O & K) or i in O or i in K:
        bad.append("(O, {i}, K) is not a partition of the neighborhood of s")
    if set(gadget.k) != set(K) or set(gadget.w) != set(K):
        bad.append("k and w must be defined exactly on K")
    elif any(gadget.k[u] < 1 for u in K):
        bad.append("k(u) must be positive")
    elif any(not (0 <= gadget.w[u] < g.n) for u in K):
        bad.append("w(u) must be a vertex")
    if bad:
        return bad

    if len(O) % 2 == 0:
        bad.append(f"condition 1: |O| = {len(O)} is even")
    for o in sorted(O):
        for y in sorted(O | {i}):
            qualifying = [
                z
                for z in range(g.n)
                if g.has_edge(z, o) and g.has_edge(z, y) and walk_parity(g, z, t, beta)
            ]
            if qualifying != [s]:
                bad.append(
                    f"condition 2: qualifying vertices for o={o}, y={y} are "
                    f"{qualifying}, expected [{s}]"
                )
    if walk_parity(g, i, t, 1 + beta) != 0:
        bad.append(f"condition 3: odd number of {1 + beta}-walks from i={i} to t={t}")
    for u in sorted(K):
        ku, wu = gadget.k[u], gadget.w[u]
        if walk_parity(g, wu, u, ku) != 0:
            bad.append(f"condition 4: odd number of {ku}-walks from w({u})={wu} to {u}")
        for y in sorted(O | {i}):
            if walk_parity(g, wu, y, ku) != 1:
                bad.append(
                    f"condition 4: even number of {ku}-walks from w({u})={wu} to {y}"
                )
    return bad


def check_distance_requirements(g: Graph, gadget: HardnessGadget, v: int) -> list[str]:
    """Violated distance requirements of the gadget with respect to v."""
    bad = []
    oi = set(gadget.O) | {gadget.i}
    if distance_to_set(g, v, oi) + distance_to_set(g, v, {gadget.t}) <= gadget.beta - 1:
        bad.append(f"primary distance requirement fails at v={v}")
    for u in sorted(gadget.K):
        lhs = distance_to_set(g, v, {gadget.w[u]}) + distance_to_set(g, v, oi | {u})
        if lhs <= gadget.k[u] - 2:
            bad.append(f"secondary distance requirement fails at v={v} for u={u}")
    return bad


def verify_partial_gadget(g: Graph, x: int, pg: PartialHardnessGadget) -> list[str]:
    """Violated clauses of the partial-hardness-gadget definition for root x."""
    bad: list[str] = []
    s, i, O, path = pg.s, pg.i, pg.O, pg.path
    if not (0 <= s < g.n and 0 <= i < g.n):
        return ["s or i is not a vertex"]
    nb = g.neighbors[s]
    if i not in nb or (O | {i}) != nb or i in O:
        bad.append("({i}, O) is not a partition of the neighborhood of s")
    if len(O) % 2 == 0:
        bad.append(f"|O| = {len(O)} is even")
    if path.start != x or path.end != i:
        bad.append("P must run from the root to i")
        return bad
    if not path.valid_in(g):
        bad.append("P is not a path of the graph")
        return bad

    def unique_and_equal(target: int, want: Path, label: str):
        got = unique_shortest_path(g, x, target)
        if not isinstance(got, Path) or got != want:
            bad.append(f"{label} is not the unique shortest path from the root")

    unique_and_equal(i, path, "P")
    if s in path.vertices:
        bad.append("s lies on P")
    else:
        unique_and_equal(s, path.extend(s), "Ps")
        for o in sorted(O):
            if o in path.vertices or o == s:
                bad.append(f"o={o} lies on Ps")
            else:
                unique_and_equal(o, path.extend(s).extend(o), f"Ps{o}")
    return bad


# -- keyed text record ---------------------------------------------------------


def serialize_gadget(gadget: HardnessGadget) -> str:
    lines = [
        f"beta: {gadget.beta}",
        f"s: {gadget.s}",
        f"t: {gadget.t}",
        f"i: {gadget.i}",
        "O: " + " ".join(str(v) for v in sorted(gadget.O)),
        "K: " + " ".join(str(v) for v in sorted(gadget.K)),
        "k: " + " ".join(f"{u}={gadget.k[u]}" for u in sorted(gadget.K)),
        "w: " + " ".join(f"{u}={gadget.w[u]}" for u in sorted(gadget.K)),
    ]
    return "\n".join(lines) + "\n"


def parse_gadget(text: str) -> HardnessGadget:
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise InputFormatError(f"line {lineno}: expected 'key: value'")
        key, val = line.split(":", 1)
        key = key.strip()
        if key in fields:
            raise InputFormatError(f"line {lineno}: duplicate key {key!r}")
        fields[key] = val.strip()
    missing = {"beta", "s", "t", "i", "O", "K", "k", "w"} - set(fields)
    if missing:
        raise InputFormatError(f"missing keys: {sorted(missing)}")

    def ints(text: str) -> list[int]:
        try:
            return [int(tok) for tok in text.split()]
        except ValueError:
            raise InputFormatError(f"non-integer in {text!r}") from None

    def pairs(text: str) -> dict[int, int]:
        out = {}
        for tok in text.split():
            if "=" not in tok:
                raise InputFormatError(f"expected 'u=value', got {tok!r}")
            a, b = tok.split("=", 1)
            try:
                out[int(a)] = int(b)
            except ValueError:
                raise InputFormatError(f"non-integer in {tok!r}") from None
        return out

    try:
        beta, s, t, i = (int(fields[k]) for k in ("beta", "s", "t", "i"))
    except ValueError:
        raise InputFormatError("beta, s, t, i must be integers") from None
    return HardnessGadget(
        beta=beta,
        s=s,
        t=t,
        i=i,
        O=frozenset(ints(fields["O"])),
        K=frozenset(ints(fields["K"])),
        k=pairs(fields["k"]),
        w=pairs(fields["w"]),
    )
