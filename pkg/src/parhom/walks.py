"""Walk counting: parities over GF(2) and exact big-integer counts.

Parities come from powers of the adjacency matrix over GF(2), with rows stored
as int bitsets so a row XOR is one word-parallel operation. Powers are cached
per (graph, k) because gadget verification issues many queries with shared k.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import BudgetError
from .graphs import Graph

WALK_COUNT_CAP = 64


class GF2Matrix:
    """Square bit matrix; rows are int bitsets (bit j of rows[i] = entry i,j)."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: tuple[int, ...]):
        if len(rows) != n:
            raise ValueError("row count mismatch")
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def adjacency(cls, g: Graph) -> "GF2Matrix":
        return cls(g.n, g.rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def __mul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        out = []
        orows = other.rows
        for row in self.rows:
            acc = 0
            r = row
            while r:
                lsb = r & -r
                acc ^= orows[lsb.bit_length() - 1]
                r ^= lsb
            out.append(acc)
        return GF2Matrix(self.n, tuple(out))

    def power(self, k: int) -> "GF2Matrix":
        if k < 0:
            raise ValueError("negative power")
        result = GF2Matrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GF2Matrix)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))


@lru_cache(maxsize=4096)
def _adjacency_power(g: Graph, k: int) -> GF2Matrix:
    return GF2Matrix.adjacency(g).power(k)


def walk_parity(g: Graph, u: int, v: int, k: int) -> int:
    """Parity of the number of length-k walks from u to v."""
    if k < 0:
        raise ValueError("walk length must be nonnegative")
    return _adjacency_power(g, k).entry(u, v)


def walk_count(g: Graph, u: int, v: int, k: int, cap: int = WALK_COUNT_CAP) -> int:
    """Exact number of length-k walks from u to v (arbitrary precision).

    Independent of the GF(2) path: plain per-step vector dynamic programming.
    """
    if k < 0:
        raise ValueError("walk length must be nonnegative")
    if k > cap:
        raise BudgetError(f"walk length {k} exceeds cap {cap}")
    vec = [0] * g.n
    vec[u] = 1
    for _ in range(k):
        nxt = [0] * g.n
        for a in range(g.n):
            va = vec[a]
            if va:
                for b in g.neighbors[a]:
                    nxt[b] += va
        vec = nxt
    return vec[v]


def degree_parity(g: Graph, v: int) -> int:
    return g.degree(v) & 1
