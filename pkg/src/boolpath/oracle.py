"""Brute-force ground truth.

Nothing here touches the bit-matrix engine: longest paths come from an
exhaustive DFS over simple paths, and walk counts from exact integer matrix
powers (entry (i, j) of A^k counts the length-k walks from i to j).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapacityError
from .graph import Graph
from .pathset import PathSet

__all__ = [
    "OracleReport",
    "oracle_longest",
    "path_lengths",
    "walk_count",
    "matrix_power",
    "int_adjacency",
]

GENERAL_LIMIT = 20
ACYCLIC_LIMIT = 64
WALK_LIMIT = 64


@dataclass(frozen=True)
class OracleReport:
    length: int
    paths: PathSet
    walk_counts: dict[tuple[int, int, int], int] | None = field(default=None, compare=False)


def _acyclic(g: Graph) -> bool:
    if not g.directed:
        return g.m == g.n - 1
    # repeated sink removal
    out = {v: set(g.adjacency[v]) for v in g.vertices()}
    alive = set(g.vertices())
    changed = True
    while changed:
        changed = False
        for v in list(alive):
            if not out[v] & alive:
                alive.discard(v)
                changed = True
    return not alive


def oracle_longest(g: Graph, limit: int | None = None, walks_up_to: int | None = None) -> OracleReport:
    """Every maximum-length simple path, by DFS from every start vertex.

    Undirected paths are reported once, in canonical orientation. With
    ``walks_up_to`` set, the report also carries every walk count A^k[i, j]
    for k = 0..walks_up_to.
    """
    if limit is None:
        limit = ACYCLIC_LIMIT if _acyclic(g) else GENERAL_LIMIT
    if g.n > limit:
        raise CapacityError(f"oracle refuses n = {g.n} (limit {limit})")

    nbrs = [sorted(a) for a in g.adjacency]
    best = 0
    found: list[tuple[int, ...]] = []
    path: list[int] = []
    on_path = [False] * (g.n + 1)

    def dfs(u):
        nonlocal best, found
        path.append(u)
        on_path[u] = True
        extended = False
        for w in nbrs[u]:
            if not on_path[w]:
                extended = True
                dfs(w)
        if not extended:
            # only maximal paths can be longest
            length = len(path) - 1
            if length > best:
                best = length
                found = []
            if length == best and (g.directed or path[0] <= path[-1]):
                found.append(tuple(path))
        on_path[u] = False
        path.pop()

    for s in g.vertices():
        dfs(s)
    walks = None
    if walks_up_to is not None:
        walks = {}
        adj = int_adjacency(g)
        for k in range(walks_up_to + 1):
            power = matrix_power(adj, k)
            for i in range(g.n):
                for j in range(g.n):
                    walks[(i + 1, j + 1, k)] = power[i][j]
    return OracleReport(best, PathSet.of(found), walks)


def path_lengths(g: Graph, limit: int = GENERAL_LIMIT) -> dict[tuple[int, int], set[int]]:
    """Lengths of all simple paths from i to j, keyed by the ordered pair (i, j)."""
    if g.n > limit:
        raise CapacityError(f"oracle refuses n = {g.n} (limit {limit})")
    out: dict[tuple[int, int], set[int]] = {}
    on_path = [False] * (g.n + 1)

    def dfs(start, u, length):
        out.setdefault((start, u), set()).add(length)
        on_path[u] = True
        for w in g.adjacency[u]:
            if not on_path[w]:
                dfs(start, w, length + 1)
        on_path[u] = False

    for s in g.vertices():
        dfs(s, s, 0)
    return out


def int_adjacency(g: Graph) -> list[list[int]]:
    return [[1 if w in g.adjacency[v] else 0 for w in g.vertices()] for v in g.vertices()]


def matrix_power(m: list[list[int]], k: int) -> list[list[int]]:
    """Exact M^k by k - 1 schoolbook products (Python ints never overflow)."""
    n = len(m)
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(k):
        result = [
            [sum(result[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)
        ]
    return result


def walk_count(g: Graph, i: int, j: int, k: int) -> int:
    """Number of length-k walks from i to j."""
    for v in (i, j):
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} not in 1..{g.n}")
    if not 0 <= k <= WALK_LIMIT:
        raise ValueError(f"k must lie in 0..{WALK_LIMIT}")
    return matrix_power(int_adjacency(g), k)[i - 1][j - 1]
