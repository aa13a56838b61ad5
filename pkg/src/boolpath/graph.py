"""Graph model, text format, class validators and block decomposition.

File format::

    c optional comment
    p lpp u 3 2
    e 1 2
    e 2 3

``u`` or ``d`` selects undirected or directed; vertex ids run 1..n.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .bitmat import BitMatrix
from .errors import GraphClassError, GraphParseError

__all__ = [
    "Graph",
    "GraphClass",
    "BlockDecomposition",
    "parse_graph",
    "format_graph",
    "read_graph",
    "adjacency_matrix",
    "block_decomposition",
    "classify",
    "bfs_distances",
]


class GraphClass(str, enum.Enum):
    TREE = "tree"
    DAG = "dag"
    UNIFORM_BLOCK_GRAPH = "uniform-block-graph"
    BLOCK_GRAPH = "block-graph"
    COMPLETE_GRAPH = "complete-graph"
    OTHER = "other"

    def __str__(self):
        return self.value


BLOCK_CLASSES = frozenset(
    {GraphClass.BLOCK_GRAPH, GraphClass.UNIFORM_BLOCK_GRAPH, GraphClass.COMPLETE_GRAPH}
)


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n.

    Undirected edges are stored as ``(u, v)`` with ``u < v``. ``adjacency[v]``
    holds the (out-)neighbours of ``v``; index 0 is an unused placeholder.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    directed: bool = False
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        seen = set()
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) has a vertex outside 1..{self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if self.directed else (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].add(v)
            if not self.directed:
                adj[v].add(u)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], directed: bool = False,
                   check_connected: bool = True) -> Graph:
        g = cls(n, tuple(edges), directed)
        if check_connected and not g.is_connected():
            raise ValueError("graph is not connected")
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def underlying_adjacency(self) -> list[set[int]]:
        """Neighbour sets with edge direction ignored."""
        adj = [set(a) for a in self.adjacency]
        if self.directed:
            for u, v in self.edges:
                adj[v].add(u)
        return adj

    def is_connected(self) -> bool:
        """Connectivity, or weak connectivity for directed graphs."""
        adj = self.underlying_adjacency()
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_graph_valid: bool
    omega: int
    uniform: bool

    def orders(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def blocks_of(self, v: int) -> list[frozenset[int]]:
        return [b for b in self.blocks if v in b]


def parse_graph(text: str | bytes) -> Graph:
    """Parse the ``p lpp`` text format. Errors name the offending line."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphParseError("input is not ASCII") from exc
    header = None
    edges = []
    seen = set()
    last_line = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("c"):
            if line.startswith("c") and not (line == "c" or line.startswith("c ")):
                raise GraphParseError(f"unrecognized line {line!r}", lineno)
            continue
        last_line = lineno
        parts = line.split()
        if header is None:
            if len(parts) != 5 or parts[0] != "p" or parts[1] != "lpp" or parts[2] not in ("u", "d"):
                raise GraphParseError("expected header 'p lpp <u|d> <n> <m>'", lineno)
            try:
                n, m = int(parts[3]), int(parts[4])
            except ValueError:
                raise GraphParseError("vertex and edge counts must be integers", lineno) from None
            if n < 1 or m < 0:
                raise GraphParseError("need n >= 1 and m >= 0", lineno)
            header = (parts[2] == "d", n, m)
            continue
        directed, n, m = header
        if len(parts) != 3 or parts[0] != "e":
            raise GraphParseError("expected edge line 'e <u> <v>'", lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphParseError("edge endpoints must be integers", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"vertex id out of range 1..{n}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {u} {v}", lineno)
        if len(edges) >= m:
            raise GraphParseError(f"more than the declared {m} edges", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphParseError("missing header line", 1)
    directed, n, m = header
    if len(edges) != m:
        raise GraphParseError(f"declared {m} edges, found {len(edges)}", last_line)
    g = Graph(n, tuple(edges), directed)
    if not g.is_connected():
        raise GraphParseError("graph is not connected", last_line)
    return g


def read_graph(path) -> Graph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def format_graph(g: Graph) -> str:
    lines = [f"p lpp {'d' if g.directed else 'u'} {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def adjacency_matrix(g: Graph) -> BitMatrix:
    rows = []
    for v in g.vertices():
        bits = 0
        for w in g.adjacency[v]:
            bits |= 1 << (w - 1)
        rows.append(bits)
    return BitMatrix(g.n, rows)


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    """Hop distances from ``source`` along edge directions."""
    if not 1 <= source <= g.n:
        raise ValueError(f"vertex {source} not in 1..{g.n}")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in sorted(g.adjacency[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components via an iterative Hopcroft-Tarjan DFS."""
    if g.directed:
        raise GraphClassError("block decomposition needs an undirected graph")
    disc = [0] * (g.n + 1)
    low = [0] * (g.n + 1)
    timer = 1
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    nbrs = [sorted(a) for a in g.adjacency]

    for root in g.vertices():
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        if not nbrs[root]:
            blocks.append(frozenset({root}))
            continue
        edge_stack: list[tuple[int, int]] = []
        root_children = 0
        # frames: (vertex, parent, next-neighbour index)
        stack = [[root, 0, 0]]
        while stack:
            frame = stack[-1]
            u, parent, idx = frame
            if idx < len(nbrs[u]):
                frame[2] += 1
                w = nbrs[u][idx]
                if w == parent:
                    continue
                if not disc[w]:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((u, w))
                    stack.append([w, u, 0])
                elif disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
                continue
            stack.pop()
            if not stack:
                break
            p = parent
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                if p == root:
                    root_children += 1
                else:
                    cuts.add(p)
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (p, u):
                        break
                blocks.append(frozenset(comp))
        if root_children > 1:
            cuts.add(root)

    blocks.sort(key=lambda b: (min(b), sorted(b)))
    valid = all(
        len(b) >= 3 and all(len(g.adjacency[v] & b) == len(b) - 1 for v in b) for b in blocks
    )
    orders = {len(b) for b in blocks}
    return BlockDecomposition(
        blocks=tuple(blocks),
        cut_vertices=frozenset(cuts),
        block_graph_valid=valid,
        omega=max(orders),
        uniform=len(orders) == 1,
    )


def _is_acyclic(g: Graph) -> bool:
    indeg = [0] * (g.n + 1)
    for _, v in g.edges:
        indeg[v] += 1
    ready = [v for v in g.vertices() if indeg[v] == 0]
    seen = 0
    while ready:
        u = ready.pop()
        seen += 1
        for w in g.adjacency[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen == g.n


def classify(g: Graph) -> GraphClass:
    if g.directed:
        return GraphClass.DAG if g.is_connected() and _is_acyclic(g) else GraphClass.OTHER
    if not g.is_connected():
        return GraphClass.OTHER
    if g.m == g.n - 1:
        return GraphClass.TREE
    if g.m == g.n * (g.n - 1) // 2:
        return GraphClass.COMPLETE_GRAPH
    dec = block_decomposition(g)
    if dec.block_graph_valid and len(dec.blocks) >= 2:
        return GraphClass.UNIFORM_BLOCK_GRAPH if dec.uniform else GraphClass.BLOCK_GRAPH
    return GraphClass.OTHER


def require_class(g: Graph, allowed, what: str) -> GraphClass:
    cls = classify(g)
    if cls not in allowed:
        names = ", ".join(sorted(str(c) for c in allowed))
        raise GraphClassError(f"{what} needs a graph of class {names}; got {cls}")
    return cls
