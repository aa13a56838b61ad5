"""Seeded random instances for every supported class.

All randomness comes from ``random.Random(seed)`` (MT19937) through
``randrange``, ``shuffle`` and ``random``, so a seed fixes the output on any
CPython 3.x.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import Graph, GraphClass

__all__ = ["GenSpec", "gen_tree", "gen_block_graph", "gen_dag", "generate"]


@dataclass(frozen=True)
class GenSpec:
    graph_class: GraphClass
    seed: int
    n: int | None = None
    block_orders: tuple[int, ...] | None = None
    dag_edge_prob: Fraction | float | None = None

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.n is not None and self.n < 1:
            raise ValueError("n must be positive")
        if self.block_orders is not None and any(k < 3 for k in self.block_orders):
            raise ValueError("block orders must be >= 3")


def _relabel(n: int, edges, rng: random.Random) -> list[tuple[int, int]]:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return [(perm[u - 1], perm[v - 1]) for u, v in edges]


def gen_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return Graph(1, ())
    rng = random.Random(seed)
    seq = [rng.randrange(1, n + 1) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, tuple(edges))


def gen_block_graph(block_orders: Sequence[int], seed: int) -> Graph:
    """Cliques of the given orders glued at single vertices along a random tree shape.

    Each block after the first is attached at a uniformly chosen existing
    vertex, then all labels are shuffled.
    """
    if not block_orders:
        raise ValueError("need at least one block")
    if any(k < 3 for k in block_orders):
        raise ValueError("block orders must be >= 3")
    rng = random.Random(seed)
    edges = []
    n = 0
    for idx, order in enumerate(block_orders):
        if idx == 0:
            members = list(range(1, order + 1))
            n = order
        else:
            anchor = rng.randrange(1, n + 1)
            members = [anchor] + list(range(n + 1, n + order))
            n += order - 1
        edges.extend((u, v) for i, u in enumerate(members) for v in members[i + 1:])
    return Graph(n, tuple(_relabel(n, edges, rng)))


def gen_dag(n: int, p, seed: int) -> Graph:
    """Random DAG: shuffled topological order, forward pairs kept with probability p.

    Consecutive vertices of the order are then joined wherever the graph is
    not yet weakly connected across them.
    """
    if n < 1:
        raise ValueError("n must be positive")
    p = Fraction(p)
    if not 0 < p <= 1:
        raise ValueError("edge probability must lie in (0, 1]")
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = []
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                u, v = order[i], order[j]
                edges.append((u, v))
                parent[find(u)] = find(v)
    for i in range(n - 1):
        u, v = order[i], order[i + 1]
        if find(u) != find(v):
            edges.append((u, v))
            parent[find(u)] = find(v)
    return Graph(n, tuple(edges), directed=True)


def generate(spec: GenSpec) -> Graph:
    if spec.graph_class is GraphClass.TREE:
        return gen_tree(spec.n, spec.seed)
    if spec.graph_class is GraphClass.DAG:
        return gen_dag(spec.n, spec.dag_edge_prob, spec.seed)
    if spec.graph_class in (
        GraphClass.BLOCK_GRAPH,
        GraphClass.UNIFORM_BLOCK_GRAPH,
        GraphClass.COMPLETE_GRAPH,
    ):
        return gen_block_graph(spec.block_orders, spec.seed)
    raise ValueError(f"no generator for class {spec.graph_class}")
