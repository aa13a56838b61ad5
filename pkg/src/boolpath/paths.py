"""Longest-path enumeration, block chains and closed-form path counts.

All reconstruction works backwards from an end vertex using differences of
cached booleanized powers: a vertex ``k`` precedes ``j`` on a path from ``i``
of length ``n`` when ``k`` is adjacent to ``j`` and sits at the right power
difference from ``i``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import lpp_core
from .bitmat import BitMatrix, bool_product
from .errors import CapacityError, ConsistencyError, GraphClassError
from .graph import (
    BLOCK_CLASSES,
    Graph,
    GraphClass,
    adjacency_matrix,
    block_decomposition,
    classify,
    require_class,
)
from .pathset import PathSet, canonical_path

__all__ = [
    "DEFAULT_PATH_CAP",
    "PowerCache",
    "PathSet",
    "Chain",
    "canonical_path",
    "exact_distance_pairs",
    "generate_longest_chain",
    "generate_all_longest_chains",
    "heaviest_chains",
    "chain_power_sum",
    "tree_all_longest_paths",
    "dag_all_longest_paths",
    "block_all_longest_paths",
    "count_block_longest_paths",
    "all_longest_paths",
    "count_longest_paths",
]

DEFAULT_PATH_CAP = 10**6


class PowerCache:
    """beta(A^k) for k = 0, 1, ... built by successive products on demand.

    Negative exponents read as the zero matrix.
    """

    def __init__(self, a: BitMatrix):
        self.a = a
        self._powers = [BitMatrix.identity(a.n), a]
        self._zero = BitMatrix.zeros(a.n)

    def __getitem__(self, k: int) -> BitMatrix:
        if k < 0:
            return self._zero
        while len(self._powers) <= k:
            self._powers.append(bool_product(self._powers[-1], self.a))
        return self._powers[k]

    def row(self, k: int, i: int) -> int:
        return self[k].rows[i]


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Chain:
    """Blocks in order; ``joints[i]`` is the vertex shared by blocks i and i+1."""

    blocks: tuple[tuple[int, ...], ...]
    joints: tuple[int, ...]

    @classmethod
    def from_blocks(cls, blocks: Sequence[Iterable[int]]) -> Chain:
        bs = tuple(tuple(sorted(b)) for b in blocks)
        joints = []
        for left, right in zip(bs, bs[1:]):
            shared = set(left) & set(right)
            if len(shared) != 1:
                raise ValueError(f"consecutive blocks {left} and {right} share {len(shared)} vertices")
            joints.append(shared.pop())
        return cls(bs, tuple(joints))

    def canonical(self) -> Chain:
        if tuple(reversed(self.blocks)) < self.blocks:
            return Chain(tuple(reversed(self.blocks)), tuple(reversed(self.joints)))
        return self

    def weight(self) -> int:
        """Edges on a longest path through this chain: sum of (block order - 1)."""
        return sum(len(b) - 1 for b in self.blocks)

    def check(self, g: Graph | None = None) -> None:
        """Raise ValueError unless the chain intersection invariants hold."""
        bs = [set(b) for b in self.blocks]
        if len(self.joints) != max(len(bs) - 1, 0):
            raise ValueError("need exactly one joint between consecutive blocks")
        for i, j in enumerate(self.joints):
            if bs[i] & bs[i + 1] != {j}:
                raise ValueError(f"blocks {i} and {i + 1} do not meet exactly at {j}")
        for i, j in itertools.combinations(range(len(bs)), 2):
            if j > i + 1 and bs[i] & bs[j]:
                raise ValueError(f"non-consecutive blocks {i} and {j} intersect")
        if g is not None:
            for b in self.blocks:
                for u, v in itertools.combinations(b, 2):
                    if not g.has_edge(u, v):
                        raise ValueError(f"block {b} is not a clique in the graph")

    def segments(self) -> list[tuple[int, ...]]:
        """Vertices each block contributes besides its entry and exit joints."""
        out = []
        for i, b in enumerate(self.blocks):
            skip = set()
            if i > 0:
                skip.add(self.joints[i - 1])
            if i < len(self.joints):
                skip.add(self.joints[i])
            out.append(tuple(v for v in b if v not in skip))
        return out

    def path_count(self) -> int:
        return math.prod(math.factorial(len(s)) for s in self.segments())

    def __str__(self):
        return " | ".join(" ".join(map(str, b)) for b in self.blocks)


def _pair_rule(cls: GraphClass):
    if cls is GraphClass.TREE:
        return 2
    if cls in BLOCK_CLASSES:
        return 1
    if cls is GraphClass.DAG:
        return None
    raise GraphClassError(f"no exact-distance rule for class {cls}")


def exact_distance_pairs(g: Graph, cls: GraphClass, n: int,
                         powers: PowerCache | None = None) -> set[tuple[int, int]]:
    """Vertex pairs joined by a path of length exactly ``n`` (1-based ids).

    Trees use ``beta(A^n) - beta(A^(n-2))``, block graphs ``beta(A^n) - beta(A^(n-1))``;
    both give unordered pairs ``(i, j)`` with ``i < j``. DAGs give the ordered
    pairs with ``beta(A^n)[i, j] = 1``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    actual = classify(g)
    if actual is not cls and not (cls in BLOCK_CLASSES and actual in BLOCK_CLASSES):
        raise GraphClassError(f"graph is {actual}, not {cls}")
    gap = _pair_rule(cls)
    if powers is None:
        powers = PowerCache(adjacency_matrix(g))
    hi = powers[n]
    out = set()
    for i in range(g.n):
        row = hi.rows[i]
        if gap is not None:
            row &= ~powers.row(n - gap, i)
            row &= ~((1 << (i + 1)) - 1)
        for j in _bits(row):
            out.add((i + 1, j + 1))
    return out


def _block_distance(powers: PowerCache, u: int, w: int, limit: int) -> int:
    # least k with beta(A^k)[u, w] = 1, valid for u != w in a block graph
    for k in range(1, limit + 1):
        if powers[k][u, w]:
            return k
    raise ConsistencyError(f"no power up to {limit} connects indices {u} and {w}")


def _geodesic(powers: PowerCache, u: int, w: int, dist: int) -> list[int]:
    """Unique shortest u-w path in a block graph, 0-based indices."""
    a = powers.a
    path = [w]
    cur = w
    for n in range(dist, 0, -1):
        cand = powers.row(n - 1, u) & ~powers.row(n - 2, u) & a.rows[cur]
        if n - 1 >= 1:
            cand &= ~(1 << u)
        if cand.bit_count() != 1:
            raise ConsistencyError(
                f"expected one predecessor of {cur + 1} at distance {n - 1}, found {cand.bit_count()}"
            )
        cur = cand.bit_length() - 1
        path.append(cur)
    path.reverse()
    return path


def _chain_of_walk(g: Graph, vertices: Sequence[int]) -> Chain:
    blocks = []
    for a, b in zip(vertices, vertices[1:]):
        blocks.append((g.adjacency[a] & g.adjacency[b]) | {a, b})
    return Chain.from_blocks(blocks).canonical()


def _require_multiblock(g: Graph, what: str) -> GraphClass:
    return require_class(g, {GraphClass.BLOCK_GRAPH, GraphClass.UNIFORM_BLOCK_GRAPH}, what)


def generate_longest_chain(g: Graph, powers: PowerCache | None = None) -> Chain:
    """Chain of the least diametral pair, via its unique shortest path."""
    cls = _require_multiblock(g, "generate_longest_chain")
    if powers is None:
        powers = PowerCache(adjacency_matrix(g))
    length = lpp_core.longest_chain_length(g)
    u, w = min(exact_distance_pairs(g, cls, length, powers))
    chain = _chain_of_walk(g, [v + 1 for v in _geodesic(powers, u - 1, w - 1, length)])
    if len(chain.blocks) != length:
        raise ConsistencyError(f"chain has {len(chain.blocks)} blocks, expected {length}")
    return chain


def generate_all_longest_chains(g: Graph, powers: PowerCache | None = None) -> tuple[Chain, ...]:
    """Every chain with the maximum number of blocks, each once (up to reversal)."""
    cls = _require_multiblock(g, "generate_all_longest_chains")
    if powers is None:
        powers = PowerCache(adjacency_matrix(g))
    length = lpp_core.longest_chain_length(g)
    home = _home_blocks(g)
    chains = {}
    done = set()
    for u, w in sorted(exact_distance_pairs(g, cls, length, powers)):
        key = (home[u], home[w])
        if key in done:
            continue
        done.add(key)
        chain = _chain_of_walk(g, [v + 1 for v in _geodesic(powers, u - 1, w - 1, length)])
        chains[chain.blocks] = chain
    return tuple(chains[k] for k in sorted(chains))


def _home_blocks(g: Graph) -> dict[int, frozenset[int]]:
    """Map each non-cut vertex to its only block."""
    dec = block_decomposition(g)
    return {v: b for b in dec.blocks for v in b if v not in dec.cut_vertices}


def heaviest_chains(g: Graph, powers: PowerCache | None = None) -> tuple[Chain, ...]:
    """Every chain maximizing the sum of (block order - 1), each once.

    In a uniform block graph these are exactly the chains with the most
    blocks. With mixed block orders a chain with fewer, larger blocks can
    outweigh every longest chain, so all leaf-to-leaf chains are scored.
    """
    _require_multiblock(g, "heaviest_chains")
    if powers is None:
        powers = PowerCache(adjacency_matrix(g))
    dec = block_decomposition(g)
    reps = sorted(
        min(v for v in b if v not in dec.cut_vertices)
        for b in dec.blocks
        if any(v not in dec.cut_vertices for v in b)
    )
    limit = g.n
    best = -1
    chains: dict[tuple, Chain] = {}
    for u, w in itertools.combinations(reps, 2):
        dist = _block_distance(powers, u - 1, w - 1, limit)
        chain = _chain_of_walk(g, [v + 1 for v in _geodesic(powers, u - 1, w - 1, dist)])
        weight = chain.weight()
        if weight > best:
            best = weight
            chains = {}
        if weight == best:
            chains[chain.blocks] = chain
    return tuple(chains[k] for k in sorted(chains))


def chain_power_sum(chain: Chain, powers: PowerCache) -> int:
    """Sum over the chain's n-th block of beta(A^n)[a, v] - beta(A^(n-1))[a, v], v != a.

    ``a`` is the smallest non-joint vertex of the first block. Each block then
    contributes its vertices at distance exactly n from ``a``, which is the
    block order minus one.
    """
    first = set(chain.blocks[0]) - set(chain.joints[:1])
    alpha = min(first) - 1
    total = 0
    for n, block in enumerate(chain.blocks, start=1):
        for v in block:
            i = v - 1
            if i == alpha:
                continue
            total += powers[n][alpha, i] - powers[n - 1][alpha, i]
    return total


def tree_all_longest_paths(g: Graph, powers: PowerCache | None = None) -> PathSet:
    require_class(g, {GraphClass.TREE}, "tree_all_longest_paths")
    diameter = lpp_core.tree_diameter(g).length
    if diameter == 0:
        return PathSet.of([(1,)])
    if powers is None:
        powers = PowerCache(adjacency_matrix(g))
    a = powers.a
    out = []
    for i, j in sorted(exact_distance_pairs(g, GraphClass.TREE, diameter, powers)):
        s = i - 1
        cur = j - 1
        path = [cur]
        for n in range(diameter, 0, -1):
            cand = powers.row(n - 1, s) & ~powers.row(n - 3, s) & a.rows[cur]
            if cand.bit_count() != 1:
                raise ConsistencyError(
                    f"tree reconstruction branched at vertex {cur + 1} ({cand.bit_count()} candidates)"
                )
            cur = cand.bit_length() - 1
            path.append(cur)
        out.append(canonical_path([v + 1 for v in reversed(path)]))
    return PathSet.of(out)


def dag_all_longest_paths(g: Graph, cap: int = DEFAULT_PATH_CAP,
                          powers: PowerCache | None = None) -> PathSet:
    require_class(g, {GraphClass.DAG}, "dag_all_longest_paths")
    longest = lpp_core.dag_longest_length(g).length
    if longest == 0:
        return PathSet.of([(v,) for v in g.vertices()])
    if powers is None:
        powers = PowerCache(adjacency_matrix(g))
    a = powers.a
    out = []

    def extend(s, suffix, n):
        # suffix[0] is reached from s by a path of length n
        if n == 0:
            out.append(tuple(v + 1 for v in suffix))
            if len(out) > cap:
                raise CapacityError(f"more than {cap} longest paths")
            return
        for k in _bits(powers.row(n - 1, s) & a.cols[suffix[0]]):
            extend(s, [k] + suffix, n - 1)

    for i, j in sorted(exact_distance_pairs(g, GraphClass.DAG, longest, powers)):
        extend(i - 1, [j - 1], longest)
    return PathSet.of(out)


def count_block_longest_paths(g: Graph) -> int:
    """Closed-form number of longest paths (orientation-free).

    Each heaviest chain contributes the product, over blocks, of the
    factorial of the number of vertices that block contributes besides its
    joints: (|B_1|-1)! * prod (|B_i|-2)! * (|B_last|-1)!.
    """
    cls = require_class(g, BLOCK_CLASSES, "count_block_longest_paths")
    if cls is GraphClass.COMPLETE_GRAPH:
        return math.factorial(g.n) // 2 if g.n > 1 else 1
    return sum(c.path_count() for c in heaviest_chains(g))


def block_all_longest_paths(g: Graph, cap: int = DEFAULT_PATH_CAP) -> PathSet:
    cls = require_class(g, BLOCK_CLASSES, "block_all_longest_paths")
    expected = count_block_longest_paths(g)
    if expected > cap:
        raise CapacityError(f"{expected} longest paths exceed the cap of {cap}")
    if cls is GraphClass.COMPLETE_GRAPH:
        return PathSet.of(
            p for p in itertools.permutations(g.vertices()) if p[0] <= p[-1]
        )
    out = set()
    for chain in heaviest_chains(g):
        segs = chain.segments()
        joints = chain.joints
        for choice in itertools.product(*(itertools.permutations(s) for s in segs)):
            path = []
            for i, part in enumerate(choice):
                path.extend(part)
                if i < len(joints):
                    path.append(joints[i])
            out.add(canonical_path(path))
    result = PathSet.of(out)
    if result.count != expected:
        raise ConsistencyError(f"enumerated {result.count} paths, formula gives {expected}")
    return result


def all_longest_paths(g: Graph, cap: int = DEFAULT_PATH_CAP) -> PathSet:
    cls = classify(g)
    if cls is GraphClass.TREE:
        return tree_all_longest_paths(g)
    if cls is GraphClass.DAG:
        return dag_all_longest_paths(g, cap)
    if cls in BLOCK_CLASSES:
        return block_all_longest_paths(g, cap)
    raise GraphClassError(f"no algebraic longest-path method for class {cls}")


def count_longest_paths(g: Graph, cap: int = DEFAULT_PATH_CAP) -> int:
    """Closed form for block graphs; enumeration size for trees and DAGs."""
    if classify(g) in BLOCK_CLASSES:
        return count_block_longest_paths(g)
    return all_longest_paths(g, cap).count
