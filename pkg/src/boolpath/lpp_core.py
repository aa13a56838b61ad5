"""Longest-path lengths from booleanized adjacency powers.

Each class reduces to finding the least exponent at which a monotone matrix
predicate flips to true:

* trees: ``beta(A^(k+1)) == beta(A^(k-1))`` holds exactly for ``k >= diameter``;
* block graphs: ``beta(A^k) == J`` holds exactly for ``k >= chain length``;
* DAGs: ``beta(A^k) == 0`` holds exactly for ``k >= longest + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .bitmat import BitMatrix, bool_power, is_all_ones, is_zero
from .errors import ConsistencyError, GraphClassError, NoThresholdError
from .graph import (
    BLOCK_CLASSES,
    Graph,
    GraphClass,
    adjacency_matrix,
    block_decomposition,
    classify,
    require_class,
)

__all__ = [
    "LppResult",
    "binary_search_min_true",
    "tree_diameter",
    "dag_nilpotency_index",
    "dag_longest_length",
    "longest_chain_length",
    "uniform_block_lp",
    "block_lp",
    "longest_path_length",
]


@dataclass(frozen=True)
class LppResult:
    """Outcome of a length computation.

    ``length`` is None exactly when ``interval`` carries an epsilon-mode bracket.
    """

    graph_class: GraphClass
    length: int | None
    chain_length: int | None = None
    interval: tuple[int, int] | None = None


def binary_search_min_true(lo: int, hi: int, pred: Callable[[int], bool], epsilon: int = 1):
    """Least ``t`` in ``[lo, hi]`` with ``pred(t)``, for ``pred`` monotone false-then-true.

    With ``epsilon > 1`` the search stops early and returns ``(l, h)`` with
    ``h - l <= epsilon`` and ``l <= t <= h``.
    """
    if epsilon < 1:
        raise ValueError("epsilon must be >= 1")
    if lo > hi:
        raise ValueError(f"empty search range [{lo}, {hi}]")
    if not pred(hi):
        raise NoThresholdError(f"predicate is false at the upper bound {hi}")
    if pred(lo):
        return lo if epsilon == 1 else (lo, lo)
    # invariant: pred(lo) is false, pred(hi) is true
    while hi - lo > epsilon:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid
    if epsilon == 1:
        return hi
    return lo, hi


def _tree_pred(a: BitMatrix) -> Callable[[int], bool]:
    return lambda k: bool_power(a, k + 1) == bool_power(a, k - 1)


def tree_diameter(g: Graph, epsilon: int = 1) -> LppResult:
    require_class(g, {GraphClass.TREE}, "tree_diameter")
    if g.n == 1:
        return _result(GraphClass.TREE, 0, epsilon)
    found = binary_search_min_true(1, g.m, _tree_pred(adjacency_matrix(g)), epsilon)
    if epsilon == 1:
        return LppResult(GraphClass.TREE, found)
    return LppResult(GraphClass.TREE, None, interval=found)


def dag_nilpotency_index(g: Graph, epsilon: int = 1):
    """Least ``k >= 1`` with ``beta(A^k) == 0`` (or a bracket around it)."""
    require_class(g, {GraphClass.DAG}, "dag_nilpotency_index")
    a = adjacency_matrix(g)
    return binary_search_min_true(1, g.n, lambda k: is_zero(bool_power(a, k)), epsilon)


def dag_longest_length(g: Graph, epsilon: int = 1) -> LppResult:
    # A walk of the longest length L exists, so A^L != 0 and the first zero power is L + 1.
    found = dag_nilpotency_index(g, epsilon)
    if epsilon == 1:
        return LppResult(GraphClass.DAG, found - 1)
    lo, hi = found
    return LppResult(GraphClass.DAG, None, interval=(max(lo - 1, 0), hi - 1))


def longest_chain_length(g: Graph, epsilon: int = 1):
    """Number of blocks on a diametral block sequence (the graph diameter)."""
    cls = require_class(g, BLOCK_CLASSES, "longest_chain_length")
    if cls is GraphClass.COMPLETE_GRAPH:
        return 1 if epsilon == 1 else (1, 1)
    a = adjacency_matrix(g)
    return binary_search_min_true(1, g.m, lambda k: is_all_ones(bool_power(a, k)), epsilon)


def uniform_block_lp(g: Graph, epsilon: int = 1) -> LppResult:
    cls = require_class(
        g, {GraphClass.UNIFORM_BLOCK_GRAPH, GraphClass.COMPLETE_GRAPH}, "uniform_block_lp"
    )
    if cls is GraphClass.COMPLETE_GRAPH:
        return _result(cls, g.n - 1, epsilon, chain_length=1)
    step = block_decomposition(g).omega - 1
    if epsilon == 1:
        chain = longest_chain_length(g)
        return LppResult(cls, chain * step, chain_length=chain)
    # bracket the chain count tightly enough that the scaled bracket stays within epsilon
    inner = epsilon // step
    if inner <= 1:
        chain = longest_chain_length(g)
        return LppResult(cls, None, chain_length=chain, interval=(chain * step, chain * step))
    lo, hi = longest_chain_length(g, inner)
    if hi - lo <= 1:
        # the lower end is known false, so the bracket has already pinned the count
        return LppResult(cls, None, chain_length=hi, interval=(hi * step, hi * step))
    return LppResult(cls, None, interval=(lo * step, hi * step))


def block_lp(g: Graph, epsilon: int = 1) -> LppResult:
    """Longest path of a block graph as the block-order sum over a heaviest chain.

    The result is cross-checked against the difference-of-powers sum
    ``sum_n sum_{v in B_n} beta(A^n)[a, v] - beta(A^(n-1))[a, v]`` taken from
    an end vertex ``a`` of the chain; a disagreement raises ConsistencyError.
    """
    from . import paths

    cls = require_class(g, BLOCK_CLASSES, "block_lp")
    if cls is GraphClass.COMPLETE_GRAPH:
        return _result(cls, g.n - 1, epsilon, chain_length=1)
    chain_len = longest_chain_length(g)
    powers = paths.PowerCache(adjacency_matrix(g))
    chain = paths.heaviest_chains(g, powers)[0]
    by_orders = chain.weight()
    by_powers = paths.chain_power_sum(chain, powers)
    if by_orders != by_powers:
        raise ConsistencyError(
            f"block-order sum {by_orders} != power-difference sum {by_powers} for chain {chain}"
        )
    return _result(cls, by_orders, epsilon, chain_length=chain_len)


def _result(cls, length, epsilon, chain_length=None) -> LppResult:
    if epsilon == 1:
        return LppResult(cls, length, chain_length=chain_length)
    return LppResult(cls, None, chain_length=chain_length, interval=(length, length))


def longest_path_length(g: Graph, epsilon: int = 1) -> LppResult:
    """Dispatch on the graph class; Other raises GraphClassError."""
    cls = classify(g)
    if cls is GraphClass.TREE:
        return tree_diameter(g, epsilon)
    if cls is GraphClass.DAG:
        return dag_longest_length(g, epsilon)
    if cls in (GraphClass.UNIFORM_BLOCK_GRAPH, GraphClass.COMPLETE_GRAPH):
        return uniform_block_lp(g, epsilon)
    if cls is GraphClass.BLOCK_GRAPH:
        return block_lp(g, epsilon)
    raise GraphClassError(f"no algebraic longest-path method for class {cls}")
