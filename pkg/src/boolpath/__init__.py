"""Longest paths in trees, DAGs and block graphs from booleanized adjacency powers."""

__version__ = "0.1.0"

from .bitmat import BitMatrix, bool_power, bool_product, booleanize, is_all_ones, is_zero
from .errors import (
    CapacityError,
    ConsistencyError,
    DimensionError,
    GraphClassError,
    GraphParseError,
    LppError,
    NoThresholdError,
)
from .graph import (
    BlockDecomposition,
    Graph,
    GraphClass,
    adjacency_matrix,
    bfs_distances,
    block_decomposition,
    classify,
    format_graph,
    parse_graph,
    read_graph,
)
from .lpp_core import (
    LppResult,
    binary_search_min_true,
    block_lp,
    dag_longest_length,
    longest_chain_length,
    longest_path_length,
    tree_diameter,
    uniform_block_lp,
)
from .pathset import PathSet, canonical_path
from .paths import (
    Chain,
    all_longest_paths,
    block_all_longest_paths,
    count_block_longest_paths,
    count_longest_paths,
    dag_all_longest_paths,
    exact_distance_pairs,
    generate_all_longest_chains,
    generate_longest_chain,
    heaviest_chains,
    tree_all_longest_paths,
)
