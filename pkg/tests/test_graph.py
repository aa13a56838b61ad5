import random
from itertools import combinations

import pytest

from boolpath.errors import GraphClassError, GraphParseError
from boolpath.generators import gen_block_graph, gen_tree
from boolpath.graph import (
    Graph,
    GraphClass,
    adjacency_matrix,
    bfs_distances,
    block_decomposition,
    classify,
    format_graph,
    parse_graph,
)

from samples import B2, C4, CHAIN_DAG, DIAMOND, K3, K4, P3, P5, SINGLE, TWO_K4, cliques


class TestParse:
    def test_undirected_path(self):
        g = parse_graph("p lpp u 3 2\ne 1 2\ne 2 3")
        assert g == P3

    def test_directed_chain(self):
        g = parse_graph(b"p lpp d 3 2\ne 1 2\ne 2 3\n")
        assert g.directed and g.edges == ((1, 2), (2, 3))

    def test_comments_and_reversed_edges(self):
        g = parse_graph("c a path\np lpp u 3 2\nc middle\ne 2 1\ne 3 2\n")
        assert g == P3

    @pytest.mark.parametrize(
        "text, fragment, line",
        [
            ("p lpp u 2 1\ne 1 1", "self-loop", 2),
            ("p lpp u 3 2\ne 1 2\ne 2 1", "duplicate", 3),
            ("p lpp u 3 2\ne 1 2\ne 2 4", "out of range", 3),
            ("p lpp x 3 2\ne 1 2\ne 2 3", "header", 1),
            ("p lpp u 3 2\ne 1 2", "declared 2 edges", 2),
            ("p lpp u 3 1\ne 1 2\ne 2 3", "more than", 3),
            ("p lpp u 4 2\ne 1 2\ne 3 4", "not connected", 3),
            ("p lpp u 3 2\nx 1 2\ne 2 3", "edge line", 2),
            ("p lpp u 3 2\ne 1 two\ne 2 3", "integers", 2),
            ("comment\np lpp u 1 0", "unrecognized", 1),
            ("", "missing header", 1),
        ],
    )
    def test_errors_name_the_line(self, text, fragment, line):
        with pytest.raises(GraphParseError) as info:
            parse_graph(text)
        assert fragment in str(info.value)
        assert info.value.line == line

    def test_directed_two_cycle_is_allowed_but_other(self):
        g = parse_graph("p lpp d 2 2\ne 1 2\ne 2 1\n")
        assert classify(g) is GraphClass.OTHER

    def test_round_trip(self):
        for g in (P5, B2, DIAMOND, SINGLE, gen_tree(20, 3)):
            text = format_graph(g)
            assert text.endswith("\n") and "\r" not in text
            assert parse_graph(text) == g

    def test_writer_sorts_edges(self):
        g = Graph(3, ((2, 3), (2, 1)))
        assert format_graph(g) == "p lpp u 3 2\ne 1 2\ne 2 3\n"


class TestAdjacency:
    def test_examples(self):
        assert adjacency_matrix(P3).to_lists() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
        assert adjacency_matrix(CHAIN_DAG).to_lists() == [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
        assert adjacency_matrix(K3).to_lists() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]

    def test_symmetry_iff_undirected(self):
        for g in (P5, B2, K4, DIAMOND, CHAIN_DAG):
            a = adjacency_matrix(g)
            assert (a.rows == a.cols) == (not g.directed)


class TestBlocks:
    def test_two_triangles(self):
        dec = block_decomposition(B2)
        assert dec.blocks == (frozenset({1, 2, 3}), frozenset({3, 4, 5}))
        assert dec.cut_vertices == {3}
        assert dec.omega == 3 and dec.uniform and dec.block_graph_valid

    def test_path_edges_are_blocks(self):
        dec = block_decomposition(P3)
        assert dec.blocks == (frozenset({1, 2}), frozenset({2, 3}))
        assert dec.cut_vertices == {2}
        assert not dec.block_graph_valid

    def test_clique_is_one_block(self):
        dec = block_decomposition(K4)
        assert dec.blocks == (frozenset({1, 2, 3, 4}),) and not dec.cut_vertices and dec.omega == 4

    def test_single_vertex(self):
        assert block_decomposition(SINGLE).blocks == (frozenset({1}),)

    def test_directed_rejected(self):
        with pytest.raises(GraphClassError):
            block_decomposition(DIAMOND)

    def test_cycle_block_not_a_clique(self):
        dec = block_decomposition(C4)
        assert len(dec.blocks) == 1 and not dec.block_graph_valid


def _articulation_points_by_deletion(g):
    """Quadratic check: v is a cut vertex iff deleting it disconnects the rest."""
    cuts = set()
    for v in g.vertices():
        rest = [u for u in g.vertices() if u != v]
        if not rest:
            continue
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w != v and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(rest):
            cuts.add(v)
    return cuts


def _random_connected(rng, n):
    tree = gen_tree(n, rng.randrange(2**32))
    edges = set(tree.edges)
    for u, v in combinations(range(1, n + 1), 2):
        if rng.random() < rng.choice([0.0, 0.05, 0.15, 0.3]):
            edges.add((u, v))
    return Graph(n, tuple(edges))


def test_decomposition_against_deletion_check():
    rng = random.Random(2024)
    for _ in range(100):
        g = _random_connected(rng, rng.randint(1, 24))
        dec = block_decomposition(g)
        for u, v in g.edges:
            assert sum(1 for b in dec.blocks if u in b and v in b) == 1
        assert dec.cut_vertices == _articulation_points_by_deletion(g)
        multi = {v for v in g.vertices() if sum(v in b for b in dec.blocks) >= 2}
        assert multi == dec.cut_vertices
        assert list(dec.blocks) == sorted(dec.blocks, key=lambda b: (min(b), sorted(b)))


def test_trees_decompose_into_edges():
    for seed in range(30):
        g = gen_tree(2 + seed, seed)
        assert classify(g) is GraphClass.TREE
        dec = block_decomposition(g)
        assert len(dec.blocks) == g.n - 1 and all(len(b) == 2 for b in dec.blocks)


class TestClassify:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (P5, GraphClass.TREE),
            (SINGLE, GraphClass.TREE),
            (B2, GraphClass.UNIFORM_BLOCK_GRAPH),
            (TWO_K4, GraphClass.UNIFORM_BLOCK_GRAPH),
            (cliques(6, {1, 2, 3}, {3, 4, 5, 6}), GraphClass.BLOCK_GRAPH),
            (C4, GraphClass.OTHER),
            (K3, GraphClass.COMPLETE_GRAPH),
            (K4, GraphClass.COMPLETE_GRAPH),
            (DIAMOND, GraphClass.DAG),
            (CHAIN_DAG, GraphClass.DAG),
        ],
    )
    def test_examples(self, g, expected):
        assert classify(g) is expected

    def test_bridge_between_cliques_is_other(self):
        g = Graph(6, ((1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)))
        assert classify(g) is GraphClass.OTHER

    def test_directed_cycle_is_other(self):
        g = Graph(3, ((1, 2), (2, 3), (3, 1)), directed=True)
        assert classify(g) is GraphClass.OTHER

    def test_generated_block_graphs(self):
        rng = random.Random(5)
        for _ in range(30):
            orders = [rng.randint(3, 5) for _ in range(rng.randint(2, 5))]
            g = gen_block_graph(orders, rng.randrange(2**32))
            expected = (
                GraphClass.UNIFORM_BLOCK_GRAPH if len(set(orders)) == 1 else GraphClass.BLOCK_GRAPH
            )
            assert classify(g) is expected


class TestBfs:
    def test_examples(self):
        assert bfs_distances(P3, 1) == {1: 0, 2: 1, 3: 2}
        assert bfs_distances(K3, 2) == {1: 1, 2: 0, 3: 1}
        assert bfs_distances(CHAIN_DAG, 3) == {3: 0}

    def test_bad_vertex(self):
        with pytest.raises(ValueError):
            bfs_distances(P3, 4)


def test_graph_constructor_validation():
    with pytest.raises(ValueError):
        Graph(2, ((1, 1),))
    with pytest.raises(ValueError):
        Graph(2, ((1, 2), (2, 1)))
    with pytest.raises(ValueError):
        Graph.from_edges(4, [(1, 2), (3, 4)])
    assert Graph.from_edges(4, [(1, 2), (3, 4)], check_connected=False).m == 2
